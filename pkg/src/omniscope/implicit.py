"""Implicit structures: a recipe (S, T, C) for generating impossible-worlds
models.

S is a set of proto-worlds, T a possibility test, and C gives each
proto-world a theory: a literal-level description that may contain
contradictory pairs.  Inducing turns this into a K45 impossible-worlds
structure: consistent-theory worlds become genuine worlds, T-approved
worlds become the possible set, and inconsistent-but-possible worlds
become impossible worlds whose C answers membership queries by what the
literals force.

Two worked generators are included: the primality example (the agent
cannot tell which numbers are prime, so every combination of primality
facts gets a world) and the policy-database example (rules fire on an
antecedent assignment and may stuff contradictory conclusions into a
world's theory).
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import And, Const, Not, Prop, render
from .structures import ClassTag, EpistemicStructure


@dataclass(frozen=True)
class WorldTheory:
    """All propositional formulas forced by a literal set over a declared
    vocabulary.

    Membership of a compound formula follows the literal set with
    truth-value sets: a proposition assigned both values supports both a
    formula and its negation, which is exactly how Example-3-style
    impossible worlds behave.  A formula is a member when the literals
    force it true (possibly alongside false); unmentioned propositions
    force nothing.
    """

    vocabulary: tuple  # sorted proposition names
    literals: frozenset  # of (name, bool)

    @staticmethod
    def make(vocabulary, literals):
        return WorldTheory(tuple(sorted(vocabulary)), frozenset(literals))

    def consistent(self):
        return not any((name, False) in self.literals
                       for name, value in self.literals if value)

    def assignment(self):
        """Total assignment over the vocabulary (unmentioned names default
        to false).  Only meaningful for consistent theories."""
        if not self.consistent():
            raise ValueError("inconsistent theory has no assignment")
        base = {name: False for name in self.vocabulary}
        for name, value in self.literals:
            base[name] = value
        return base

    def _values(self, f):
        """Set of truth values the literals support for f (Belnap-style)."""
        if isinstance(f, Prop):
            out = set()
            if (f.name, True) in self.literals:
                out.add(True)
            if (f.name, False) in self.literals:
                out.add(False)
            return out
        if isinstance(f, Const):
            return {f.value}
        if isinstance(f, Not):
            return {not v for v in self._values(f.sub)}
        if isinstance(f, And):
            left = self._values(f.left)
            right = self._values(f.right)
            out = set()
            if True in left and True in right:
                out.add(True)
            if False in left or False in right:
                out.add(False)
            return out
        return set()  # K-formulas and likelihood atoms are never members

    def contains_formula(self, f):
        return True in self._values(f)

    def to_doc(self):
        return {
            "vocabulary": list(self.vocabulary),
            "literals": sorted(render(Prop(n)) if v else "~" + n
                               for n, v in self.literals),
        }

    @staticmethod
    def from_doc(doc):
        literals = set()
        for text in doc.get("literals", []):
            text = text.strip()
            if text.startswith("~"):
                literals.add((text[1:].strip(), False))
            else:
                literals.add((text, True))
        return WorldTheory.make(doc.get("vocabulary", ()), literals)


@dataclass(frozen=True)
class ProtoWorld:
    id: str
    theory: WorldTheory


@dataclass
class ImplicitStructure:
    worlds: list        # of ProtoWorld
    test: object        # callable ProtoWorld -> bool
    vocabulary: tuple

    def possible_ids(self):
        return [w.id for w in self.worlds if self.test(w)]


def induce(implicit):
    """The impossible-worlds structure an implicit description generates.

    W keeps the consistent-theory proto-worlds, W' the T-approved ones;
    impossible worlds answer membership through their theory.
    """
    worlds = [w.id for w in implicit.worlds if w.theory.consistent()]
    possible = implicit.possible_ids()
    pi = {}
    for proto in implicit.worlds:
        if proto.theory.consistent():
            assignment = proto.theory.assignment()
            pi[proto.id] = {name: assignment.get(name, False)
                            for name in implicit.vocabulary}
    C = {proto.id: proto.theory for proto in implicit.worlds
         if proto.id in set(possible) - set(worlds)}
    structure = EpistemicStructure(
        tag=ClassTag("impossible", "K45"),
        worlds=frozenset(worlds),
        possible=frozenset(possible),
        pi=pi,
        C=C,
    )
    return structure


def refine(implicit, new_test):
    """Shrink the possible set: the new test may only reject worlds the old
    one accepted."""
    for proto in implicit.worlds:
        if new_test(proto) and not implicit.test(proto):
            raise ValueError("refinement must be monotone: %r newly accepted"
                             % proto.id)
    return ImplicitStructure(list(implicit.worlds), new_test,
                             implicit.vocabulary)


# ---------------------------------------------------------------------------
# Worked generators

def is_prime(n):
    """Ground-truth primality by trial division."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def prime_prop(n):
    return "Prime_%d" % n


def primality_example(nums):
    """One proto-world per combination of primality guesses for nums.

    Every world passes the initial test: the agent knows one of them is the
    real world but cannot compute which.
    """
    nums = list(nums)
    if not nums:
        raise ValueError("need at least one number")
    if any(n < 2 for n in nums):
        raise ValueError("numbers must be >= 2")
    vocabulary = [prime_prop(n) for n in nums]
    worlds = []
    for bits in range(1 << len(nums)):
        literals = {(vocabulary[i], bool(bits >> i & 1))
                    for i in range(len(nums))}
        label = "w_" + "".join(
            "p" if bits >> i & 1 else "c" for i in range(len(nums)))
        worlds.append(ProtoWorld(label, WorldTheory.make(vocabulary, literals)))
    return ImplicitStructure(worlds, lambda proto: True, tuple(sorted(vocabulary)))


def ground_truth_test(nums):
    """Test keeping only worlds whose primality guesses are all correct."""
    truth = {prime_prop(n): is_prime(n) for n in nums}

    def test(proto):
        return all((name, truth[name]) in proto.theory.literals
                   for name in truth)

    return test


def policy_example(rules, facts_vocabulary):
    """Proto-worlds from a rule database: every assignment over the
    antecedent vocabulary, augmented with the conclusion literals of the
    rules it fires.

    rules: list of (antecedent, conclusion) pairs, each a list of
    (proposition, bool) literals.  The conclusion vocabulary must be
    disjoint from the antecedent vocabulary.
    """
    facts = sorted(set(facts_vocabulary)
                   | {name for ant, _ in rules for name, _ in ant})
    conclusions = sorted({name for _, con in rules for name, _ in con})
    overlap = set(facts) & set(conclusions)
    if overlap:
        raise ValueError("conclusion vocabulary overlaps antecedents: %s"
                         % sorted(overlap))

    vocabulary = tuple(sorted(set(facts) | set(conclusions)))
    worlds = []
    for bits in range(1 << len(facts)):
        assignment = {facts[i]: bool(bits >> i & 1) for i in range(len(facts))}
        literals = {(name, value) for name, value in assignment.items()}
        for antecedent, conclusion in rules:
            if all(assignment[name] == value for name, value in antecedent):
                literals |= set(conclusion)
        label = "w_" + "".join("1" if assignment[f] else "0" for f in facts)
        worlds.append(ProtoWorld(label, WorldTheory.make(vocabulary, literals)))
    return ImplicitStructure(worlds, lambda proto: True, vocabulary)


# ---------------------------------------------------------------------------
# Rule files: one rule per line, "lit & lit -> lit & lit", ~ negates,
# blank lines and # comments ignored.

def parse_rules(text):
    rules = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ValueError("line %d: missing -> in rule" % lineno)
        left, right = line.split("->", 1)
        rules.append((_parse_literal_conj(left, lineno),
                      _parse_literal_conj(right, lineno)))
    return rules


def _parse_literal_conj(text, lineno):
    literals = []
    for chunk in text.split("&"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("line %d: empty literal" % lineno)
        if chunk.startswith("~"):
            literals.append((chunk[1:].strip(), False))
        else:
            literals.append((chunk, True))
    return literals
