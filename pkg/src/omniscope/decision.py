"""Satisfiability and validity per structure class.

The decision procedures follow the completeness constructions class by
class:

* syntactic, algorithmic, K45 awareness and K45/KD45- impossible-worlds
  structures place no constraints on knowledge at all, so satisfiability is
  propositional satisfiability with the outermost K-subformulas treated as
  fresh atoms; the witness is the matching one-world construction.
* KD45 and S5 awareness / impossible-worlds classes have small-model
  theorems (two worlds, three worlds, one world, one possible plus one
  impossible); the decider searches exactly those shapes, with awareness
  and C sets ranging over the K-arguments of the query, which are the only
  memberships its truth can consult.
* standard Kripke classes are decided by enumerating which truth
  assignments the agent considers possible.

Every SAT verdict carries a witness structure that is re-validated and
re-model-checked before being returned.  brute_force_sat enumerates all
structures within explicit bounds and is the oracle the deciders are
tested against.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

from .checker import holds
from .formula import (And, Const, Know, LikAtom, Not, Prop, render,
                      ast_size, propositions, subformulas)
from .messages import TableAlgorithm
from .structures import ClassTag, EpistemicStructure, make_structure, validate

SAT = "SAT"
UNSAT = "UNSAT"

DUMMY_PROP = "p0"


@dataclass
class Verdict:
    result: str
    structure: EpistemicStructure = None
    world: str = None
    bound_used: int = 0

    @property
    def is_sat(self):
        return self.result == SAT


class DecisionError(ValueError):
    pass


def _formula_key(f):
    return (ast_size(f), render(f))


def know_arguments(f):
    """All arguments of K-subformulas at any nesting depth, ordered."""
    return sorted({g.sub for g in subformulas(f) if isinstance(g, Know)},
                  key=_formula_key)


def outer_know_atoms(f):
    """Outermost K-subformulas of f, ordered."""
    out = set()
    _outer_know(f, out)
    return sorted(out, key=_formula_key)


def _outer_know(f, out):
    if isinstance(f, Know):
        out.add(f)
    elif isinstance(f, (Not,)):
        _outer_know(f.sub, out)
    elif isinstance(f, And):
        _outer_know(f.left, out)
        _outer_know(f.right, out)
    elif isinstance(f, LikAtom):
        pass  # likelihood arguments are propositional


def eval_skeleton(f, prop_env, k_env, lik_env=None):
    """Evaluate f with K-subformulas looked up in k_env (keyed by their
    argument) and likelihood atoms in lik_env.  The lookup does not recurse
    into K-arguments, so k_env decides each knowledge atom outright."""
    if isinstance(f, Prop):
        return prop_env[f.name]
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Not):
        return not eval_skeleton(f.sub, prop_env, k_env, lik_env)
    if isinstance(f, And):
        return (eval_skeleton(f.left, prop_env, k_env, lik_env)
                and eval_skeleton(f.right, prop_env, k_env, lik_env))
    if isinstance(f, Know):
        return k_env[f.sub]
    if isinstance(f, LikAtom):
        if lik_env is None:
            raise DecisionError("likelihood atom outside probabilistic search")
        return lik_env[f]
    raise TypeError(f)


def sorted_props(f):
    names = sorted(propositions(f))
    return names or [DUMMY_PROP]


def _assignments(names):
    """All truth assignments over names, in binary-counter order."""
    out = []
    for bits in range(1 << len(names)):
        out.append({names[i]: bool(bits >> i & 1) for i in range(len(names))})
    return out


# ---------------------------------------------------------------------------
# Fast structure evaluation.  Structures are represented compactly: worlds
# are integers, truth values are bitmasks over worlds.  This drives both
# the small-shape searches and the brute-force oracle; final witnesses are
# always re-checked against checker.holds.

class _Compiled:
    def __init__(self, f):
        self.nodes = []        # (kind, payload) in dependency order
        self.index = {}        # formula -> node position
        self.root = self._add(f)
        self.karg_nodes = sorted(
            {self.nodes[pos][1] for pos in range(len(self.nodes))
             if self.nodes[pos][0] == "know"})

    def _add(self, f):
        pos = self.index.get(f)
        if pos is not None:
            return pos
        if isinstance(f, Prop):
            node = ("prop", f.name)
        elif isinstance(f, Const):
            node = ("const", f.value)
        elif isinstance(f, Not):
            node = ("not", self._add(f.sub))
        elif isinstance(f, And):
            node = ("and", (self._add(f.left), self._add(f.right)))
        elif isinstance(f, Know):
            node = ("know", self._add(f.sub))
        else:
            raise DecisionError(
                "probabilistic formula in a non-probabilistic search: %s"
                % render(f))
        self.nodes.append(node)
        self.index[f] = pos = len(self.nodes) - 1
        return pos

    def formula_at(self, pos):
        for f, i in self.index.items():
            if i == pos:
                return f
        raise KeyError(pos)


class _Small:
    """Compact structure: n worlds 0..n-1, bitmask encodings.

    real_mask: worlds in W.  possible_mask: worlds in W'.  assign: per
    world, dict of prop values (only real worlds).  member: per world, a
    set of node positions whose formulas belong to A(w) / C(w); its role
    depends on the approach.  yes_nodes: node positions the knowledge
    algorithm answers "Yes" on (algorithmic only).
    """

    __slots__ = ("n", "real_mask", "possible_mask", "assign", "member",
                 "yes_nodes")

    def __init__(self, n, real_mask, possible_mask, assign, member=None,
                 yes_nodes=frozenset()):
        self.n = n
        self.real_mask = real_mask
        self.possible_mask = possible_mask
        self.assign = assign
        self.member = member or {}
        self.yes_nodes = yes_nodes


def _eval_small(comp, small, approach):
    values = []
    real = small.real_mask
    possible = small.possible_mask
    imp_mask_for = small.member  # node pos -> mask of worlds listing it
    for pos, (kind, payload) in enumerate(comp.nodes):
        imp_bits = imp_mask_for.get(pos, 0) & ~real
        if kind == "prop":
            val = 0
            for w in range(small.n):
                if real >> w & 1 and small.assign[w].get(payload, False):
                    val |= 1 << w
        elif kind == "const":
            val = real if payload else 0
        elif kind == "not":
            val = ~values[payload] & real
        elif kind == "and":
            val = values[payload[0]] & values[payload[1]] & real
        else:  # know
            arg_val = values[payload]
            everywhere = (arg_val & possible) == possible
            if approach == "syntactic":
                val = imp_mask_for.get(payload, 0) & real
            elif approach == "algorithmic":
                val = real if payload in small.yes_nodes else 0
            elif approach == "awareness":
                val = (imp_mask_for.get(payload, 0) & real) if everywhere else 0
            else:  # standard, impossible
                val = real if everywhere else 0
        values.append(val | imp_bits)
    return values[comp.root]


def _small_to_structure(comp, small, tag, prop_names):
    worlds = ["w%d" % i for i in range(small.n)]
    real = [w for i, w in enumerate(worlds) if small.real_mask >> i & 1]
    possible = [w for i, w in enumerate(worlds) if small.possible_mask >> i & 1]
    pi = {}
    for i, w in enumerate(worlds):
        if small.real_mask >> i & 1:
            pi[w] = {p: small.assign[i].get(p, False) for p in prop_names}
    member_sets = {}
    for pos, mask in small.member.items():
        f = comp.formula_at(pos)
        for i in range(small.n):
            if mask >> i & 1:
                member_sets.setdefault(worlds[i], set()).add(f)

    C = A = algorithm = None
    if tag.approach == "syntactic":
        C = {w: frozenset(member_sets.get(w, ())) for w in real}
    elif tag.approach == "impossible":
        C = {w: frozenset(member_sets.get(w, ()))
             for w in possible if w not in set(real)}
    elif tag.approach == "awareness":
        A = {w: frozenset(member_sets.get(w, ())) for w in real}
    elif tag.approach == "algorithmic":
        algorithm = TableAlgorithm(
            {comp.formula_at(pos) for pos in small.yes_nodes})
    return make_structure(tag, real, possible, pi, C=C, A=A,
                          algorithm=algorithm)


def _masks(universe_size):
    return range(1 << universe_size)


def _member_dict(karg_nodes, per_world_masks):
    """per_world_masks: list of (world, subset-bits over karg_nodes)."""
    member = {}
    for world, bits in per_world_masks:
        for j, pos in enumerate(karg_nodes):
            if bits >> j & 1:
                member[pos] = member.get(pos, 0) | (1 << world)
    return member


def _first_world(mask):
    return (mask & -mask).bit_length() - 1


# ---------------------------------------------------------------------------
# satisfiable

def satisfiable(f, tag):
    """Small-model satisfiability for the non-probabilistic language."""
    if tag.probabilistic:
        raise DecisionError("use satisfiable_prob for probabilistic classes")
    if any(isinstance(g, LikAtom) for g in subformulas(f)):
        raise DecisionError("likelihood atom in a non-probabilistic query")

    approach, modal = tag.approach, tag.modal
    if approach in ("syntactic", "algorithmic"):
        return _prop_route(f, tag)
    if approach == "awareness":
        if modal == "K45":
            return _prop_route(f, tag)
        if modal == "KD45":
            return _search_kd45_awareness(f, tag)
        if modal == "S5":
            return _search_s5_awareness(f, tag)
        raise DecisionError("KD45- awareness structures are not defined")
    if approach == "impossible":
        if modal in ("K45", "KD45-"):
            return _prop_route(f, tag)
        if modal == "KD45":
            return _search_kd45_impossible(f, tag)
        return _search_s5_impossible(f, tag)
    if approach == "standard":
        return _search_standard(f, tag)
    raise DecisionError("unsupported class %s" % tag.spelled())


def _finish(tag, structure, world, f):
    problems = validate(structure)
    if problems:
        raise AssertionError("witness fails validation: %s" % problems)
    if not holds(structure, world, f):
        raise AssertionError("witness fails the model checker")
    return Verdict(SAT, structure, world,
                   bound_used=len(structure.worlds | structure.possible))


def _prop_route(f, tag):
    """Propositional satisfiability over props plus outermost K-atoms,
    realized by the matching one-world construction."""
    props = sorted_props(f)
    katoms = outer_know_atoms(f)
    for assignment in _assignments(props):
        for bits in _masks(len(katoms)):
            k_env = {katoms[j].sub: bool(bits >> j & 1)
                     for j in range(len(katoms))}
            if eval_skeleton(f, assignment, k_env):
                known = frozenset(arg for arg, v in k_env.items() if v)
                structure = _single_world(tag, assignment, known)
                return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def _single_world(tag, assignment, known):
    pi = {"w0": dict(assignment)}
    if tag.approach == "impossible":
        return make_structure(tag, ["w0"], ["w1"], pi, C={"w1": known})
    if tag.approach == "syntactic":
        return make_structure(tag, ["w0"], [], pi, C={"w0": known})
    if tag.approach == "awareness":
        return make_structure(tag, ["w0"], [], pi, A={"w0": known})
    if tag.approach == "algorithmic":
        return make_structure(tag, ["w0"], [], pi,
                              algorithm=TableAlgorithm(known))
    raise DecisionError(tag.approach)


def _search_kd45_awareness(f, tag):
    """Designated world w0 plus a single possible world w1, awareness sets
    over the K-arguments of f."""
    comp = _Compiled(f)
    props = sorted_props(f)
    kargs = comp.karg_nodes
    assignments = _assignments(props)
    for pi0, pi1 in product(assignments, repeat=2):
        assign = [pi0, pi1]
        for a0 in _masks(len(kargs)):
            for a1 in _masks(len(kargs)):
                member = _member_dict(kargs, [(0, a0), (1, a1)])
                small = _Small(2, 0b11, 0b10, assign, member)
                if _eval_small(comp, small, "awareness") & 1:
                    structure = _small_to_structure(comp, small, tag, props)
                    return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def _search_s5_awareness(f, tag):
    comp = _Compiled(f)
    props = sorted_props(f)
    kargs = comp.karg_nodes
    for pi0 in _assignments(props):
        for a0 in _masks(len(kargs)):
            member = _member_dict(kargs, [(0, a0)])
            small = _Small(1, 0b1, 0b1, [pi0], member)
            if _eval_small(comp, small, "awareness") & 1:
                structure = _small_to_structure(comp, small, tag, props)
                return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def _search_kd45_impossible(f, tag):
    """Worlds w0, w1 possible with w1 considered possible, plus one
    impossible world w2 carrying a C-set over the K-arguments."""
    comp = _Compiled(f)
    props = sorted_props(f)
    kargs = comp.karg_nodes
    assignments = _assignments(props)
    for pi0, pi1 in product(assignments, repeat=2):
        assign = [pi0, pi1, {}]
        for c2 in _masks(len(kargs)):
            member = _member_dict(kargs, [(2, c2)])
            small = _Small(3, 0b011, 0b110, assign, member)
            if _eval_small(comp, small, "impossible") & 1:
                structure = _small_to_structure(comp, small, tag, props)
                return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def _search_s5_impossible(f, tag):
    comp = _Compiled(f)
    props = sorted_props(f)
    kargs = comp.karg_nodes
    for pi0 in _assignments(props):
        for c1 in _masks(len(kargs)):
            member = _member_dict(kargs, [(1, c1)])
            small = _Small(2, 0b01, 0b11, [pi0, {}], member)
            if _eval_small(comp, small, "impossible") & 1:
                structure = _small_to_structure(comp, small, tag, props)
                return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def _search_standard(f, tag):
    """Enumerate which truth assignments the agent considers possible."""
    comp = _Compiled(f)
    props = sorted_props(f)
    assignments = _assignments(props)
    n_assign = len(assignments)
    for pi0 in assignments:
        for dbits in range(1 << n_assign):
            chosen = [assignments[i] for i in range(n_assign)
                      if dbits >> i & 1]
            if tag.modal in ("KD45", "S5") and not chosen:
                continue
            if tag.modal == "S5":
                worlds = [pi0] + [a for a in chosen if a != pi0]
                n = len(worlds)
                mask = (1 << n) - 1
                small = _Small(n, mask, mask, worlds)
            else:
                worlds = [pi0] + chosen
                n = len(worlds)
                small = _Small(n, (1 << n) - 1, ((1 << n) - 1) & ~1, worlds)
            if _eval_small(comp, small, "standard") & 1:
                structure = _small_to_structure(comp, small, tag, props)
                return _finish(tag, structure, "w0", f)
    return Verdict(UNSAT)


def valid(f, tag):
    """Validity = truth at every possible world in W, in every structure of
    the class.  Returns (bool, countermodel-verdict-or-None)."""
    if tag.probabilistic:
        from .prob import satisfiable_prob
        verdict = satisfiable_prob(Not(f), tag)
    else:
        verdict = satisfiable(Not(f), tag)
    if verdict.is_sat:
        return False, verdict
    return True, None


# ---------------------------------------------------------------------------
# Brute-force oracle

MAX_WORLDS_ENV = "OMNISCOPE_MAX_WORLDS"
_HARD_CAP = 5


def default_bounds(tag):
    """Per-class world bounds covering the small-model theorems with slack
    where that stays affordable."""
    approach, modal = tag.approach, tag.modal
    if approach == "awareness":
        return {"K45": 2, "KD45": 2, "S5": 2}[modal]
    if approach == "impossible":
        return {"K45": 2, "KD45-": 2, "KD45": 3, "S5": 2}[modal]
    return 2


def brute_force_sat(f, tag, max_worlds=None):
    """Exhaustive enumeration of all structures of the class with at most
    max_worlds worlds, pi ranging over the propositions of f and A/C sets
    over its K-arguments (the only memberships that can influence truth).

    Returns the first satisfying (structure, world) in enumeration order.
    """
    if tag.probabilistic:
        from .prob import brute_force_sat_prob
        return brute_force_sat_prob(f, tag, max_worlds)
    cap = int(os.environ.get(MAX_WORLDS_ENV, _HARD_CAP))
    if max_worlds is None:
        max_worlds = default_bounds(tag)
    if max_worlds > cap:
        raise DecisionError("bounds too large: %d worlds (cap %d; set %s)"
                            % (max_worlds, cap, MAX_WORLDS_ENV))

    comp = _Compiled(f)
    props = sorted_props(f)
    if tag.approach == "impossible":
        gen = _enumerate_impossible(comp, props, tag, max_worlds)
    else:
        gen = _enumerate_subset_possible(comp, props, tag, max_worlds)
    for small in gen:
        val = _eval_small(comp, small, tag.approach) & small.real_mask
        if val:
            world = "w%d" % _first_world(val)
            structure = _small_to_structure(comp, small, tag, props)
            if validate(structure):
                raise AssertionError("oracle produced an invalid structure")
            return Verdict(SAT, structure, world,
                           bound_used=len(structure.worlds | structure.possible))
    return Verdict(UNSAT)


def _enumerate_subset_possible(comp, props, tag, max_worlds):
    """Structures with W' a subset of W: standard, syntactic, awareness,
    algorithmic."""
    assignments = _assignments(props)
    kargs = comp.karg_nodes
    ignore_modal = tag.approach in ("syntactic", "algorithmic")
    for n in range(1, max_worlds + 1):
        full = (1 << n) - 1
        for possible in range(1 << n):
            if not ignore_modal:
                if tag.modal == "KD45" and possible == 0:
                    continue
                if tag.modal == "S5" and possible != full:
                    continue
            for assign in product(assignments, repeat=n):
                if tag.approach == "algorithmic":
                    for yes_bits in _masks(len(kargs)):
                        yes = frozenset(kargs[j] for j in range(len(kargs))
                                        if yes_bits >> j & 1)
                        yield _Small(n, full, possible, list(assign),
                                     yes_nodes=yes)
                elif tag.approach == "standard":
                    yield _Small(n, full, possible, list(assign))
                else:  # syntactic, awareness: per-world membership sets
                    for sets in product(_masks(len(kargs)), repeat=n):
                        member = _member_dict(
                            kargs, [(w, sets[w]) for w in range(n)])
                        yield _Small(n, full, possible, list(assign), member)


def _enumerate_impossible(comp, props, tag, max_worlds):
    assignments = _assignments(props)
    kargs = comp.karg_nodes
    for n_real in range(1, max_worlds + 1):
        for n_imp in range(0, max_worlds - n_real + 1):
            n = n_real + n_imp
            real = (1 << n_real) - 1
            imp = ((1 << n) - 1) & ~real
            for poss_real in range(1 << n_real):
                possible = imp | poss_real
                if tag.modal == "KD45-" and possible == 0:
                    continue
                if tag.modal == "KD45" and poss_real == 0:
                    continue
                if tag.modal == "S5" and poss_real != real:
                    continue
                for assign in product(assignments, repeat=n_real):
                    full_assign = list(assign) + [{}] * n_imp
                    for sets in product(_masks(len(kargs)), repeat=n_imp):
                        member = _member_dict(
                            kargs,
                            [(n_real + i, sets[i]) for i in range(n_imp)])
                        yield _Small(n, real, possible, full_assign, member)


# ---------------------------------------------------------------------------
# Closure predicates

def downward_closed(formulas):
    """Violations of the four downward-closure conditions: conjunct
    extraction, double-negation elimination, negated-conjunction case
    split, and K-stripping."""
    fset = set(formulas)
    out = []
    for f in sorted(fset, key=_formula_key):
        if isinstance(f, And):
            if f.left not in fset or f.right not in fset:
                out.append("(a) %s is in the set but a conjunct is not"
                           % render(f))
        elif isinstance(f, Not) and isinstance(f.sub, Not):
            if f.sub.sub not in fset:
                out.append("(b) %s is in the set but %s is not"
                           % (render(f), render(f.sub.sub)))
        elif isinstance(f, Not) and isinstance(f.sub, And):
            if Not(f.sub.left) not in fset and Not(f.sub.right) not in fset:
                out.append("(c) %s is in the set but neither negated "
                           "conjunct is" % render(f))
        elif isinstance(f, Know):
            if f.sub not in fset:
                out.append("(d) %s is in the set but %s is not"
                           % (render(f), render(f.sub)))
    return out


def k_compatible(known, theory):
    """Every K psi in the theory has psi in the known set."""
    return all(g.sub in set(known) for g in theory if isinstance(g, Know))


# ---------------------------------------------------------------------------
# Explicit constructions

def _forced_fit(goals, k_env, vocabulary):
    """A truth assignment over vocabulary making every goal true with the
    K-atoms fixed by k_env, or None."""
    for assignment in _assignments(sorted(vocabulary)):
        if all(eval_skeleton(g, assignment, k_env) for g in goals):
            return assignment
    return None


def exact_knowledge_model(known, truths, approach):
    """One-world structure where exactly the formulas in `known` are known
    and every formula in `truths` holds at the world.

    Works for the syntactic, awareness, impossible-worlds and algorithmic
    approaches; the knowledge set is entirely unconstrained in all four.
    """
    if approach not in ("syntactic", "awareness", "impossible", "algorithmic"):
        raise DecisionError("no such construction for %r" % approach)
    known = frozenset(known)
    truths = list(truths)
    vocabulary = set()
    for g in list(known) + truths:
        vocabulary |= propositions(g)
    if not vocabulary:
        vocabulary = {DUMMY_PROP}
    # at the constructed world, K-atoms hold exactly on the knowledge set
    k_env = {arg: arg in known
             for g in truths for arg in know_arguments(g)}
    assignment = _forced_fit(truths, k_env, vocabulary)
    if assignment is None:
        raise DecisionError(
            "the required truths are propositionally inconsistent "
            "(K-atoms read off the knowledge set)")
    modal = "KD45-" if approach == "impossible" else "K45"
    return _single_world(ClassTag(approach, modal), assignment, known)


def pair_knowledge_model(known, theory, kind, s5=False):
    """Two-world construction: a designated world knowing exactly `known`
    while the possible world satisfies every member of `theory`.

    Preconditions: theory is propositionally consistent and downward
    closed and contains `known`; the impossible-worlds variant needs
    `known` k-compatible with the theory; with s5=True the two sets must
    coincide and the construction collapses to a single world.
    """
    if kind not in ("awareness", "impossible"):
        raise DecisionError("kind must be awareness or impossible")
    known = frozenset(known)
    theory = frozenset(theory)
    if not known <= theory:
        raise DecisionError("the knowledge set must be a subset of the theory")
    problems = downward_closed(theory)
    if problems:
        raise DecisionError("theory is not downward closed: %s" % problems[0])
    if kind == "impossible" and not k_compatible(known, theory):
        raise DecisionError("knowledge set is not k-compatible with the theory")
    if s5 and known != theory:
        raise DecisionError("the single-world variant needs known = theory")

    vocabulary = set()
    for g in theory:
        vocabulary |= propositions(g)
    if not vocabulary:
        vocabulary = {DUMMY_PROP}
    # at the possible world, a K-atom holds exactly when the theory
    # asserts it
    k_env = {arg: Know(arg) in theory
             for g in theory for arg in know_arguments(g)}
    assignment = _forced_fit(sorted(theory, key=_formula_key), k_env,
                             vocabulary)
    if assignment is None:
        raise DecisionError("theory is propositionally inconsistent")

    pi_w = dict(assignment)
    if kind == "awareness":
        aware_possible = frozenset(g.sub for g in theory
                                   if isinstance(g, Know))
        if s5:
            return make_structure(
                ClassTag("awareness", "S5"), ["w0"], ["w0"],
                {"w0": pi_w}, A={"w0": known})
        return make_structure(
            ClassTag("awareness", "KD45"), ["w0", "w1"], ["w1"],
            {"w0": dict(pi_w), "w1": pi_w}, A={"w0": known,
                                               "w1": aware_possible})
    if s5:
        return make_structure(
            ClassTag("impossible", "S5"), ["w0"], ["w0", "w2"],
            {"w0": pi_w}, C={"w2": known})
    return make_structure(
        ClassTag("impossible", "KD45"), ["w0", "w1"], ["w1", "w2"],
        {"w0": dict(pi_w), "w1": pi_w}, C={"w2": known})


# ---------------------------------------------------------------------------
# Derivability via the completeness theorems

def derivable_ver(f, probabilistic=False, impossible=False):
    """Derivability in the veridical systems, decided semantically: truth
    at every world of every S5 structure of the matching kind.

    With probabilistic=False this is S5-awareness validity; with
    probabilistic=True it is S5 probabilistic awareness validity, or S5
    probabilistic impossible-worlds validity when impossible=True (the
    weaker system with Bound in place of the full probability identities,
    which is the side condition the impossible-worlds knowledge axioms
    need).
    """
    if not probabilistic:
        verdict = satisfiable(Not(f), ClassTag("awareness", "S5"))
        return not verdict.is_sat
    from .prob import satisfiable_prob
    approach = "impossible" if impossible else "awareness"
    verdict = satisfiable_prob(Not(f), ClassTag(approach, "S5", True))
    return not verdict.is_sat
