"""Epistemic structure classes, their validity constraints, and the JSON
document format.

A structure is a Kripke core (worlds W, the agent's possible set W',
an interpretation pi on W) plus the extra furniture its approach demands:
a formula set C per world (syntactic), per impossible world (impossible
worlds), an awareness set A per world, a knowledge algorithm, and an exact
rational distribution mu over W' when probabilistic.

World ids are opaque strings.  All probability values are exact rationals;
documents carry them as "num/den" strings.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .formula import Formula, parse, render
from .messages import KnowledgeAlgorithm, algorithm_from_doc
from .rationals import ONE, Q, ZERO, format_rational, parse_rational

APPROACHES = ("standard", "syntactic", "awareness", "algorithmic", "impossible")
MODALS = ("K45", "KD45-", "KD45", "S5")


@dataclass(frozen=True)
class ClassTag:
    approach: str
    modal: str
    probabilistic: bool = False

    def __post_init__(self):
        if self.approach not in APPROACHES:
            raise ValueError("unknown approach %r" % self.approach)
        if self.modal not in MODALS:
            raise ValueError("unknown modal class %r" % self.modal)

    def spelled(self):
        prob = "prob-" if self.probabilistic else ""
        return "%s-%s%s" % (self.modal.lower(), prob, self.approach)


def parse_tag(text):
    """Parse spellings like kd45-awareness, s5-prob-awareness,
    kd45--prob-impossible (the doubled dash is the KD45- class)."""
    text = text.strip().lower()
    for modal in ("kd45-", "kd45", "k45", "s5"):
        if text.startswith(modal + "-"):
            rest = text[len(modal) + 1:]
            break
    else:
        raise ValueError("unrecognized class tag %r" % text)
    probabilistic = rest.startswith("prob-")
    if probabilistic:
        rest = rest[len("prob-"):]
    if rest not in APPROACHES:
        raise ValueError("unknown approach %r in class tag" % rest)
    return ClassTag(rest, modal.upper(), probabilistic)


@dataclass(frozen=True)
class EpistemicStructure:
    tag: ClassTag
    worlds: frozenset
    possible: frozenset
    pi: dict          # world -> {prop: bool}, defined exactly on worlds
    C: dict = None    # world -> frozenset[Formula] or theory-backed set
    A: dict = None    # world -> frozenset[Formula]
    algorithm: KnowledgeAlgorithm = None
    mu: dict = None   # world -> exact rational, domain = possible

    def impossible_worlds(self):
        return self.possible - self.worlds

    def with_tag(self, tag):
        return replace(self, tag=tag)


def c_contains(c_value, f):
    """Membership of a formula in a C entry: either a literal finite set,
    or a theory-backed object exposing contains_formula."""
    if isinstance(c_value, (frozenset, set)):
        return f in c_value
    return c_value.contains_formula(f)


def make_structure(tag, worlds, possible, pi, C=None, A=None,
                   algorithm=None, mu=None):
    return EpistemicStructure(
        tag=tag,
        worlds=frozenset(worlds),
        possible=frozenset(possible),
        pi={w: dict(v) for w, v in pi.items()},
        C=None if C is None else dict(C),
        A=None if A is None else {w: frozenset(v) for w, v in A.items()},
        algorithm=algorithm,
        mu=None if mu is None else {w: Q(v) for w, v in mu.items()},
    )


def validate(s):
    """Check every class constraint; returns a list of violations (empty
    means the structure is well formed).  Never raises on odd but
    representable inputs: violations are data."""
    out = []
    tag = s.tag
    approach, modal = tag.approach, tag.modal

    if not s.worlds:
        out.append("W must be nonempty")
    if set(s.pi) != set(s.worlds):
        out.append("pi must be defined exactly on W")

    if approach != "impossible":
        if not s.possible <= s.worlds:
            out.append("%s structures require W' ⊆ W" % approach)
        if modal == "KD45-":
            out.append("KD45- is defined only for impossible-worlds structures")
        if approach not in ("syntactic", "algorithmic"):
            # syntactic and algorithmic knowledge ignore the possible set,
            # so the modal class places no constraint there
            if modal == "KD45" and not s.possible:
                out.append("KD45 requires W' != empty")
            if modal == "S5" and s.possible != s.worlds:
                out.append("S5 requires W' = W")
    else:
        if modal == "KD45-" and not s.possible:
            out.append("KD45- requires W' != empty")
        if modal == "KD45" and not (s.worlds & s.possible):
            out.append("KD45 impossible-worlds requires W ∩ W' != empty")
        if modal == "S5" and not s.worlds <= s.possible:
            out.append("S5 impossible-worlds requires W ⊆ W'")

    if approach == "syntactic":
        if s.C is None or set(s.C) != set(s.worlds):
            out.append("syntactic structures need C defined on all of W")
    elif approach == "impossible":
        imp = s.impossible_worlds()
        if s.C is None or set(s.C) != set(imp):
            out.append("impossible-worlds structures need C exactly on W' - W")
    elif s.C is not None:
        out.append("C is only part of syntactic and impossible-worlds structures")

    if approach == "awareness":
        if s.A is None or set(s.A) != set(s.worlds):
            out.append("awareness structures need A defined on all of W")
    elif s.A is not None:
        out.append("A is only part of awareness structures")

    if approach == "algorithmic":
        if s.algorithm is None:
            out.append("algorithmic structures need a knowledge algorithm")
    elif s.algorithm is not None:
        out.append("only algorithmic structures carry an algorithm")

    if tag.probabilistic:
        if approach in ("syntactic", "algorithmic"):
            out.append("probabilistic %s structures are not defined" % approach)
        if modal == "K45":
            out.append("probabilistic structures need a nonempty W' class "
                       "(KD45-, KD45 or S5)")
        if s.mu is None:
            out.append("probabilistic structures need a distribution mu")
        else:
            if set(s.mu) != set(s.possible):
                out.append("mu must be defined exactly on W'")
            if any(v < ZERO for v in s.mu.values()):
                out.append("mu values must be >= 0")
            total = sum(s.mu.values(), ZERO)
            if s.mu and total != ONE:
                out.append("distribution sums to %s/%s"
                           % (total.numerator, total.denominator))
    elif s.mu is not None:
        out.append("only probabilistic structures carry a distribution")

    return out


# ---------------------------------------------------------------------------
# Documents

class StructureDocumentError(ValueError):
    """Schema violation, with the offending path in the message."""


def save_structure(s):
    doc = {
        "tag": {"approach": s.tag.approach, "modal": s.tag.modal,
                "probabilistic": s.tag.probabilistic},
        "worlds": sorted(s.worlds),
        "possible": sorted(s.possible),
        "pi": {w: {p: bool(v) for p, v in sorted(s.pi[w].items())}
               for w in sorted(s.pi)},
    }
    if s.C is not None:
        doc["C"] = {w: _save_c_entry(entry) for w, entry in sorted(s.C.items())}
    if s.A is not None:
        doc["A"] = {w: sorted(render(f) for f in fs)
                    for w, fs in sorted(s.A.items())}
    if s.algorithm is not None:
        if not hasattr(s.algorithm, "to_doc"):
            raise StructureDocumentError(
                "algorithm: this knowledge algorithm has no document form")
        doc["algorithm"] = s.algorithm.to_doc()
    if s.mu is not None:
        doc["mu"] = {w: format_rational(v) for w, v in sorted(s.mu.items())}
    return doc


def _save_c_entry(entry):
    if isinstance(entry, (frozenset, set)):
        return sorted(render(f) for f in entry)
    return entry.to_doc()  # theory-backed membership (induced structures)


def load_structure(doc):
    try:
        tag = ClassTag(doc["tag"]["approach"], doc["tag"]["modal"],
                       bool(doc["tag"].get("probabilistic", False)))
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureDocumentError("tag: %s" % exc) from None

    worlds = _string_list(doc, "worlds")
    possible = _string_list(doc, "possible")

    pi = {}
    pi_doc = doc.get("pi", {})
    if not isinstance(pi_doc, dict):
        raise StructureDocumentError("pi: expected an object")
    for w, assignment in pi_doc.items():
        if not isinstance(assignment, dict):
            raise StructureDocumentError("pi.%s: expected an object" % w)
        for p, v in assignment.items():
            if not isinstance(v, bool):
                raise StructureDocumentError("pi.%s.%s: expected a bool" % (w, p))
        pi[w] = dict(assignment)

    C = None
    if "C" in doc:
        C = {}
        for w, entry in doc["C"].items():
            C[w] = _load_c_entry(w, entry)
    A = None
    if "A" in doc:
        A = {}
        for w, items in doc["A"].items():
            A[w] = frozenset(_parse_formula_list("A.%s" % w, items))
    algorithm = None
    if "algorithm" in doc:
        try:
            algorithm = algorithm_from_doc(doc["algorithm"])
        except ValueError as exc:
            raise StructureDocumentError("algorithm: %s" % exc) from None
    mu = None
    if "mu" in doc:
        mu = {}
        for w, v in doc["mu"].items():
            try:
                mu[w] = parse_rational(v) if isinstance(v, str) else Q(int(v))
            except (ValueError, ZeroDivisionError) as exc:
                raise StructureDocumentError("mu.%s: %s" % (w, exc)) from None

    return EpistemicStructure(
        tag=tag, worlds=frozenset(worlds), possible=frozenset(possible),
        pi=pi, C=C, A=A, algorithm=algorithm, mu=mu)


def _load_c_entry(world, entry):
    if isinstance(entry, list):
        return frozenset(_parse_formula_list("C.%s" % world, entry))
    if isinstance(entry, dict) and "literals" in entry:
        from .implicit import WorldTheory  # theory-backed C entries
        return WorldTheory.from_doc(entry)
    raise StructureDocumentError(
        "C.%s: expected a list of formulas or a theory object" % world)


def _parse_formula_list(path, items):
    if not isinstance(items, list):
        raise StructureDocumentError("%s: expected a list" % path)
    out = []
    for i, text in enumerate(items):
        try:
            out.append(parse(text))
        except ValueError as exc:
            raise StructureDocumentError("%s[%d]: %s" % (path, i, exc)) from None
    return out


def _string_list(doc, key):
    items = doc.get(key)
    if not isinstance(items, list) or not all(isinstance(x, str) for x in items):
        raise StructureDocumentError("%s: expected a list of world ids" % key)
    return items
