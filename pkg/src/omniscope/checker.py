"""Satisfaction clauses for every structure class.

Truth at a possible world is the usual structural recursion, with the
knowledge clause dispatched on the approach:

    standard     K f holds iff f holds at every world in W'
    syntactic    K f holds iff f is in C(w)
    awareness    K f holds iff f holds at every world in W' and f is in A(w)
    algorithmic  K f holds iff the knowledge algorithm answers "Yes" on f
    impossible   K f holds iff f holds at every world in W'

At an impossible world (one in W' - W) truth is stipulated outright:
a formula holds there exactly when it is a member of C(w) -- including
negations, conjunctions and K-formulas, which is what breaks logical
omniscience.  The single exception is likelihood atoms, which are
world-independent by definition: they always evaluate to the structure-wide
comparison of the measured events, no matter which world is asked.

The measured event of a propositional f is the set of worlds in W' where f
holds: by the interpretation pi on possible worlds and by C-membership on
impossible ones, so an impossible world carrying both p and ~p contributes
its probability to both events.
"""

from __future__ import annotations

from .formula import (And, Const, Know, LikAtom, Not, Prop, eval_prop,
                      is_propositional, render)
from .messages import YES
from .rationals import ZERO
from .structures import c_contains


class SemanticsError(ValueError):
    pass


def extension(s, f):
    """Worlds of W where a propositional f is true under pi; for
    probabilistic impossible-worlds structures this also includes the
    impossible worlds whose C-set carries f."""
    if not is_propositional(f):
        raise SemanticsError("extension needs a propositional formula, got %s"
                             % render(f))
    out = {w for w in s.worlds if eval_prop(s.pi[w], f)}
    if s.tag.probabilistic and s.tag.approach == "impossible":
        for w in s.impossible_worlds():
            if c_contains(s.C[w], f):
                out.add(w)
    return out


def likelihood_value(s, f):
    """mu-measure of the event of a propositional f within W'."""
    if s.mu is None:
        raise SemanticsError("likelihood needs a probabilistic structure")
    event = extension(s, f) & s.possible
    return sum((s.mu[w] for w in event), ZERO)


def _lik_atom_holds(s, atom):
    total = ZERO
    for coeff, arg in atom.terms:
        total += coeff * likelihood_value(s, arg)
    if atom.rel == ">=":
        return total >= atom.bound
    if atom.rel == ">":
        return total > atom.bound
    if atom.rel == "<=":
        return total <= atom.bound
    if atom.rel == "<":
        return total < atom.bound
    return total == atom.bound


def holds(s, w, f):
    """Truth of f at world w of structure s."""
    if w not in s.worlds and w not in s.possible:
        raise SemanticsError("unknown world %r" % w)
    return _holds(s, w, f, {})


def _holds(s, w, f, memo):
    key = (w, f)
    if key in memo:
        return memo[key]

    if isinstance(f, LikAtom):
        # world-independent: the same global value at every world,
        # possible or impossible
        value = _lik_atom_holds(s, f)
    elif w not in s.worlds:
        # impossible world: truth is membership in C(w), for every shape
        # of formula
        value = c_contains(s.C[w], f)
    elif isinstance(f, Prop):
        try:
            value = s.pi[w][f.name]
        except KeyError:
            raise SemanticsError("proposition %r unbound at world %r"
                                 % (f.name, w)) from None
    elif isinstance(f, Const):
        value = f.value
    elif isinstance(f, Not):
        value = not _holds(s, w, f.sub, memo)
    elif isinstance(f, And):
        value = (_holds(s, w, f.left, memo)
                 and _holds(s, w, f.right, memo))
    elif isinstance(f, Know):
        value = _know_holds(s, w, f.sub, memo)
    else:
        raise SemanticsError("cannot evaluate %r" % (f,))

    memo[key] = value
    return value


def _know_holds(s, w, arg, memo):
    approach = s.tag.approach
    if approach == "syntactic":
        return c_contains(s.C[w], arg)
    if approach == "algorithmic":
        return s.algorithm.query(arg) == YES
    if approach == "awareness" and arg not in s.A[w]:
        return False
    return all(_holds(s, u, arg, memo) for u in sorted(s.possible))
