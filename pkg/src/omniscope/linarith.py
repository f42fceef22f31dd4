"""Exact-rational linear constraint feasibility and validity.

Fourier-Motzkin elimination over exact rationals, with strict inequalities
tracked soundly.  This is the engine behind every probabilistic decision
procedure in the package; systems are tiny (a handful of variables), so the
quadratic blow-up of elimination is a non-issue and the exactness guarantee
is worth far more than simplex speed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .rationals import Q, ZERO, ONE


@dataclass(frozen=True)
class LinearConstraint:
    """sum(coeffs[v] * v) rel bound, with rel one of '<=', '<', '='."""

    coeffs: tuple  # tuple of (var, Q) pairs, sorted by var, zero-free
    rel: str
    bound: object  # Q

    @staticmethod
    def make(coeffs, rel, bound):
        if rel not in ("<=", "<", "="):
            raise ValueError("relation must be <=, < or =, got %r" % rel)
        items = tuple(
            sorted((v, Q(c)) for v, c in dict(coeffs).items() if Q(c) != ZERO)
        )
        return LinearConstraint(items, rel, Q(bound))

    def variables(self):
        return {v for v, _ in self.coeffs}

    def holds(self, witness):
        total = sum((c * witness[v] for v, c in self.coeffs), ZERO)
        if self.rel == "<=":
            return total <= self.bound
        if self.rel == "<":
            return total < self.bound
        return total == self.bound

    def __str__(self):
        if not self.coeffs:
            lhs = "0"
        else:
            lhs = " + ".join("%s %s" % (c, v) for v, c in self.coeffs)
        return "%s %s %s" % (lhs, self.rel, self.bound)


def constraint_ge(coeffs, bound):
    """sum >= bound, normalized into the <= representation."""
    return LinearConstraint.make({v: -Q(c) for v, c in dict(coeffs).items()},
                                 "<=", -Q(bound))


def constraint_gt(coeffs, bound):
    return LinearConstraint.make({v: -Q(c) for v, c in dict(coeffs).items()},
                                 "<", -Q(bound))


@dataclass
class LinearConstraintSystem:
    constraints: list
    variables: set = field(default_factory=set)

    def __post_init__(self):
        self.variables = set(self.variables)
        for con in self.constraints:
            self.variables |= con.variables()


class _Row:
    """One inequality sum(coeffs) <= / < bound during elimination."""

    __slots__ = ("coeffs", "strict", "bound")

    def __init__(self, coeffs, strict, bound):
        self.coeffs = coeffs  # dict var -> Q, zero-free
        self.strict = strict
        self.bound = bound


def _rows_from(constraints):
    rows = []
    for con in constraints:
        coeffs = dict(con.coeffs)
        if con.rel == "<=":
            rows.append(_Row(coeffs, False, con.bound))
        elif con.rel == "<":
            rows.append(_Row(coeffs, True, con.bound))
        else:  # split equality into <= and >=
            rows.append(_Row(dict(coeffs), False, con.bound))
            rows.append(_Row({v: -c for v, c in coeffs.items()}, False,
                             -con.bound))
    return rows


def feasible(system, order=None):
    """Decide feasibility over the reals.

    Returns a witness dict (variable -> exact rational) satisfying every
    constraint, or None when the system has no real solution.  The witness
    is deterministic: back-substitution picks the midpoint of each
    variable's feasible interval, or the finite endpoint (nudged inward by
    one when strict) for one-sided intervals.
    """
    variables = sorted(system.variables) if order is None else list(order)
    missing = system.variables.difference(variables)
    if missing:
        raise ValueError("elimination order omits %s" % sorted(missing))

    rows = _rows_from(system.constraints)
    stack = []  # (var, bounding rows mentioning var) in elimination order

    for var in variables:
        lowers, uppers, rest = [], [], []
        for row in rows:
            coeff = row.coeffs.get(var)
            if coeff is None or coeff == ZERO:
                rest.append(row)
            elif coeff > ZERO:
                uppers.append(row)
            else:
                lowers.append(row)
        stack.append((var, lowers + uppers))
        for low in lowers:
            for up in uppers:
                # scale so the var cancels: low has coeff -a (a>0), up has b>0
                a = -low.coeffs[var]
                b = up.coeffs[var]
                coeffs = {}
                for v, c in low.coeffs.items():
                    if v != var:
                        coeffs[v] = c * b
                for v, c in up.coeffs.items():
                    if v == var:
                        continue
                    acc = coeffs.get(v, ZERO) + c * a
                    if acc == ZERO:
                        coeffs.pop(v, None)
                    else:
                        coeffs[v] = acc
                rows_new = _Row(coeffs, low.strict or up.strict,
                                low.bound * b + up.bound * a)
                rest.append(rows_new)
        rows = rest

    for row in rows:  # all variables eliminated: constant comparisons
        if row.coeffs:
            raise AssertionError("unexpected leftover variables")
        if row.strict:
            if not ZERO < row.bound:
                return None
        elif not ZERO <= row.bound:
            return None

    witness = {}
    for var, bounding in reversed(stack):
        low = high = None
        low_strict = high_strict = False
        for row in bounding:
            coeff = row.coeffs[var]
            rest_val = sum(
                (c * witness[v] for v, c in row.coeffs.items() if v != var),
                ZERO,
            )
            limit = (row.bound - rest_val) / coeff
            if coeff > ZERO:  # var <= limit
                if high is None or limit < high:
                    high, high_strict = limit, row.strict
                elif limit == high:
                    high_strict = high_strict or row.strict
            else:  # var >= limit
                if low is None or limit > low:
                    low, low_strict = limit, row.strict
                elif limit == low:
                    low_strict = low_strict or row.strict
        witness[var] = _pick(low, low_strict, high, high_strict)

    for con in system.constraints:
        if not con.holds(witness):
            raise AssertionError("witness fails %s" % con)
    return witness


def _pick(low, low_strict, high, high_strict):
    if low is None and high is None:
        return ZERO
    if low is None:
        return high - ONE if high_strict else high
    if high is None:
        return low + ONE if low_strict else low
    if low == high:
        return low  # both non-strict, or elimination would have failed
    return (low + high) / 2


# ---------------------------------------------------------------------------
# Boolean combinations of constraints and validity

@dataclass(frozen=True)
class LinNot:
    sub: object


@dataclass(frozen=True)
class LinAnd:
    left: object
    right: object


@dataclass(frozen=True)
class LinOr:
    left: object
    right: object


def lin_implies(a, b):
    return LinOr(LinNot(a), b)


def negate_constraint(con):
    """Negation of an atomic constraint, as a constraint or a LinOr."""
    neg = {v: -c for v, c in con.coeffs}
    if con.rel == "<=":
        return LinearConstraint(tuple(sorted(neg.items())), "<", -con.bound)
    if con.rel == "<":
        return LinearConstraint(tuple(sorted(neg.items())), "<=", -con.bound)
    lt = LinearConstraint(con.coeffs, "<", con.bound)
    gt = LinearConstraint(tuple(sorted(neg.items())), "<", -con.bound)
    return LinOr(lt, gt)


def _dnf(form):
    """List of conjunctions (lists of atomic constraints)."""
    if isinstance(form, LinearConstraint):
        return [[form]]
    if isinstance(form, LinNot):
        sub = form.sub
        if isinstance(sub, LinearConstraint):
            negated = negate_constraint(sub)
            return _dnf(negated)
        if isinstance(sub, LinNot):
            return _dnf(sub.sub)
        if isinstance(sub, LinAnd):
            return _dnf(LinOr(LinNot(sub.left), LinNot(sub.right)))
        if isinstance(sub, LinOr):
            return _dnf(LinAnd(LinNot(sub.left), LinNot(sub.right)))
        raise TypeError(sub)
    if isinstance(form, LinOr):
        return _dnf(form.left) + _dnf(form.right)
    if isinstance(form, LinAnd):
        return [a + b for a in _dnf(form.left) for b in _dnf(form.right)]
    raise TypeError(form)


def valid_lin_form(form):
    """True iff the Boolean combination of constraints holds under every
    real assignment: every disjunct of the DNF of its negation must be
    infeasible."""
    for conjunction in _dnf(LinNot(form)):
        if feasible(LinearConstraintSystem(conjunction)) is not None:
            return False
    return True
