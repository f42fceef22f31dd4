"""Satisfiability for the probabilistic language over awareness and
impossible-worlds structures.

The search mirrors the completeness arguments: first enumerate Boolean
skeletons (truth values for the propositions, K-subformulas and likelihood
atoms of the query), then try to realize each skeleton as a small structure
whose distribution is found by exact linear programming.

Realization facts the search is built on:

* Likelihood atoms are world-independent, so within one structure every
  world agrees on them, and K applied to a likelihood atom is equivalent to
  the atom itself once the agent considers at least one world possible.
* In awareness structures a false K-atom costs nothing (leave the argument
  out of the awareness set), while a true K-atom forces its argument to
  hold at every world the agent considers possible; for a propositional
  argument that drives its likelihood to exactly one.
* In impossible-worlds structures, knowledge is world-independent across
  possible worlds; a false K-atom is witnessed by a zero-probability
  impossible world whose C-set carries only the arguments that must be
  known ("the hole"), and arbitrary sub-probability measures over the
  remaining likelihood arguments are realized by a nested chain of C-sets,
  one layer per distinct value.

Every SAT verdict is re-validated and re-model-checked before being
returned, with exact rational probabilities end to end.
"""

from __future__ import annotations

from itertools import product

from .checker import holds
from .decision import (DUMMY_PROP, SAT, UNSAT, DecisionError, Verdict,
                       _assignments, _formula_key, eval_skeleton,
                       know_arguments, sorted_props)
from .formula import (And, Const, Know, LikAtom, Not, Prop, eval_prop,
                      is_propositional, render, subformulas)
from .linarith import (LinearConstraint, LinearConstraintSystem,
                       constraint_ge, constraint_gt, feasible)
from .rationals import ONE, Q, ZERO
from .structures import ClassTag, c_contains, make_structure, validate

_PROB_TAGS = {
    ("awareness", "KD45"), ("awareness", "S5"),
    ("impossible", "KD45-"), ("impossible", "KD45"), ("impossible", "S5"),
}


def _check_tag(tag):
    if not tag.probabilistic:
        raise DecisionError("satisfiable_prob needs a probabilistic class")
    if (tag.approach, tag.modal) not in _PROB_TAGS:
        raise DecisionError("unsupported probabilistic class %s"
                            % tag.spelled())


def _lik_atoms(f):
    return sorted((g for g in subformulas(f) if isinstance(g, LikAtom)),
                  key=_formula_key)


def _lik_args(latoms, kargs):
    """Propositional formulas whose likelihood the search must track."""
    args = {arg for atom in latoms for _, arg in atom.terms}
    args |= {chi for chi in kargs if is_propositional(chi)}
    return sorted(args, key=_formula_key)


def _skeletons(f, props, kargs, latoms):
    """All (assignment, g, s) triples that make f true outright."""
    for assignment in _assignments(props):
        for gbits in range(1 << len(kargs)):
            g = {kargs[i]: bool(gbits >> i & 1) for i in range(len(kargs))}
            for sbits in range(1 << len(latoms)):
                s = {latoms[i]: bool(sbits >> i & 1)
                     for i in range(len(latoms))}
                if eval_skeleton(f, assignment, g, s):
                    yield assignment, g, s


def _sign_constraint_choices(expr, atom, value):
    """Linear constraints (as lists of alternatives) asserting that the
    atom's comparison over expr (a var->coeff map) has the given truth
    value.  Negating '=' splits into two alternatives."""
    bound = Q(atom.bound)
    rel = atom.rel
    if value:
        if rel == ">=":
            return [[constraint_ge(expr, bound)]]
        if rel == ">":
            return [[constraint_gt(expr, bound)]]
        if rel == "<=":
            return [[LinearConstraint.make(expr, "<=", bound)]]
        if rel == "<":
            return [[LinearConstraint.make(expr, "<", bound)]]
        return [[LinearConstraint.make(expr, "=", bound)]]
    if rel == ">=":
        return [[LinearConstraint.make(expr, "<", bound)]]
    if rel == ">":
        return [[LinearConstraint.make(expr, "<=", bound)]]
    if rel == "<=":
        return [[constraint_gt(expr, bound)]]
    if rel == "<":
        return [[constraint_ge(expr, bound)]]
    return [[LinearConstraint.make(expr, "<", bound)],
            [constraint_gt(expr, bound)]]


def _solve_with_choices(base, choice_groups, order=None):
    """Feasibility of base constraints plus one alternative from each
    group, trying alternatives in order."""
    for picks in product(*choice_groups) if choice_groups else [()]:
        constraints = list(base)
        for pick in picks:
            constraints.extend(pick)
        witness = feasible(LinearConstraintSystem(constraints), order=order)
        if witness is not None:
            return witness
    return None


def _subsets(items):
    for bits in range(1 << len(items)):
        yield [items[i] for i in range(len(items)) if bits >> i & 1]


def satisfiable_prob(f, tag):
    """Satisfiability of a probabilistic formula in the given class, with a
    verified small witness on SAT."""
    _check_tag(tag)
    props = sorted_props(f)
    kargs = know_arguments(f)
    latoms = _lik_atoms(f)
    if tag.approach == "awareness":
        return _prob_awareness(f, tag, props, kargs, latoms)
    return _prob_impossible(f, tag, props, kargs, latoms)


# ---------------------------------------------------------------------------
# Probabilistic awareness classes

def _prob_awareness(f, tag, props, kargs, latoms):
    s5 = tag.modal == "S5"
    assignments = _assignments(props)
    nested = sorted({xi for chi in kargs for xi in know_arguments(chi)},
                    key=_formula_key)

    for delta0, g, s in _skeletons(f, props, kargs, latoms):
        tk = [chi for chi in kargs if g[chi]]
        extra = [xi for xi in nested if not g.get(xi, False)]
        for added in _subsets(extra):
            enabled = set(tk) | set(added)
            if s5 and not all(eval_skeleton(chi, delta0, g, s)
                              for chi in enabled):
                continue
            candidates = []
            for delta in assignments:
                choice = _world_choice(enabled, nested, delta, s)
                if choice is not None:
                    candidates.append((delta, choice))
            realized = _realize_awareness(
                f, tag, s5, delta0, g, s, enabled, candidates, latoms, props)
            if realized is not None:
                return realized
    return Verdict(UNSAT)


def _world_choice(enabled, nested, delta, s):
    """A per-world K-valuation (awareness set) making every enabled
    argument true at the assignment, or None.  K-atoms may only be switched
    on when their own argument is enabled."""
    free = [xi for xi in nested if xi in enabled]
    goals = sorted(enabled, key=_formula_key)
    for bits in range(1 << len(free)):
        k_env = {xi: False for xi in nested}
        for i, xi in enumerate(free):
            k_env[xi] = bool(bits >> i & 1)
        full = dict.fromkeys(enabled, False)
        full.update(k_env)
        if all(eval_skeleton(chi, delta, full, s) for chi in goals):
            return full
    return None


def _realize_awareness(f, tag, s5, delta0, g, s, enabled, candidates,
                       latoms, props):
    delta0_key = tuple(sorted(delta0.items()))
    pool = [(delta, choice) for delta, choice in candidates
            if not (s5 and tuple(sorted(delta.items())) == delta0_key)]

    for chosen in _subsets(pool):
        worlds = list(chosen)
        if s5:
            worlds = [(delta0, dict(g))] + worlds
        if not worlds:
            continue  # the agent must consider at least one world possible
        names = ["u%d" % i for i in range(len(worlds))]
        base = [constraint_ge({names[i]: 1}, ZERO) for i in range(len(worlds))]
        strict_from = 1 if s5 else 0
        for i in range(strict_from, len(worlds)):
            base[i] = constraint_gt({names[i]: 1}, ZERO)
        base.append(LinearConstraint.make(
            {name: 1 for name in names}, "=", ONE))
        groups = []
        for atom in latoms:
            expr = {}
            for coeff, arg in atom.terms:
                for i, (delta, _) in enumerate(worlds):
                    if eval_prop(delta, arg):
                        expr[names[i]] = expr.get(names[i], ZERO) + coeff
            groups.append(_sign_constraint_choices(expr, atom, s[atom]))
        witness = _solve_with_choices(base, groups)
        if witness is None:
            continue
        return _build_awareness(f, tag, s5, delta0, g, worlds, names,
                                witness, props)
    return None


def _build_awareness(f, tag, s5, delta0, g, worlds, names, mu_vals, props):
    pi = {}
    A = {}
    mu = {}
    for i, (delta, choice) in enumerate(worlds):
        pi[names[i]] = dict(delta)
        A[names[i]] = frozenset(arg for arg, v in choice.items() if v)
        mu[names[i]] = mu_vals[names[i]]
    if s5:
        designated = names[0]
        world_ids = names
        possible = names
    else:
        designated = "w0"
        pi[designated] = dict(delta0)
        A[designated] = frozenset(arg for arg, v in g.items() if v)
        world_ids = [designated] + names
        possible = names
    structure = make_structure(tag, world_ids, possible, pi, A=A, mu=mu)
    problems = validate(structure)
    if problems:
        raise AssertionError("witness fails validation: %s" % problems)
    if not holds(structure, designated, f):
        raise AssertionError("witness fails the model checker")
    return Verdict(SAT, structure, designated, bound_used=len(world_ids))


# ---------------------------------------------------------------------------
# Probabilistic impossible-worlds classes

def _prob_impossible(f, tag, props, kargs, latoms):
    modal = tag.modal
    assignments = _assignments(props)
    pa = _lik_args(latoms, kargs)

    for delta0, g, s in _skeletons(f, props, kargs, latoms):
        # K over a likelihood atom collapses to the atom: world-independent
        # truth quantified over a nonempty possible set
        if any(isinstance(chi, LikAtom) and g[chi] != s[chi]
               for chi in kargs):
            continue
        tk_carried = [chi for chi in kargs
                      if g[chi] and not isinstance(chi, LikAtom)]
        fk = [chi for chi in kargs
              if not g[chi] and not isinstance(chi, LikAtom)]
        candidates = [delta for delta in assignments
                      if all(eval_skeleton(chi, delta, g, s)
                             for chi in tk_carried)]
        if modal == "S5" and not all(eval_skeleton(chi, delta0, g, s)
                                     for chi in tk_carried):
            continue
        realized = _realize_impossible(
            f, tag, delta0, g, s, tk_carried, fk, candidates, latoms, pa,
            props)
        if realized is not None:
            return realized
    return Verdict(UNSAT)


def _realize_impossible(f, tag, delta0, g, s, tk_carried, fk, candidates,
                        latoms, pa, props):
    modal = tag.modal
    delta0_key = tuple(sorted(delta0.items()))
    pool = [delta for delta in candidates
            if not (modal == "S5" and tuple(sorted(delta.items())) == delta0_key)]
    carried_set = set(tk_carried)
    forced = [psi for psi in pa if psi in carried_set]
    free = [psi for psi in pa if psi not in carried_set]

    for chosen in _subsets(pool):
        possible_worlds = list(chosen)
        if modal == "S5":
            possible_worlds = [delta0] + possible_worlds
        if modal == "KD45" and not possible_worlds:
            continue

        # measures are >= 0, not strictly positive: a class may need a
        # zero-probability possible world just to make W and W' intersect
        znames = ["z%d" % i for i in range(len(possible_worlds))]
        base = [constraint_ge({name: 1}, ZERO) for name in znames]
        base.append(constraint_ge({"imass": 1}, ZERO))
        total = {name: 1 for name in znames}
        total["imass"] = 1
        base.append(LinearConstraint.make(total, "=", ONE))
        svar = {}
        for j, psi in enumerate(free):
            svar[psi] = "s%d" % j
            base.append(constraint_ge({svar[psi]: 1}, ZERO))
            base.append(LinearConstraint.make(
                {svar[psi]: 1, "imass": -1}, "<=", ZERO))

        def measure_expr(psi, coeff, expr):
            for i, delta in enumerate(possible_worlds):
                if eval_prop(delta, psi):
                    expr[znames[i]] = expr.get(znames[i], ZERO) + coeff
            if psi in carried_set:
                expr["imass"] = expr.get("imass", ZERO) + coeff
            else:
                name = svar[psi]
                expr[name] = expr.get(name, ZERO) + coeff

        groups = []
        for atom in latoms:
            expr = {}
            for coeff, arg in atom.terms:
                measure_expr(arg, coeff, expr)
            groups.append(_sign_constraint_choices(expr, atom, s[atom]))
        witness = _solve_with_choices(base, groups)
        if witness is None:
            continue
        return _build_impossible(
            f, tag, delta0, g, s, tk_carried, fk, possible_worlds, znames,
            free, svar, witness, props)
    return None


def _build_impossible(f, tag, delta0, g, s, tk_carried, fk, possible_worlds,
                      znames, free, svar, witness, props):
    modal = tag.modal
    carried = frozenset(tk_carried)
    imass = witness.get("imass", ZERO)
    svals = {psi: witness[svar[psi]] for psi in free}

    # nested chain of impossible C-sets, one layer per distinct positive
    # measure, plus a top layer carrying only the forced memberships
    levels = sorted({v for v in svals.values() if v > ZERO})
    layers = []
    previous = ZERO
    for level in levels:
        members = carried | {psi for psi in free if svals[psi] >= level}
        layers.append((members, level - previous))
        previous = level
    top_weight = imass - previous
    need_hole = any(all(eval_skeleton(chi, delta, g, s)
                        for delta in possible_worlds)
                    for chi in fk)
    if top_weight > ZERO or need_hole or (imass > ZERO and not layers):
        layers.append((carried, top_weight))

    pi = {}
    mu = {}
    C = {}
    possible_ids = []
    for i, delta in enumerate(possible_worlds):
        name = "u%d" % i
        pi[name] = dict(delta)
        mu[name] = witness[znames[i]]
        possible_ids.append(name)
    imp_ids = []
    for j, (members, weight) in enumerate(layers):
        name = "i%d" % j
        C[name] = frozenset(members)
        mu[name] = weight
        imp_ids.append(name)

    if modal == "S5":
        designated = possible_ids[0]
        world_ids = possible_ids
    else:
        designated = "w0"
        pi[designated] = dict(delta0)
        world_ids = [designated] + possible_ids
    structure = make_structure(
        tag, world_ids, possible_ids + imp_ids, pi, C=C, mu=mu)
    problems = validate(structure)
    if problems:
        raise AssertionError("witness fails validation: %s" % problems)
    if not holds(structure, designated, f):
        raise AssertionError("witness fails the model checker")
    return Verdict(SAT, structure, designated,
                   bound_used=len(structure.worlds | structure.possible))


# ---------------------------------------------------------------------------
# Brute-force cross-check for the probabilistic classes: enumerate
# structure shapes within bounds, solve for the distribution per
# likelihood-truth combination.

def brute_force_sat_prob(f, tag, max_worlds=None):
    _check_tag(tag)
    if max_worlds is None:
        max_worlds = 3
    props = sorted_props(f)
    kargs = know_arguments(f)
    latoms = _lik_atoms(f)
    pa = _lik_args(latoms, kargs)
    universe = sorted(set(kargs) | set(pa), key=_formula_key)

    for shape in _prob_shapes(f, tag, props, kargs, universe, max_worlds):
        structure, real_ids = shape
        for bits in range(1 << len(latoms)):
            lik_env = {latoms[i]: bool(bits >> i & 1)
                       for i in range(len(latoms))}
            world = _shape_satisfies(structure, real_ids, f, lik_env)
            if world is None:
                continue
            mu = _shape_distribution(structure, latoms, lik_env)
            if mu is None:
                continue
            final = make_structure(
                tag, structure.worlds, structure.possible, structure.pi,
                C=structure.C, A=structure.A, mu=mu)
            if validate(final):
                raise AssertionError("oracle produced an invalid structure")
            if not holds(final, world, f):
                continue
            return Verdict(SAT, final, world, bound_used=len(final.worlds))
    return Verdict(UNSAT)


def _prob_shapes(f, tag, props, kargs, universe, max_worlds):
    assignments = _assignments(props)
    if tag.approach == "awareness":
        for n in range(1, max_worlds + 1):
            for assign in product(assignments, repeat=n):
                for possible in _nonempty_subsets(n, tag.modal):
                    for asets in product(range(1 << len(kargs)), repeat=n):
                        ids = ["w%d" % i for i in range(n)]
                        pi = {ids[i]: dict(assign[i]) for i in range(n)}
                        A = {ids[i]: frozenset(
                            kargs[j] for j in range(len(kargs))
                            if asets[i] >> j & 1) for i in range(n)}
                        structure = make_structure(
                            ClassTag(tag.approach, tag.modal, False),
                            ids, [ids[i] for i in possible], pi, A=A)
                        yield _Partial(structure, ids), ids
    else:
        for n_real in range(1, max_worlds + 1):
            for n_imp in range(0, max_worlds - n_real + 1):
                for assign in product(assignments, repeat=n_real):
                    for poss_real in _imp_possible(n_real, n_imp, tag.modal):
                        for csets in product(range(1 << len(universe)),
                                             repeat=n_imp):
                            real_ids = ["w%d" % i for i in range(n_real)]
                            imp_ids = ["i%d" % j for j in range(n_imp)]
                            pi = {real_ids[i]: dict(assign[i])
                                  for i in range(n_real)}
                            C = {imp_ids[j]: frozenset(
                                universe[k] for k in range(len(universe))
                                if csets[j] >> k & 1) for j in range(n_imp)}
                            possible = ([real_ids[i] for i in poss_real]
                                        + imp_ids)
                            if tag.modal == "KD45-" and not possible:
                                continue
                            structure = make_structure(
                                ClassTag(tag.approach, tag.modal, False),
                                real_ids, possible, pi, C=C)
                            yield _Partial(structure, real_ids), real_ids


class _Partial:
    """A structure shape without its distribution; exposes just enough for
    the shape checks below."""

    def __init__(self, structure, real_ids):
        self.worlds = structure.worlds
        self.possible = structure.possible
        self.pi = structure.pi
        self.C = structure.C
        self.A = structure.A
        self.tag = structure.tag
        self.real_ids = real_ids


def _nonempty_subsets(n, modal):
    full = list(range(n))
    for bits in range(1 << n):
        chosen = [i for i in full if bits >> i & 1]
        if modal == "KD45" and not chosen:
            continue
        if modal == "S5" and len(chosen) != n:
            continue
        yield chosen


def _imp_possible(n_real, n_imp, modal):
    for bits in range(1 << n_real):
        chosen = [i for i in range(n_real) if bits >> i & 1]
        if modal == "KD45" and not chosen:
            continue
        if modal == "S5" and len(chosen) != n_real:
            continue
        yield chosen


def _shape_truth(shape, w, f, lik_env, memo):
    key = (w, f)
    if key in memo:
        return memo[key]
    if isinstance(f, LikAtom):
        value = lik_env[f]
    elif w not in shape.worlds:
        value = c_contains(shape.C[w], f)
    elif isinstance(f, Know):
        if shape.A is not None and f.sub not in shape.A[w]:
            value = False
        else:
            value = all(_shape_truth(shape, u, f.sub, lik_env, memo)
                        for u in sorted(shape.possible))
    elif isinstance(f, Prop):
        value = shape.pi[w].get(f.name, False)
    elif isinstance(f, Const):
        value = f.value
    elif isinstance(f, Not):
        value = not _shape_truth(shape, w, f.sub, lik_env, memo)
    else:
        value = (_shape_truth(shape, w, f.left, lik_env, memo)
                 and _shape_truth(shape, w, f.right, lik_env, memo))
    memo[key] = value
    return value


def _shape_satisfies(shape, real_ids, f, lik_env):
    for w in real_ids:
        if _shape_truth(shape, w, f, lik_env, {}):
            return w
    return None


def _shape_distribution(shape, latoms, lik_env):
    possible = sorted(shape.possible)
    names = {w: "m_%s" % w for w in possible}
    base = [constraint_ge({names[w]: 1}, ZERO) for w in possible]
    base.append(LinearConstraint.make(
        {names[w]: 1 for w in possible}, "=", ONE))
    groups = []
    for atom in latoms:
        expr = {}
        for coeff, arg in atom.terms:
            for w in possible:
                if w in shape.worlds:
                    satisfied = eval_prop(shape.pi[w], arg)
                else:
                    satisfied = c_contains(shape.C[w], arg)
                if satisfied:
                    expr[names[w]] = expr.get(names[w], ZERO) + coeff
        groups.append(_sign_constraint_choices(expr, atom, lik_env[atom]))
    witness = _solve_with_choices(base, groups)
    if witness is None:
        return None
    return {w: witness[names[w]] for w in possible}
