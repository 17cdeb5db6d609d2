"""Ideal calculus: sum, product, power, intersection, quotient, saturation,
elimination, radical membership, colength.

Intersections use the single tag-variable method (t*I + (1-t)*J, then
eliminate t by a block order), which keeps everything inside the
polynomial Groebner engine.  Generator lists are minimized best-effort:
a generator is dropped when it lies in the ideal of the remaining ones.
Ideals are compared by reduced Groebner basis, never by generator lists.
"""

from __future__ import annotations

import itertools

from .budget import StepBudget, ensure_budget
from .errors import BudgetExhaustedError, SymlabError, ZeroDivisorError
from .groebner import Ideal, buchberger, exact_divide, normal_form
from .orders import block_order, elimination_order, grevlex
from .poly import PolyRing, monomial_divides

SATURATION_STEP_CAP = 512


def minimize_generators(ring, gens, budget=None):
    """Drop generators lying in the ideal of the others (best effort)."""
    gens = [g for g in gens if g]
    # dedupe, keeping first occurrences
    seen = set()
    unique = []
    for g in gens:
        key = g.monic()
        if key not in seen:
            seen.add(key)
            unique.append(g)
    gens = unique
    if len(gens) <= 1:
        return gens
    if all(g.is_monomial() for g in gens):
        # antichain under divisibility
        exps = [g.leading_monomial() for g in gens]
        keep = []
        for i, e in enumerate(exps):
            if any(
                j != i and monomial_divides(d, e) and (d != e or j < i)
                for j, d in enumerate(exps)
            ):
                continue
            keep.append(gens[i])
        return keep
    order = ring.default_order()
    kept = list(gens)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1 :]
        gb = buchberger(others, order, ensure_budget(budget))
        if gb and not normal_form(kept[i], gb, order, ensure_budget(budget)):
            kept.pop(i)
        else:
            i += 1
    return kept


def ideal_sum(I: Ideal, J: Ideal, budget=None) -> Ideal:
    _same_ring(I, J)
    return Ideal(I.ring, minimize_generators(I.ring, list(I.gens) + list(J.gens), budget))


def ideal_product(I: Ideal, J: Ideal, budget=None) -> Ideal:
    _same_ring(I, J)
    prods = [f * g for f in I.gens for g in J.gens]
    return Ideal(I.ring, minimize_generators(I.ring, prods, budget))


def ideal_power(I: Ideal, n: int, budget=None) -> Ideal:
    if n < 0:
        raise ValueError("ideal powers need n >= 0")
    if n == 0:
        return Ideal(I.ring, [I.ring.one()])
    if n == 1:
        return I
    prods = []
    for combo in itertools.combinations_with_replacement(I.gens, n):
        p = combo[0]
        for q in combo[1:]:
            p = p * q
        prods.append(p)
    return Ideal(I.ring, minimize_generators(I.ring, prods, budget))


def intersect(I: Ideal, J: Ideal, budget=None) -> Ideal:
    """I ∩ J by tag-variable elimination."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal(I.ring, [])
    ring = I.ring
    big = ring.extend(ring.fresh_name("tag_"))
    t = big.variable(big.n - 1)
    lifted = [t * ring.lift(f, big) for f in I.gens]
    lifted += [(big.one() - t) * ring.lift(g, big) for g in J.gens]
    # tag variable leads, so the zero-tag part of the basis is I ∩ J
    order = block_order(1, "grevlex", priority=(big.n - 1,) + tuple(range(ring.n)))
    gb = buchberger(lifted, order, ensure_budget(budget))
    kept = [big.project(g, ring) for g in gb if g.leading_monomial(order)[_tag_pos(order)] == 0]
    return Ideal(ring, minimize_generators(ring, kept, budget))


def _tag_pos(order):
    return order.priority[0]


def intersect_many(ideals, budget=None) -> Ideal:
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    acc = ideals[0]
    for J in ideals[1:]:
        acc = intersect(acc, J, budget)
    return acc


def quotient(I: Ideal, J: Ideal, budget=None) -> Ideal:
    """The colon ideal (I : J) = {f | f*J ⊆ I}."""
    _same_ring(I, J)
    if J.is_zero():
        raise ZeroDivisorError("colon ideal by the zero ideal")
    result = None
    for g in J.gens:
        if g.is_constant():
            part = I
        else:
            meet = intersect(I, Ideal(I.ring, [g]), budget)
            part = Ideal(I.ring, [exact_divide(h, g, budget=ensure_budget(budget)) for h in meet.gens])
        result = part if result is None else intersect(result, part, budget)
    return result


def saturate(I: Ideal, J: Ideal, budget=None):
    """(I : J^∞) together with the stabilization exponent.

    Iterates colon ideals so the exponent — the smallest k with
    (I : J^k) = (I : J^(k+1)) — is observable; acceptance checks use it.
    """
    _same_ring(I, J)
    if J.is_zero():
        raise ZeroDivisorError("saturation by the zero ideal")
    prev = I
    for k in range(SATURATION_STEP_CAP):
        nxt = quotient(prev, J, budget)
        if nxt == prev:
            return prev, k
        prev = nxt
    raise BudgetExhaustedError(SATURATION_STEP_CAP)


def eliminate(I: Ideal, drop, budget=None) -> Ideal:
    """I ∩ Q[kept variables], as an ideal of the smaller ring.

    ``drop`` is an iterable of variable names or indices; it must leave at
    least one variable.  With nothing to drop, returns I unchanged.
    """
    ring = I.ring
    drop_idx = sorted(
        ring.variable_index(v) if isinstance(v, str) else int(v) for v in set(drop)
    )
    if not drop_idx:
        return I
    if len(drop_idx) >= ring.n:
        raise SymlabError("cannot eliminate every variable")
    keep_idx = [i for i in range(ring.n) if i not in drop_idx]
    small = PolyRing([ring.variables[i] for i in keep_idx])
    order = elimination_order(drop_idx, ring.n)
    gb = buchberger(I.gens, order, ensure_budget(budget))
    kept = []
    for g in gb:
        if all(all(e[i] == 0 for i in drop_idx) for e in g.terms):
            kept.append(ring.project(g, small))
    return Ideal(small, minimize_generators(small, kept, budget))


def radical_member(f, I: Ideal, budget=None) -> bool:
    """f ∈ √I, by testing 1 ∈ I + (1 - w*f) in an enlarged ring."""
    if isinstance(f, str):
        f = I.ring.parse(f)
    if not f:
        return True
    ring = I.ring
    big = ring.extend(ring.fresh_name("rad_"))
    w = big.variable(big.n - 1)
    gens = [ring.lift(g, big) for g in I.gens]
    gens.append(big.one() - w * ring.lift(f, big))
    gb = buchberger(gens, grevlex(), ensure_budget(budget))
    return len(gb) == 1 and gb[0] == big.one()


def colength(I: Ideal, budget=None):
    """Number of standard monomials, or None when the quotient is infinite
    dimensional (the staircase is unbounded)."""
    ring = I.ring
    gb = I.groebner_basis(budget=budget)
    if not gb:
        return None
    lms = [g.leading_monomial() for g in gb]
    if any(not any(e) for e in lms):
        return 0  # unit ideal
    bounds = []
    for i in range(ring.n):
        pure = [e[i] for e in lms if sum(e) == e[i]]
        if not pure:
            return None
        bounds.append(min(pure))
    count = 0
    for v in itertools.product(*(range(b) for b in bounds)):
        if not any(monomial_divides(m, v) for m in lms):
            count += 1
    return count


def _same_ring(I, J):
    if I.ring != J.ring:
        raise SymlabError(f"ideals in different rings: {I.ring} vs {J.ring}")
