"""Buchberger's algorithm, normal forms, and the Ideal type.

The engine follows the normal selection strategy (pairs with the smallest
lcm in the active order first) and applies Buchberger's first (coprime
leading monomials) and second (chain) criteria.  Computed bases are made
monic and fully auto-reduced before caching, so the stored basis for an
(ideal, order) pair is the unique reduced Groebner basis — which is what
lets tests compare ideals by basis equality.

Every reduction loop spends from a :class:`~symlab.budget.StepBudget`;
runaway computations abort with a budget error instead of stalling.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .budget import StepBudget, ensure_budget
from .errors import RingMismatchError, SymlabError, ZeroDivisorError
from .orders import MonomialOrder
from .poly import Polynomial, PolyRing, monomial_divides, monomial_lcm


def normal_form(f, basis, order=None, budget=None):
    """Remainder of f on division by the basis sequence.

    No term of the result is divisible by any basis leading monomial, and
    f - result lies in the ideal generated by the basis.  Deterministic
    given the basis order.
    """
    r, _ = _divide(f, list(basis), order, ensure_budget(budget), track=False)
    return r


def exact_divide(f, g, order=None, budget=None):
    """The quotient f/g for exact divisibility; raises if g does not divide f."""
    if not g:
        raise ZeroDivisorError("division by the zero polynomial")
    r, (q,) = _divide(f, [g], order, ensure_budget(budget), track=True)
    if r:
        raise SymlabError(f"{g} does not divide {f}")
    return q


def _divide(f, basis, order, budget, track):
    order = order or f.ring.default_order()
    ring = f.ring
    prepared = []
    quotients = []
    for g in basis:
        if g.ring != ring:
            raise RingMismatchError("divisor in a different ring")
        if not g:
            raise ZeroDivisorError("zero polynomial in division basis")
        lm, lc = g.leading_term(order)
        prepared.append((lm, lc, g))
        quotients.append(ring.zero() if track else None)

    work = dict(f.terms)
    remainder = {}
    key = order.key
    while work:
        e = max(work, key=key)
        c = work[e]
        for idx, (lm, lc, g) in enumerate(prepared):
            if monomial_divides(lm, e):
                budget.spend()
                shift = tuple(a - b for a, b in zip(e, lm))
                coeff = c / lc
                for m, a in g.terms.items():
                    t = tuple(x + y for x, y in zip(m, shift))
                    s = work.get(t, 0) - coeff * a
                    if s:
                        work[t] = s
                    else:
                        work.pop(t, None)
                if track:
                    quotients[idx] = quotients[idx] + ring.monomial(shift, coeff)
                break
        else:
            remainder[e] = work.pop(e)
    return Polynomial(ring, remainder), quotients


def s_polynomial(f, g, order=None):
    order = order or f.ring.default_order()
    lmf, lcf = f.leading_term(order)
    lmg, lcg = g.leading_term(order)
    lcm = monomial_lcm(lmf, lmg)
    sf = tuple(a - b for a, b in zip(lcm, lmf))
    sg = tuple(a - b for a, b in zip(lcm, lmg))
    return f.shift_multiply(sf, Fraction(1) / lcf) - g.shift_multiply(sg, Fraction(1) / lcg)


def buchberger(gens, order=None, budget=None):
    """The reduced, monic Groebner basis of the ideal the generators span.

    Unique for the (ideal, order) pair; the empty input yields the empty
    basis (the zero ideal).
    """
    gens = [g for g in gens if g]
    if not gens:
        return []
    ring = gens[0].ring
    order = order or ring.default_order()
    budget = ensure_budget(budget)

    basis = []
    seen = set()
    for g in gens:
        g = g.monic(order)
        if g not in seen:
            seen.add(g)
            basis.append(g)
    lms = [g.leading_monomial(order) for g in basis]

    pending = set()
    heap = []

    def push_pairs(j):
        for i in range(j):
            lcm = monomial_lcm(lms[i], lms[j])
            heapq.heappush(heap, (order.key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = monomial_lcm(lms[i], lms[j])
        # first criterion: coprime leading monomials
        if lcm == tuple(a + b for a, b in zip(lms[i], lms[j])):
            continue
        if _chain_criterion(i, j, lcm, lms, pending):
            continue
        s = s_polynomial(basis[i], basis[j], order)
        h, _ = _divide(s, basis, order, budget, track=False)
        if h:
            h = h.monic(order)
            basis.append(h)
            lms.append(h.leading_monomial(order))
            push_pairs(len(basis) - 1)

    return _reduce_basis(basis, order, budget)


def _chain_criterion(i, j, lcm, lms, pending):
    # second criterion: some lm_k divides lcm(i,j) and both companion
    # pairs are no longer queued (Cox-Little-O'Shea refinement)
    for k in range(len(lms)):
        if k == i or k == j:
            continue
        if not monomial_divides(lms[k], lcm):
            continue
        pik = (min(i, k), max(i, k))
        pjk = (min(j, k), max(j, k))
        if pik not in pending and pjk not in pending:
            return True
    return False


def _reduce_basis(basis, order, budget):
    # drop elements whose leading monomial is a multiple of another's
    lms = [g.leading_monomial(order) for g in basis]
    keep = []
    for i, lm in enumerate(lms):
        redundant = False
        for j, other in enumerate(lms):
            if i == j:
                continue
            if monomial_divides(other, lm) and (other != lm or j < i):
                redundant = True
                break
        if not redundant:
            keep.append(basis[i])
    # tail-reduce every survivor against the others
    reduced = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1 :]
        if others:
            g, _ = _divide(g, others, order, budget, track=False)
        reduced.append(g.monic(order))
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)), reverse=True)
    return reduced


class Ideal:
    """A finitely generated ideal with cached reduced Groebner bases.

    Zero generators are pruned at construction.  The cache is written at
    most once per order; concurrent duplicate computation is harmless
    because reduced bases are unique.
    """

    __slots__ = ("ring", "gens", "_gb")

    def __init__(self, ring: PolyRing, gens):
        self.ring = ring
        cleaned = []
        for g in gens:
            if isinstance(g, str):
                g = ring.parse(g)
            if g.ring != ring:
                raise RingMismatchError("generator in a different ring")
            if g:
                cleaned.append(g)
        self.gens = tuple(cleaned)
        self._gb = {}

    def is_zero(self) -> bool:
        return not self.gens

    def groebner_basis(self, order: MonomialOrder | None = None, budget=None):
        order = order or self.ring.default_order()
        if order not in self._gb:
            self._gb[order] = buchberger(self.gens, order, budget)
        return self._gb[order]

    def is_unit(self, budget=None) -> bool:
        gb = self.groebner_basis(budget=budget)
        return len(gb) == 1 and gb[0] == self.ring.one()

    def contains_poly(self, f, order=None, budget=None) -> bool:
        """Ideal membership: normal form against the reduced basis is zero."""
        if isinstance(f, str):
            f = self.ring.parse(f)
        if f.ring != self.ring:
            raise RingMismatchError("membership test across rings")
        if not f:
            return True
        gb = self.groebner_basis(order, budget)
        if not gb:
            return False
        return not normal_form(f, gb, order or self.ring.default_order(), budget)

    def contains(self, other: "Ideal", budget=None) -> bool:
        """True iff every generator of ``other`` lies in this ideal."""
        if other.ring != self.ring:
            raise RingMismatchError("containment test across rings")
        return all(self.contains_poly(g, budget=budget) for g in other.gens)

    def first_missing_generator(self, other: "Ideal", budget=None):
        """A generator of ``other`` outside this ideal, or None (a witness)."""
        for g in other.gens:
            if not self.contains_poly(g, budget=budget):
                return g
        return None

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        if self.ring != other.ring:
            return False
        if self.gens == other.gens:
            return True
        return self.groebner_basis() == other.groebner_basis()

    __hash__ = None  # equality is mathematical, not structural

    def __repr__(self):
        inside = ", ".join(g.to_string() for g in self.gens) or "0"
        return f"Ideal({inside})"


def is_member(f, ideal: Ideal, budget=None) -> bool:
    return ideal.contains_poly(f, budget=budget)


def contains(outer: Ideal, inner: Ideal, budget=None) -> bool:
    return outer.contains(inner, budget=budget)
