"""Exact sparse multivariate polynomials over the rationals.

A polynomial is a map from exponent tuples to nonzero ``Fraction``
coefficients; the zero polynomial stores no terms.  Values are immutable
after construction and every operation is a pure function, so they can be
shared freely.

Monomials are plain exponent tuples (one nonnegative int per ring
variable); the helpers ``monomial_product`` / ``monomial_divides`` /
``monomial_lcm`` operate on those directly.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import RingMismatchError, SymlabError, ZeroDivisorError
from .orders import MonomialOrder, grevlex

Exponents = tuple  # tuple[int, ...], one entry per ring variable


def monomial_product(m1: Exponents, m2: Exponents) -> Exponents:
    _check_len(m1, m2)
    return tuple(a + b for a, b in zip(m1, m2))


def monomial_divides(m1: Exponents, m2: Exponents) -> bool:
    """True iff m1 divides m2 (componentwise <=)."""
    _check_len(m1, m2)
    return all(a <= b for a, b in zip(m1, m2))


def monomial_lcm(m1: Exponents, m2: Exponents) -> Exponents:
    _check_len(m1, m2)
    return tuple(max(a, b) for a, b in zip(m1, m2))


def monomial_quotient(m1: Exponents, m2: Exponents) -> Exponents:
    """m1 / m2; requires m2 | m1."""
    if not monomial_divides(m2, m1):
        raise SymlabError(f"monomial {m2} does not divide {m1}")
    return tuple(a - b for a, b in zip(m1, m2))


def _check_len(m1, m2):
    if len(m1) != len(m2):
        raise RingMismatchError(
            f"exponent tuples of different lengths: {len(m1)} vs {len(m2)}"
        )


class PolyRing:
    """A polynomial ring over Q with named variables.

    The variable count is fixed at creation; enlarged rings (tag or
    auxiliary variables) are fresh rings built with :meth:`extend`, with
    explicit lifting/projection of elements.
    """

    __slots__ = ("variables", "_index")

    def __init__(self, variables):
        names = tuple(variables)
        if not names:
            raise ValueError("a ring needs at least one variable")
        for v in names:
            if not v.isidentifier():
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        self.variables = names
        self._index = {v: i for i, v in enumerate(names)}

    @property
    def n(self) -> int:
        return len(self.variables)

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, value) -> "Polynomial":
        c = Fraction(value)
        if c == 0:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.n: c})

    def variable(self, i) -> "Polynomial":
        """The i-th variable (index or name) as a polynomial."""
        if isinstance(i, str):
            i = self.variable_index(i)
        e = [0] * self.n
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def variable_index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise SymlabError(f"{name!r} is not a variable of {self}") from None

    def monomial(self, exponents, coeff=1) -> "Polynomial":
        e = tuple(exponents)
        if len(e) != self.n or any(x < 0 for x in e):
            raise ValueError(f"bad exponent tuple {e} for {self}")
        c = Fraction(coeff)
        return Polynomial(self, {e: c} if c else {})

    def from_terms(self, terms) -> "Polynomial":
        out = {}
        for e, c in dict(terms).items():
            c = Fraction(c)
            if c:
                out[tuple(e)] = c
        return Polynomial(self, out)

    def parse(self, text: str) -> "Polynomial":
        from .parsing import parse_polynomial

        return parse_polynomial(self, text)

    def parse_ideal_gens(self, text: str) -> list:
        from .parsing import parse_generators

        return parse_generators(self, text)

    def default_order(self) -> MonomialOrder:
        return grevlex()

    def extend(self, *names: str) -> "PolyRing":
        """Fresh ring with extra variables appended after the current ones."""
        clash = set(names) & set(self.variables)
        if clash:
            raise ValueError(f"variables already present: {sorted(clash)}")
        return PolyRing(self.variables + tuple(names))

    def fresh_name(self, stem: str) -> str:
        """A variable name built on ``stem`` that does not clash."""
        if stem not in self._index:
            return stem
        i = 0
        while f"{stem}{i}" in self._index:
            i += 1
        return f"{stem}{i}"

    def lift(self, f: "Polynomial", bigger: "PolyRing") -> "Polynomial":
        """Embed f into a ring that contains this ring's variables."""
        pos = [bigger.variable_index(v) for v in self.variables]
        terms = {}
        for e, c in f.terms.items():
            new = [0] * bigger.n
            for p, x in zip(pos, e):
                new[p] = x
            terms[tuple(new)] = c
        return Polynomial(bigger, terms)

    def project(self, f: "Polynomial", smaller: "PolyRing") -> "Polynomial":
        """Map f into a subring; f must not involve the dropped variables."""
        keep = [self.variable_index(v) for v in smaller.variables]
        keepset = set(keep)
        terms = {}
        for e, c in f.terms.items():
            if any(x and i not in keepset for i, x in enumerate(e)):
                raise SymlabError(f"{f} involves variables outside {smaller}")
            terms[tuple(e[i] for i in keep)] = c
        return Polynomial(smaller, terms)

    def __eq__(self, other):
        return isinstance(other, PolyRing) and self.variables == other.variables

    def __hash__(self):
        return hash(self.variables)

    def __repr__(self):
        return f"QQ[{', '.join(self.variables)}]"


class Polynomial:
    """Immutable exact polynomial; ``terms`` maps exponents to coefficients."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_coefficient(self) -> Fraction:
        return self.terms.get((0,) * self.ring.n, Fraction(0))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def leading_term(self, order: MonomialOrder | None = None):
        """(exponents, coefficient) of the order-maximal term; f must be nonzero."""
        if not self.terms:
            raise ZeroDivisorError("the zero polynomial has no leading term")
        order = order or self.ring.default_order()
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def leading_monomial(self, order=None) -> Exponents:
        return self.leading_term(order)[0]

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in g.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        out = dict(self.terms)
        for e, c in g.terms.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Polynomial(self.ring, out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        g = self._coerce(other)
        if g is NotImplemented:
            return NotImplemented
        if not self.terms or not g.terms:
            return self.ring.zero()
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in g.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers need a nonnegative integer")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: c * a for e, a in self.terms.items()})

    def monic(self, order=None) -> "Polynomial":
        if not self.terms:
            return self
        _, lc = self.leading_term(order)
        return self.scale(Fraction(1) / lc) if lc != 1 else self

    def shift_multiply(self, exponents: Exponents, coeff) -> "Polynomial":
        """self * coeff * x^exponents, in one pass."""
        c = Fraction(coeff)
        if not c:
            return self.ring.zero()
        return Polynomial(
            self.ring,
            {
                tuple(a + b for a, b in zip(e, exponents)): c * v
                for e, v in self.terms.items()
            },
        )

    # -- calculus and substitution --------------------------------------

    def partial_derivative(self, var: int | str) -> "Polynomial":
        """Formal partial derivative with respect to one variable."""
        i = self.ring.variable_index(var) if isinstance(var, str) else var
        if not 0 <= i < self.ring.n:
            raise ValueError(f"variable index {i} out of range")
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            d = list(e)
            d[i] -= 1
            out[tuple(d)] = c * e[i]
        return Polynomial(self.ring, out)

    def substitute(self, target: PolyRing, images) -> "Polynomial":
        """Evaluate at variable -> polynomial images living in ``target``."""
        images = list(images)
        if len(images) != self.ring.n:
            raise ValueError("need one image per variable")
        powers = [{0: target.one()} for _ in images]

        def power(i, k):
            cache = powers[i]
            if k not in cache:
                cache[k] = power(i, k - 1) * images[i]
            return cache[k]

        acc = target.zero()
        for e, c in self.terms.items():
            term = target.constant(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            acc = acc + term
        return acc

    # -- identity -------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self.terms.items())))
        return self._hash

    def sorted_terms(self, order: MonomialOrder | None = None):
        """Terms sorted descending by the order (lex tie-break is vacuous)."""
        order = order or self.ring.default_order()
        return sorted(self.terms.items(), key=lambda t: (order.key(t[0]), t[0]), reverse=True)

    def to_string(self, order: MonomialOrder | None = None) -> str:
        from .parsing import format_polynomial

        return format_polynomial(self, order)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"<{self.to_string()}>"
