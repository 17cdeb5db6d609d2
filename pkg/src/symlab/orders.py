"""Monomial orders: lex, graded lex, graded reverse lex, and block orders.

An order compares exponent tuples through a sort key; keys are tuples of
integers (possibly nested for block orders), so Python tuple comparison
realizes the order.  All four kinds are total, multiplicative
(m1 < m2 implies m1*n < m2*n, because every key component is a linear
function of the exponents) and have 1 as the minimum.

A ``priority`` permutation lists variable indices from most to least
significant; the default is the ring's own variable order.  Block orders
compare the leading ``elim_size`` variables (by graded reverse lex) first,
so they eliminate those variables.
"""

from __future__ import annotations

KINDS = ("lex", "grlex", "grevlex", "block")


class MonomialOrder:
    __slots__ = ("kind", "priority", "elim_size", "inner_kind")

    def __init__(self, kind, priority=None, elim_size=0, inner_kind="grevlex"):
        if kind not in KINDS:
            raise ValueError(f"unknown order kind {kind!r}")
        if kind == "block":
            if elim_size <= 0:
                raise ValueError("block order needs a positive elimination block")
            if inner_kind not in ("lex", "grlex", "grevlex"):
                raise ValueError(f"invalid inner order {inner_kind!r}")
        self.kind = kind
        self.priority = tuple(priority) if priority is not None else None
        self.elim_size = elim_size
        self.inner_kind = inner_kind

    def key(self, exponents):
        """Sort key; larger key = larger monomial."""
        e = exponents
        if self.priority is not None:
            e = tuple(e[i] for i in self.priority)
        if self.kind == "lex":
            return _lex_key(e)
        if self.kind == "grlex":
            return _grlex_key(e)
        if self.kind == "grevlex":
            return _grevlex_key(e)
        head, tail = e[: self.elim_size], e[self.elim_size :]
        inner = {"lex": _lex_key, "grlex": _grlex_key, "grevlex": _grevlex_key}[
            self.inner_kind
        ]
        return (_grevlex_key(head), inner(tail))

    def compare(self, e1, e2) -> int:
        k1, k2 = self.key(e1), self.key(e2)
        return (k1 > k2) - (k1 < k2)

    def _ident(self):
        return (self.kind, self.priority, self.elim_size, self.inner_kind)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def __repr__(self):
        if self.kind == "block":
            return f"MonomialOrder(block[{self.elim_size}]+{self.inner_kind}, priority={self.priority})"
        if self.priority is None:
            return f"MonomialOrder({self.kind})"
        return f"MonomialOrder({self.kind}, priority={self.priority})"


def _lex_key(e):
    return e


def _grlex_key(e):
    return (sum(e), e)


def _grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex(priority=None) -> MonomialOrder:
    return MonomialOrder("lex", priority)


def grlex(priority=None) -> MonomialOrder:
    return MonomialOrder("grlex", priority)


def grevlex(priority=None) -> MonomialOrder:
    return MonomialOrder("grevlex", priority)


def block_order(elim_size: int, inner_kind: str = "grevlex", priority=None) -> MonomialOrder:
    """Elimination order: the first ``elim_size`` priority variables dominate."""
    return MonomialOrder("block", priority, elim_size, inner_kind)


def elimination_order(drop_indices, n: int) -> MonomialOrder:
    """Block order pushing the given variable indices into the leading block."""
    drop = tuple(drop_indices)
    keep = tuple(i for i in range(n) if i not in set(drop))
    return block_order(len(drop), "grevlex", priority=drop + keep)


def order_from_name(name: str, priority=None) -> MonomialOrder:
    name = name.strip().lower()
    if name in ("lex", "grlex", "grevlex"):
        return MonomialOrder(name, priority)
    raise ValueError(f"unknown monomial order {name!r}")
