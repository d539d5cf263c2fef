"""Monomial ideals handled combinatorially, without Groebner bases.

Used as a fast path for monomial input and as an independent check on
:mod:`reestype.groebner`.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ContextMismatchError
from .polyring import Polynomial, VariableContext, mono_divides, mono_lcm, mono_mul


def _minimalize(ms):
    ms = sorted(set(ms), key=sum)
    out = []
    for m in ms:
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return frozenset(out)


class MonomialIdeal:
    """Ideal generated by monomials, stored by its minimal generators."""

    __slots__ = ("ctx", "gens")

    def __init__(self, ctx: VariableContext, gens):
        n = len(ctx)
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != n or any(x < 0 for x in g):
                raise ContextMismatchError(f"monomial {g} does not fit context {ctx}")
        self.ctx = ctx
        self.gens = _minimalize(gens)

    @classmethod
    def from_ideal(cls, ideal) -> "MonomialIdeal":
        gens = []
        for g in ideal.gens:
            if len(g.terms) != 1:
                raise ValueError(f"{g} is not a monomial")
            gens.append(next(iter(g.terms)))
        return cls(ideal.ctx, gens)

    def to_ideal(self):
        from .groebner import Ideal

        one = Fraction(1)
        return Ideal(self.ctx, [Polynomial(self.ctx, {g: one}, _trusted=True) for g in self.sorted_gens()])

    def sorted_gens(self):
        return sorted(self.gens, key=lambda m: (sum(m), tuple(-x for x in m)))

    def is_zero(self):
        return not self.gens

    def __eq__(self, other):
        return isinstance(other, MonomialIdeal) and self.ctx == other.ctx and self.gens == other.gens

    def __hash__(self):
        return hash((self.ctx, self.gens))

    def __len__(self):
        return len(self.gens)

    def __repr__(self):
        from .polyring import format_monomial

        body = ", ".join(format_monomial(g, self.ctx.names) or "1" for g in self.sorted_gens())
        return f"MonomialIdeal({body})"


def _same(I, J):
    if I.ctx != J.ctx:
        raise ContextMismatchError(f"monomial ideals in different contexts: {I.ctx} vs {J.ctx}")


def min_gens(ms, ctx: VariableContext) -> MonomialIdeal:
    return MonomialIdeal(ctx, ms)


def mono_intersect(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I, J)
    return MonomialIdeal(I.ctx, [mono_lcm(g, h) for g in I.gens for h in J.gens])


def mono_product(I: MonomialIdeal, J: MonomialIdeal) -> MonomialIdeal:
    _same(I, J)
    return MonomialIdeal(I.ctx, [mono_mul(g, h) for g in I.gens for h in J.gens])


def mono_power(I: MonomialIdeal, n: int) -> MonomialIdeal:
    if n < 0:
        raise ValueError("power must be non-negative")
    result = MonomialIdeal(I.ctx, [I.ctx.one()])
    for _ in range(n):
        result = mono_product(result, I)
    return result


def mono_member(m, I: MonomialIdeal) -> bool:
    m = tuple(m)
    return any(mono_divides(g, m) for g in I.gens)


def mono_contains(big: MonomialIdeal, small: MonomialIdeal) -> bool:
    _same(big, small)
    return all(mono_member(g, big) for g in small.gens)


def mono_equal(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    _same(I, J)
    return I.gens == J.gens
