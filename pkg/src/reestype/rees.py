"""Equations of the Rees algebra/module and the sifted degrees.

For ``I = (x_1, ..., x_r)`` in ``A = k[a]`` and ``P = A/J`` (or ``P = A``)
the kernel ``H`` of ``A[X] -> R_I(P)``, ``X_i -> x_i t``, is the t-free part
of ``<X_i - x_i t> + J`` in ``A[X, t]``.  With weight 1 on ``X`` and ``t``
and weight 0 on ``a`` those generators are homogeneous, so every element of
the reduced basis is homogeneous and its t-free members are X-homogeneous.

A degree-n relation is effective exactly when the degree-n part of ``H`` is
not ``S_1 * H_{n-1}``.  The degree-n part of the ideal generated by the
basis elements of X-degree ``< n`` is ``S_1 * H_{n-1}``, so the test reduces
to ideal membership of the degree-n basis elements.  Above the top degree of
the basis everything is generated from below, which certifies the profile.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateIdealError, ReesError
from .groebner import Ideal, groebner_basis, ideal_member, is_unit_ideal, normal_form
from .polyring import Polynomial, TermOrder, VariableContext, x_degree


@dataclass(frozen=True)
class ReesPresentation:
    base_ideal: Ideal
    quotient_ideal: Ideal | None = None
    x_names: tuple = ()
    t_name: str = "t"

    def __post_init__(self):
        base = self.base_ideal
        if base.is_zero():
            raise DegenerateIdealError("the zero ideal has no Rees presentation")
        if self.quotient_ideal is not None and self.quotient_ideal.ctx != base.ctx:
            raise ReesError("quotient ideal must live in the base ring")
        names = self.x_names or _fresh_names(base.ctx.names, "X", len(base.gens))
        if len(names) != len(base.gens):
            raise ReesError("need one presentation variable per generator")
        taken = set(base.ctx.names)
        if taken & set(names):
            raise ReesError(f"presentation names clash with base variables: {sorted(taken & set(names))}")
        t = self.t_name
        while t in taken or t in names:
            t += "_"
        object.__setattr__(self, "x_names", tuple(names))
        object.__setattr__(self, "t_name", t)

    @property
    def base_ctx(self) -> VariableContext:
        return self.base_ideal.ctx

    @property
    def kernel_ctx(self) -> VariableContext:
        """A[X]: base variables, then X variables."""
        a = self.base_ctx.names
        return VariableContext(a + self.x_names, block_split=len(a))

    @property
    def working_ctx(self) -> VariableContext:
        """A[X, t] with t first, ready for elimination."""
        return VariableContext((self.t_name,) + self.kernel_ctx.names)


def _fresh_names(taken, stem, n):
    taken = set(taken)
    if n == 1 and stem not in taken:
        return (stem,)
    out = []
    for i in range(1, n + 1):
        name = f"{stem}{i}"
        while name in taken:
            name += "_"
        out.append(name)
    return tuple(out)


@dataclass(frozen=True)
class ReesKernel:
    presentation: ReesPresentation
    gens_by_degree: dict
    max_degree: int

    @property
    def ctx(self) -> VariableContext:
        return self.presentation.kernel_ctx

    def generators(self):
        for d in sorted(self.gens_by_degree):
            yield from self.gens_by_degree[d]

    def below(self, n) -> list:
        return [g for d, gs in self.gens_by_degree.items() if d < n for g in gs]


@dataclass(frozen=True)
class DegreeProfile:
    flags: dict
    horizon: int
    exact: bool = True
    # informational only: whether any relation of degree 1 exists
    has_linear_relations: bool | None = None

    def true_degrees(self) -> list:
        return sorted(n for n, v in self.flags.items() if v)


@dataclass(frozen=True)
class InvariantReport:
    sd: tuple
    st: int
    rt: int
    exact: bool = True
    has_linear_relations: bool | None = None
    profile: DegreeProfile | None = field(default=None, compare=False)

    def __post_init__(self):
        if 1 not in self.sd or list(self.sd) != sorted(set(self.sd)):
            raise ReesError(f"malformed sifted degree set {self.sd}")
        if self.st != len(self.sd) or self.rt != max(self.sd):
            raise ReesError("st/rt inconsistent with sd")

    def as_dict(self) -> dict:
        return {"sd": list(self.sd), "st": self.st, "rt": self.rt, "exact": self.exact}


def rees_kernel(pres: ReesPresentation, inner: str = "degrevlex") -> ReesKernel:
    """X-graded generators of the Rees kernel via elimination of t.

    ``inner`` is the order used on A[X] inside the t-elimination block order.
    """
    base = pres.base_ctx
    W = pres.working_ctx
    m = len(base)
    t = W.gen(pres.t_name)
    a_pos = list(range(1, 1 + m))
    gens = []
    for i, x in enumerate(pres.base_ideal.gens):
        X = W.gen(pres.x_names[i])
        gens.append(X - x.embed(W, a_pos) * t)
    if pres.quotient_ideal is not None:
        gens.extend(g.embed(W, a_pos) for g in pres.quotient_ideal.gens)
    G = groebner_basis(Ideal(W, gens), TermOrder.block(1, inner))

    K = pres.kernel_ctx
    by_degree: dict = {}
    for g in G.elements:
        if any(e[0] for e in g.terms):
            continue
        h = Polynomial(K, {e[1:]: c for e, c in g.terms.items()}, _trusted=True)
        by_degree.setdefault(x_degree(h), []).append(h)
    if pres.quotient_ideal is None and 0 in by_degree:
        raise ReesError("kernel has degree-0 part although P = A")
    top = max(by_degree) if by_degree else 0
    return ReesKernel(pres, {d: tuple(v) for d, v in sorted(by_degree.items())}, top)


def effective_profile(H: ReesKernel, order: TermOrder | None = None) -> DegreeProfile:
    """Flag each degree n >= 2 whose relations are not generated below n."""
    order = order or TermOrder.degrevlex()
    flags = {}
    lower = None  # Groebner basis of the generators of degree < n
    pending = list(H.gens_by_degree.get(0, ()))
    for n in range(2, H.max_degree + 1):
        pending.extend(H.gens_by_degree.get(n - 1, ()))
        top = H.gens_by_degree.get(n, ())
        if not top:
            flags[n] = False
            continue
        if pending:
            lower = groebner_basis(Ideal(H.ctx, pending), order, seed=lower)
            pending = []
        if lower is None:
            flags[n] = True
        else:
            flags[n] = any(normal_form(g, lower) for g in top)
    has_linear = bool(H.gens_by_degree.get(1))
    return DegreeProfile(flags, max(H.max_degree, 1), True, has_linear)


def effective_generator_count(H: ReesKernel, n: int) -> int:
    """Minimal number of generators of the degree-n effective relations.

    Greedy over the degree-n basis elements by increasing total degree; this
    is the minimal count when the kernel is also homogeneous in the base
    variables (homogeneous I and J).
    """
    lower = H.below(n)
    chosen = 0
    G = groebner_basis(Ideal(H.ctx, lower)) if lower else None
    for g in sorted(H.gens_by_degree.get(n, ()), key=lambda f: (f.total_degree(), len(f))):
        if G is not None and not normal_form(g, G):
            continue
        chosen += 1
        lower.append(g)
        G = groebner_basis(Ideal(H.ctx, lower))
    return chosen


def invariant_report(profile: DegreeProfile) -> InvariantReport:
    sd = (1,) + tuple(profile.true_degrees())
    return InvariantReport(sd, len(sd), max(sd), profile.exact, profile.has_linear_relations, profile)


def sifted_invariants(I: Ideal, J: Ideal | None = None, order: str = "degrevlex") -> InvariantReport:
    """SD, st and rt of I with respect to A (or A/J).

    ``order`` ("degrevlex" or "lex") only changes the route, never the result.
    """
    if I.is_zero():
        raise DegenerateIdealError("I is the zero ideal")
    if is_unit_ideal(I):
        raise DegenerateIdealError("I is the unit ideal")
    if J is not None:
        if J.ctx != I.ctx:
            raise ReesError("I and J live in different rings")
        if not J.is_zero() and is_unit_ideal(J):
            raise DegenerateIdealError("J is the unit ideal, so A/J = 0")
        if J.is_zero():
            J = None
    H = rees_kernel(ReesPresentation(I, J), order)
    return invariant_report(effective_profile(H, TermOrder.from_name(order)))


def check_kernel_element(F: Polynomial, pres: ReesPresentation) -> bool:
    """True iff F(x_1, ..., x_r) lies in J (is zero when P = A)."""
    if F.ctx != pres.kernel_ctx:
        raise ReesError("F is not in the kernel ring")
    base = pres.base_ctx
    value = F.substitute(list(base.gens()) + list(pres.base_ideal.gens), base)
    if pres.quotient_ideal is None:
        return not value
    return ideal_member(value, pres.quotient_ideal)
