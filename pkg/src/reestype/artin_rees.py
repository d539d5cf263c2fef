"""Artin-Rees modules (I^n ∩ J) / I(I^{n-1} ∩ J) and the numbers w, m, s.

The profile is only computed up to ``rt(I; A/J)``: the strong number never
exceeds it, so every later Artin-Rees module is zero.

The weak number needs only the window ``c <= n <= s``.  Beyond ``s``,
``I^n ∩ J = I^{n-s}(I^s ∩ J)``, so ``I^s ∩ J ⊆ I^{s-c} J`` propagates to all
larger ``n``; and ``c = s`` always works, so ``w <= s``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import DegenerateIdealError, ReesError
from .groebner import Ideal, ideal_contains, ideal_intersect, ideal_power, ideal_product, is_unit_ideal
from .monomial import MonomialIdeal, mono_contains, mono_intersect, mono_power, mono_product
from .rees import InvariantReport, sifted_invariants


@dataclass(frozen=True)
class ArtinReesProfile:
    flags: dict
    horizon: int
    exact: bool = True
    engine: str = "groebner"

    def true_degrees(self) -> list:
        return sorted(n for n, v in self.flags.items() if v)


@dataclass(frozen=True)
class ArtinReesReport:
    w: int
    m: int
    s: int
    profile: ArtinReesProfile
    quotient_report: InvariantReport = field(compare=False)

    @property
    def st_mod(self) -> int:
        return self.quotient_report.st

    @property
    def rt_mod(self) -> int:
        return self.quotient_report.rt

    def five(self) -> tuple:
        return (self.w, self.m, self.s, self.st_mod, self.rt_mod)

    def as_dict(self) -> dict:
        return {
            "w": self.w, "m": self.m, "s": self.s,
            "profile": {str(n): v for n, v in sorted(self.profile.flags.items())},
            "horizon": self.profile.horizon,
            "st_mod": self.st_mod, "rt_mod": self.rt_mod,
            "sd_mod": list(self.quotient_report.sd),
        }


class _GroebnerOps:
    name = "groebner"

    def __init__(self, I, J):
        self.I, self.J = I, J

    def power(self, n):
        return ideal_power(self.I, n)

    def intersect(self, A, B):
        return ideal_intersect(A, B)

    def product(self, A, B):
        return ideal_product(A, B)

    def contains(self, big, small):
        return ideal_contains(big, small)


class _MonomialOps:
    name = "monomial"

    def __init__(self, I, J):
        self.I = MonomialIdeal.from_ideal(I)
        self.J = MonomialIdeal.from_ideal(J)

    def power(self, n):
        return mono_power(self.I, n)

    def intersect(self, A, B):
        return mono_intersect(A, B)

    def product(self, A, B):
        return mono_product(A, B)

    def contains(self, big, small):
        return mono_contains(big, small)


def _ops(I, J, engine):
    if engine == "auto":
        engine = "monomial" if I.is_monomial() and J.is_monomial() else "groebner"
    if engine == "monomial":
        return _MonomialOps(I, J)
    if engine == "groebner":
        return _GroebnerOps(I, J)
    raise ValueError(f"unknown engine {engine!r}")


class ArtinReesComputation:
    """Shared state for one pair (I, J): powers, U_n = I^n ∩ J, V_n."""

    def __init__(self, I: Ideal, J: Ideal, engine: str = "auto", horizon: int | None = None,
                 quotient_report: InvariantReport | None = None):
        _validate(I, J)
        self.I, self.J = I, J
        self.ops = _ops(I, J, engine)
        self._u: dict = {}
        self._v: dict = {}
        self.quotient_report = quotient_report
        if horizon is None:
            if self.quotient_report is None:
                self.quotient_report = sifted_invariants(I, J)
            horizon = self.quotient_report.rt
        self.horizon = horizon

    def U(self, n):
        if n not in self._u:
            self._u[n] = self.ops.intersect(self.ops.power(n), self.ops.J)
        return self._u[n]

    def V(self, n):
        if n not in self._v:
            self._v[n] = self.ops.product(self.ops.I, self.U(n - 1))
        return self._v[n]

    def flag(self, n) -> bool:
        # V_n ⊆ U_n always holds, so equality is the reverse containment
        return not self.ops.contains(self.V(n), self.U(n))

    def profile(self) -> ArtinReesProfile:
        flags = {n: self.flag(n) for n in range(2, self.horizon + 1)}
        return ArtinReesProfile(flags, self.horizon, True, self.ops.name)

    def weak(self, s: int) -> int:
        for c in range(1, s):
            if all(self.ops.contains(self.ops.product(self.ops.power(n - c), self.ops.J), self.U(n))
                   for n in range(c + 1, s + 1)):
                return c
        return s


def _validate(I, J):
    if I.ctx != J.ctx:
        raise ReesError("I and J live in different rings")
    for name, K in (("I", I), ("J", J)):
        if K.is_zero():
            raise DegenerateIdealError(f"{name} is the zero ideal")
        if is_unit_ideal(K):
            raise DegenerateIdealError(f"{name} is the unit ideal")


def artin_rees_profile(I: Ideal, J: Ideal, engine: str = "auto") -> ArtinReesProfile:
    return ArtinReesComputation(I, J, engine).profile()


def strong_number(profile: ArtinReesProfile) -> int:
    return max([1] + profile.true_degrees())


def medium_number(profile: ArtinReesProfile) -> int:
    return 1 + len(profile.true_degrees())


def weak_number(I: Ideal, J: Ideal, s: int, engine: str = "auto",
                computation: ArtinReesComputation | None = None) -> int:
    """Least c >= 1 with I^n ∩ J ⊆ I^{n-c} J for every n >= c."""
    if s <= 1:
        return 1
    comp = computation or ArtinReesComputation(I, J, engine, horizon=s)
    return comp.weak(s)


def artin_rees_numbers(I: Ideal, J: Ideal, engine: str = "auto") -> ArtinReesReport:
    comp = ArtinReesComputation(I, J, engine)
    prof = comp.profile()
    s = strong_number(prof)
    m = medium_number(prof)
    w = weak_number(I, J, s, computation=comp)
    return ArtinReesReport(w, m, s, prof, comp.quotient_report)


def check_v_in_u(comp: ArtinReesComputation, n: int) -> bool:
    return comp.ops.contains(comp.U(n), comp.V(n))


__all__ = [
    "ArtinReesProfile", "ArtinReesReport", "ArtinReesComputation", "artin_rees_profile",
    "strong_number", "medium_number", "weak_number", "artin_rees_numbers", "check_v_in_u",
]

