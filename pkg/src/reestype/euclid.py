"""Closed form for three monomials x^p, y^p, x^u y^(p-u) in two variables.

The Euclidean quotients of (p, u) drive a decomposition of the sifted
degrees into arithmetic progressions; the last element of each progression
follows the continued-fraction recurrence delta_{i+1} = q_i delta_i + delta_{i-1}.
Also builds the named ideal families used across the test corpus.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import ConstraintError
from .groebner import Ideal
from .parse import parse_polynomial
from .polyring import VariableContext
from .rees import InvariantReport


@dataclass(frozen=True)
class EuclidTrace:
    p: int
    u: int
    quotients: tuple
    remainders: tuple
    progressions: tuple
    delta: tuple
    mu: tuple

    @property
    def n(self) -> int:
        """Index of the zero remainder (number of divisions plus one)."""
        return len(self.remainders) - 1

    def sd(self) -> tuple:
        return tuple(d for prog in self.progressions for d in prog)


def check_pu(p: int, u: int) -> None:
    if p < 3:
        raise ConstraintError(f"p must be at least 3, got {p}")
    if not 1 <= u:
        raise ConstraintError(f"u must be at least 1, got {u}")
    if 2 * u >= p:
        raise ConstraintError(f"u must be less than p/2 (got u={u}, p={p}); "
                              f"the same ideal up to swapping variables has u={p - u}")
    if gcd(u, p) != 1:
        raise ConstraintError(f"gcd({u},{p}) = {gcd(u, p)} != 1")


def euclid_trace(p: int, u: int) -> EuclidTrace:
    check_pu(p, u)
    rem = [p, u]
    quo = []
    while rem[-1]:
        q, r = divmod(rem[-2], rem[-1])
        quo.append(q)
        rem.append(r)

    # progressions: the first is 1..q_1; later ones step by the previous
    # progression's last element and start at the sum of the two previous
    # last elements (with an implicit 0-th progression ending at 1)
    last = [1, None]  # last[i] = last element of progression i, last[0] = d_{0,0}
    progs = []
    for i, q in enumerate(quo, start=1):
        if i == 1:
            start, step = 1, 1
        elif i == 2:
            start, step = last[1] + 1, last[1]
        else:
            start, step = last[i - 1] + last[i - 2], last[i - 1]
        prog = tuple(start + j * step for j in range(q))
        progs.append(prog)
        if i == 1:
            last[1] = prog[-1]
        else:
            last.append(prog[-1])

    delta = [0, 1]
    mu = [1, 0]
    for q in quo:
        delta.append(q * delta[-1] + delta[-2])
        mu.append(q * mu[-1] + mu[-2])
    return EuclidTrace(p, u, tuple(quo), tuple(rem), tuple(progs), tuple(delta), tuple(mu))


def sifted_closed_form(p: int, u: int) -> InvariantReport:
    tr = euclid_trace(p, u)
    sd = tr.sd()
    return InvariantReport(sd, sum(tr.quotients), sd[-1], True)


def fibonacci(k: int) -> int:
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def fibonacci_report(ell: int) -> InvariantReport:
    if ell < 4:
        raise ConstraintError(f"the Fibonacci family needs ell >= 4, got {ell}")
    sd = tuple(fibonacci(k) for k in range(2, ell + 3))
    return InvariantReport(sd, ell + 1, fibonacci(ell + 2), True)


# -- named families ---------------------------------------------------------

FAMILY_KINDS = ("general", "classical", "variant", "wang", "wang_variant",
                "transversal", "transversal_variant", "fibonacci")


@dataclass(frozen=True)
class FamilySpec:
    kind: str
    p: int | None = None
    u: int | None = None
    ell: int | None = None

    def __post_init__(self):
        k, p = self.kind, self.p
        if k not in FAMILY_KINDS:
            raise ConstraintError(f"unknown family {k!r}; choose from {', '.join(FAMILY_KINDS)}")
        if k == "fibonacci":
            if self.ell is None or self.ell < 4:
                raise ConstraintError("fibonacci needs ell >= 4")
            return
        if p is None:
            raise ConstraintError(f"{k} needs p")
        if k == "general":
            if self.u is None:
                raise ConstraintError("general needs u")
            check_pu(p, self.u)
        elif k in ("classical", "wang", "transversal"):
            if p < 2:
                raise ConstraintError(f"{k} needs p >= 2")
        elif p < 5 or p % 2 == 0:
            raise ConstraintError(f"{k} needs an odd p >= 5")

    @property
    def label(self) -> str:
        if self.kind == "fibonacci":
            return f"fibonacci(ell={self.ell})"
        if self.kind == "general":
            return f"general(p={self.p},u={self.u})"
        return f"{self.kind}(p={self.p})"

    def exponents(self) -> tuple:
        """(p, u) of the mixed monomial a1^u a2^(p-u)."""
        k = self.kind
        if k == "fibonacci":
            return fibonacci(self.ell + 2), fibonacci(self.ell)
        if k == "general":
            return self.p, self.u
        if k in ("classical", "wang", "transversal"):
            return self.p, 1
        return self.p, 2

    @property
    def has_quotient(self) -> bool:
        return self.kind in ("wang", "wang_variant", "transversal", "transversal_variant")


def family_texts(spec: FamilySpec) -> tuple:
    """Variable names and generator texts (I, J or None)."""
    p, u = spec.exponents()
    y = f"a1^{u}*a2^{p - u}" if u > 1 else f"a1*a2^{p - 1}"
    if not spec.has_quotient:
        return ("a1", "a2"), [f"a1^{p}", f"a2^{p}", y], None
    if spec.kind in ("wang", "wang_variant"):
        y = f"{y} + a3^{p}"
    return ("a1", "a2", "a3"), [f"a1^{p}", f"a2^{p}", y], ["a3"]


def family_ideal(spec: FamilySpec) -> tuple:
    names, I_txt, J_txt = family_texts(spec)
    ctx = VariableContext(names)
    I = Ideal(ctx, [parse_polynomial(t, ctx) for t in I_txt])
    J = Ideal(ctx, [parse_polynomial(t, ctx) for t in J_txt]) if J_txt else None
    return I, J


def valid_pairs(max_p: int, min_p: int = 3):
    """All (p, u) with min_p <= p <= max_p, 1 <= u < p/2, gcd(u, p) = 1."""
    return [(p, u) for p in range(max(3, min_p), max_p + 1) for u in range(1, (p + 1) // 2)
            if 2 * u < p and gcd(u, p) == 1]
