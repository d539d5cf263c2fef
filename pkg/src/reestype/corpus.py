"""Worked examples with known invariants, used by ``reestype corpus``."""

from __future__ import annotations

from dataclasses import dataclass, field

from .euclid import FamilySpec, family_texts, fibonacci_report, sifted_closed_form

HARTSHORNE_VARS = ("x1", "x2", "x3", "x4")
HARTSHORNE_I = ["x1*x4 - x2*x3", "x1^2*x3 + x1*x2 - x2^2", "x3^3 + x3*x4 - x4^2"]
HARTSHORNE_P = HARTSHORNE_I + ["x1*x3^2 + x1*x4 - x2*x4"]

SUV_VARS = tuple(f"a{i}" for i in range(1, 10))
SUV_P = [
    "a5*a7 + a6*a9",
    "a3*a6*a8 + a1*a4*a9",
    "a1*a4*a5 - a3*a5*a8 + a2*a6*a8 - a1*a8*a9",
    "a3*a5*a6 + a2*a5*a7 + a3*a5*a9 + a1*a9^2",
    "a3*a6^2 + a2*a6*a7 + a3*a6*a9 - a1*a7*a9",
    "a3*a4*a6 + a2*a4*a7 + a3*a7*a8 + a3*a4*a9",
]
# the one quadratic equation beyond the linear ones, in X1..X6
SUV_QUADRATIC = "a1*a3*X1*X2 + a3*X2*X4 - a2*X2*X5 + a3*X3*X5 + a1*a2*X1*X6 - a1*X4*X6"


@dataclass(frozen=True)
class CorpusEntry:
    """One example: what to compute and the values it must produce.

    ``mode`` is ``sifted`` (SD/st/rt of I over A, or over A/J when
    ``quotient`` is set), ``artin_rees`` (w, m, s, st_mod, rt_mod) or
    ``closed_form`` (Euclid formula only).
    """

    name: str
    mode: str
    variables: tuple
    ideal: tuple
    quotient: tuple | None
    expected: dict
    citation: str
    stretch: bool = False
    family: FamilySpec | None = field(default=None, compare=False)

    def document(self) -> dict:
        doc = {"ring": {"variables": list(self.variables)}, "ideals": {"I": list(self.ideal)}}
        if self.quotient:
            doc["ideals"]["J"] = list(self.quotient)
        return doc


def _from_family(name, spec, mode, expected, citation):
    names, I, J = family_texts(spec)
    return CorpusEntry(name, mode, names, tuple(I), tuple(J) if J else None, expected, citation, family=spec)


def _sifted(sd):
    sd = list(sd)
    return {"sd": sd, "st": len(sd), "rt": max(sd)}


def build_corpus() -> list:
    out = []
    for p in (2, 3, 4):
        out.append(_from_family(f"classical-p{p}", FamilySpec("classical", p), "sifted",
                                _sifted(range(1, p + 1)), "classical"))
    out.append(_from_family("variant-p5", FamilySpec("variant", 5), "sifted", _sifted([1, 2, 3, 5]),
                            "classical-variant"))
    out.append(_from_family("variant-p7", FamilySpec("variant", 7), "sifted", _sifted([1, 2, 3, 4, 7]),
                            "classical-variant"))
    for p, w in ((2, 2), (3, 2)):
        out.append(_from_family(f"wang-p{p}", FamilySpec("wang", p), "artin_rees",
                                {"w": w, "m": p, "s": p, "st_mod": p, "rt_mod": p}, "wang"))
    out.append(_from_family("wang-variant-p5", FamilySpec("wang_variant", 5), "artin_rees",
                            {"w": 2, "m": 4, "s": 5, "st_mod": 4, "rt_mod": 5}, "wang-variant"))
    for p in (2, 3):
        out.append(_from_family(f"transversal-p{p}", FamilySpec("transversal", p), "artin_rees",
                                {"w": 1, "m": 1, "s": 1, "st_mod": p, "rt_mod": p}, "normally-transversal"))
    out.append(_from_family("transversal-variant-p5", FamilySpec("transversal_variant", 5), "artin_rees",
                            {"w": 1, "m": 1, "s": 1, "st_mod": 4, "rt_mod": 5}, "normally-transversal-variant"))
    for ell in (4, 5, 6):
        spec = FamilySpec("fibonacci", ell=ell)
        rep = fibonacci_report(ell)
        out.append(_from_family(f"fibonacci-l{ell}", spec, "sifted", _sifted(rep.sd), "fibonacci"))
    for p, u, sd in ((7, 3, [1, 2, 3, 5, 7]), (9, 4, [1, 2, 3, 5, 7, 9]), (8, 3, [1, 2, 3, 5, 8]),
                     (12, 5, [1, 2, 3, 5, 7, 12]), (21, 8, [1, 2, 3, 5, 8, 13, 21]),
                     (24, 5, [1, 2, 3, 4, 5, 9, 14, 19, 24])):
        out.append(_from_family(f"euclid-p{p}-u{u}", FamilySpec("general", p, u), "sifted", _sifted(sd),
                                "three-monomial-euclid"))
    out.append(CorpusEntry("hartshorne-I", "sifted", HARTSHORNE_VARS, tuple(HARTSHORNE_I), None,
                           _sifted([1]), "hartshorne-surface"))
    out.append(CorpusEntry("hartshorne-prime", "sifted", HARTSHORNE_VARS, tuple(HARTSHORNE_P), None,
                           _sifted([1, 2]), "hartshorne-surface"))
    out.append(CorpusEntry("suv-prime", "sifted", SUV_VARS, tuple(SUV_P), None,
                           dict(_sifted([1, 2]), effective_in_degree_2=1), "suv-prime", stretch=True))
    return out


def closed_form_expectation(entry: CorpusEntry):
    """Closed-form (sd, st, rt) for a two-variable three-monomial entry, else None."""
    spec = entry.family
    if spec is None or spec.has_quotient:
        return None
    p, u = spec.exponents()
    if p < 3:
        return None
    return sifted_closed_form(p, u)
