"""Acceptance checks, one per criterion, each printing a PASS/FAIL line.

The lines are collected into a summary section at the end of every pytest
run; ``-s`` also shows them inline.  The stretch check
(nine-variable prime) runs only when ``REESTYPE_STRETCH=1``.
"""

import os
import random
import time

import pytest

from reestype import FamilySpec, Ideal, VariableContext, artin_rees_numbers, euclid_trace, family_ideal
from reestype import fibonacci_report, limits, parse_polynomial, sifted_closed_form, sifted_invariants
from reestype import ResourceLimitExceeded
from reestype.artin_rees import ArtinReesComputation, _GroebnerOps, _MonomialOps, check_v_in_u
from reestype.corpus import HARTSHORNE_I, HARTSHORNE_P, HARTSHORNE_VARS, SUV_P, SUV_VARS, build_corpus
from reestype.euclid import fibonacci, valid_pairs
from reestype.groebner import ideal_equal
from reestype.monomial import min_gens
from reestype.rees import ReesPresentation, effective_generator_count, effective_profile, invariant_report
from reestype.rees import rees_kernel

RESULTS = {}


def record(num, title, ok, detail=""):
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {title}" + (f" ({detail})" if detail else "")
    RESULTS[num] = line
    print(line)
    assert ok, line


def triple(rep):
    return rep.sd, rep.st, rep.rt


def test_c01_euclid_cross_validation():
    start = time.perf_counter()
    bad = []
    pairs = valid_pairs(13)
    with limits(300):
        for p, u in pairs:
            I, _ = family_ideal(FamilySpec("general", p, u))
            if triple(sifted_invariants(I)) != triple(sifted_closed_form(p, u)):
                bad.append((p, u))
    elapsed = time.perf_counter() - start
    record(1, "closed form = Groebner for all valid (p,u), p <= 13", not bad and elapsed < 300,
           f"{len(pairs)} pairs, {len(bad)} mismatches, {elapsed:.1f}s")


def test_c02_classical():
    got = {p: triple(sifted_invariants(family_ideal(FamilySpec("classical", p))[0])) for p in (2, 3, 4)}
    ok = all(got[p] == (tuple(range(1, p + 1)), p, p) for p in got)
    record(2, "classical p in {2,3,4}: sd = {1..p}, st = rt = p", ok, str(got))


def test_c03_variant():
    got = {p: triple(sifted_invariants(family_ideal(FamilySpec("variant", p))[0])) for p in (5, 7)}
    ok = got[5] == ((1, 2, 3, 5), 4, 5) and got[7] == ((1, 2, 3, 4, 7), 5, 7)
    record(3, "variant p = 5, 7", ok, str(got))


def test_c04_wang():
    got, slowest = {}, 0.0
    for p in (2, 3):
        start = time.perf_counter()
        with limits(120):
            got[p] = artin_rees_numbers(*family_ideal(FamilySpec("wang", p))).five()
        slowest = max(slowest, time.perf_counter() - start)
    ok = got == {2: (2, 2, 2, 2, 2), 3: (2, 3, 3, 3, 3)} and slowest < 120
    record(4, "Wang p = 2, 3: (w,m,s,st,rt)", ok, f"{got}, slowest {slowest:.2f}s")


def test_c05_transversal():
    got = {f"transversal({p})": artin_rees_numbers(*family_ideal(FamilySpec("transversal", p))).five()
           for p in (2, 3)}
    got["transversal_variant(5)"] = artin_rees_numbers(*family_ideal(FamilySpec("transversal_variant", 5))).five()
    ok = got == {"transversal(2)": (1, 1, 1, 2, 2), "transversal(3)": (1, 1, 1, 3, 3),
                 "transversal_variant(5)": (1, 1, 1, 4, 5)}
    record(5, "normally transversal families", ok, str(got))


def test_c06_five_values():
    start = time.perf_counter()
    # exceeding the budget raises and fails this test; no partial values
    with limits(15 * 60):
        five = artin_rees_numbers(*family_ideal(FamilySpec("wang_variant", 5))).five()
    elapsed = time.perf_counter() - start
    w, m, s, st, rt = five
    ok = five == (2, 4, 5, 4, 5) and w < m == st < s == rt and elapsed < 900
    record(6, "wang_variant p = 5: w < m = st < s = rt", ok, f"{five}, {elapsed:.2f}s")


def test_c07_fibonacci():
    bad = []
    for ell in (4, 5, 6, 7):
        rep = fibonacci_report(ell)
        sd = tuple(fibonacci(k) for k in range(2, ell + 3))
        closed = sifted_closed_form(fibonacci(ell + 2), fibonacci(ell))
        if triple(rep) != (sd, ell + 1, fibonacci(ell + 2)) or triple(closed) != triple(rep):
            bad.append(ell)
    gb = triple(sifted_invariants(family_ideal(FamilySpec("fibonacci", ell=4))[0]))
    ok = not bad and gb == ((1, 2, 3, 5, 8), 5, 8)
    record(7, "Fibonacci ell in 4..7 closed form, ell = 4 via Groebner", ok, f"bad={bad}, groebner(4)={gb}")


def test_c08_hartshorne():
    ctx = VariableContext(HARTSHORNE_VARS)
    start = time.perf_counter()
    with limits(300):
        a = sifted_invariants(Ideal(ctx, [parse_polynomial(t, ctx) for t in HARTSHORNE_I]))
        b = sifted_invariants(Ideal(ctx, [parse_polynomial(t, ctx) for t in HARTSHORNE_P]))
    elapsed = time.perf_counter() - start
    ok = (a.st, a.rt) == (1, 1) and (b.st, b.rt) == (2, 2) and elapsed < 300
    record(8, "Hartshorne: rt(I) = 1, st(p) = rt(p) = 2", ok, f"I {a.sd}, p {b.sd}, {elapsed:.2f}s")


# -- criterion 9 ----------------------------------------------------------------

R3 = VariableContext(("a1", "a2", "a3"))


def random_monomial_ideal(rng, k, deg, nvars=3):
    ms = set()
    while len(ms) < k:
        e = tuple(rng.randint(0, deg) for _ in range(nvars)) + (0,) * (3 - nvars)
        if any(e):
            ms.add(e)
    return min_gens(ms, R3).to_ideal()


def random_staircase(rng, k, deg):
    """k minimal generators a1^x a2^y with x falling and y rising."""
    xs = sorted(rng.sample(range(deg + 1), k), reverse=True)
    ys = sorted(rng.sample(range(deg + 1), k))
    return min_gens({(x, y, 0) for x, y in zip(xs, ys)}, R3).to_ideal()


def property_violations(I, J, engines=False):
    """Every violated property for the pair (I, J), as short strings."""
    out = []
    comp = ArtinReesComputation(I, J)
    prof = comp.profile()
    rep = artin_rees_numbers(I, J)
    w, m, s, st, rt = rep.five()
    q = rep.quotient_report
    over_A = sifted_invariants(I)
    checks = {
        "w<=m<=s": w <= m <= s,
        "m<=st<=rt": m <= st <= rt,
        "s<=rt": s <= rt,
        "st<=rt over A": over_A.st <= over_A.rt,
    }
    for n in range(2, comp.horizon + 1):
        checks[f"V_{n} in U_{n}"] = check_v_in_u(comp, n)
        if prof.flags[n]:
            checks[f"AR flag {n} implies E flag {n}"] = bool(q.profile.flags.get(n))
    if over_A.rt == 1:
        checks["linear type: m = st, s = rt"] = (m, s) == (st, rt)
    if engines and I.is_monomial() and J.is_monomial():
        mo, go = _MonomialOps(I, J), _GroebnerOps(I, J)
        for n in range(1, comp.horizon + 1):
            Um = mo.intersect(mo.power(n), mo.J)
            Ug = go.intersect(go.power(n), J)
            checks[f"engines agree on U_{n}"] = ideal_equal(Um.to_ideal(), Ug)
            checks[f"engines agree on V_{n+1}"] = ideal_equal(mo.product(mo.I, Um).to_ideal(), go.product(I, Ug))
            checks[f"engines agree on containment {n}"] = (
                mo.contains(mo.product(mo.I, Um), Um) == go.contains(go.product(I, Ug), Ug))
    out.extend(k for k, v in checks.items() if not v)
    return out


def test_c09_properties():
    failures = []
    cases = 0
    for e in build_corpus():
        if e.stretch or e.quotient is None:
            continue
        ctx = VariableContext(e.variables)
        I = Ideal(ctx, [parse_polynomial(t, ctx) for t in e.ideal])
        J = Ideal(ctx, [parse_polynomial(t, ctx) for t in e.quotient])
        failures += [f"{e.name}: {v}" for v in property_violations(I, J, engines=True)]
        cases += 1
    rng = random.Random(20240601)
    for i in range(200):
        # odd cases use a two-variable staircase, rarely of linear type
        I = random_staircase(rng, rng.randint(3, 4), 5) if i % 2 else random_monomial_ideal(rng, rng.randint(2, 4), 3)
        J = random_monomial_ideal(rng, rng.randint(1, 2), 3)
        failures += property_violations(I, J, engines=True)
        cases += 1
    record(9, "inequality chain, V in U, flag implication, linear type, engine agreement",
           not failures, f"{cases} pairs, {len(failures)} violations" + (f": {failures[:3]}" if failures else ""))


def test_c10_delta_mu_identities():
    bad = []
    for p, u in valid_pairs(13):
        tr = euclid_trace(p, u)
        for i, r in enumerate(tr.remainders):
            if tr.delta[i] * u - tr.mu[i] * p != (-1) ** ((i - 1) % 2) * r:
                bad.append((p, u, i))
        if (tr.delta[tr.n], tr.mu[tr.n]) != (p, u):
            bad.append((p, u, "end"))
    record(10, "delta_i u - mu_i p = (-1)^(i-1) r_i, delta_n = p, mu_n = u", not bad,
           f"{len(valid_pairs(13))} pairs, {len(bad)} failures")


def test_c11_stretch_suv():
    if os.environ.get("REESTYPE_STRETCH") != "1":
        RESULTS[11] = "SKIPPED criterion 11: nine-variable prime (stretch, off by default; set REESTYPE_STRETCH=1)"
        pytest.skip("stretch check; set REESTYPE_STRETCH=1")
    ctx = VariableContext(SUV_VARS)
    I = Ideal(ctx, [parse_polynomial(t, ctx) for t in SUV_P])
    try:
        with limits(300):
            H = rees_kernel(ReesPresentation(I))
            rep = invariant_report(effective_profile(H))
            count = effective_generator_count(H, 2)
    except ResourceLimitExceeded:
        line = "SKIPPED criterion 11: nine-variable prime (timed out)"
        RESULTS[11] = line
        print(line)
        pytest.skip("timed out")
    record(11, "nine-variable prime: st = rt = 2, one effective quadric", (rep.st, rep.rt, count) == (2, 2, 1),
           f"sd {rep.sd}, degree-2 effective generators {count}")
