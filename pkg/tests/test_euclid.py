import pytest

from reestype import ConstraintError, FamilySpec, euclid_trace, family_ideal, fibonacci_report
from reestype import sifted_closed_form, sifted_invariants
from reestype.euclid import fibonacci, valid_pairs
from reestype.polyring import format_polynomial


def test_trace_5_2():
    tr = euclid_trace(5, 2)
    assert tr.quotients == (2, 2)
    assert tr.remainders == (5, 2, 1, 0)
    assert tr.delta == (0, 1, 2, 5)
    assert tr.mu == (1, 0, 1, 2)
    assert tr.delta[2] * 2 - tr.mu[2] * 5 == -1


@pytest.mark.parametrize("p", [3, 4, 7, 10])
def test_u_equal_one_has_one_division(p):
    tr = euclid_trace(p, 1)
    assert tr.quotients == (p,) and tr.n == 2
    assert sifted_closed_form(p, 1).sd == tuple(range(1, p + 1))


@pytest.mark.parametrize("p", [5, 7, 9, 11, 13])
def test_u_equal_two(p):
    rep = sifted_closed_form(p, 2)
    assert rep.st == (p + 3) // 2
    assert rep.sd == tuple(range(1, (p + 1) // 2 + 1)) + (p,)


def test_trace_21_8():
    assert euclid_trace(21, 8).quotients == (2, 1, 1, 1, 2)


@pytest.mark.parametrize("p,u,sd", [
    (5, 2, (1, 2, 3, 5)),
    (8, 3, (1, 2, 3, 5, 8)),
    (21, 8, (1, 2, 3, 5, 8, 13, 21)),
    (24, 5, (1, 2, 3, 4, 5, 9, 14, 19, 24)),
])
def test_closed_form_examples(p, u, sd):
    rep = sifted_closed_form(p, u)
    assert (rep.sd, rep.st, rep.rt) == (sd, len(sd), p)


@pytest.mark.parametrize("p", [8, 12, 16, 20, 40])
def test_u_half_p_minus_two(p):
    rep = sifted_closed_form(p, (p - 2) // 2)
    assert rep.sd == (1, 2) + tuple(2 * i + 1 for i in range(1, p // 4 + 1)) + (p,)
    assert rep.rt == 4 * (rep.st - 3)


@pytest.mark.parametrize("ell", [1, 2, 3, 5])
def test_u_quarter_p_minus_four(ell):
    p = 8 * (2 * ell + 1)
    rep = sifted_closed_form(p, (p - 4) // 4)
    tail = (4 * ell + 5, 8 * ell + 6, 12 * ell + 7, 16 * ell + 8)
    assert rep.sd == (1, 2, 3, 4) + tuple(4 * i + 1 for i in range(1, ell + 1)) + tail
    assert (rep.st, rep.rt) == (ell + 8, p)


@pytest.mark.parametrize("p,u", valid_pairs(40))
def test_identities(p, u):
    tr = euclid_trace(p, u)
    r = tr.remainders
    for i in range(len(r)):
        sign = -1 if i % 2 == 0 else 1
        assert tr.delta[i] * u - tr.mu[i] * p == sign * r[i]
    assert tr.delta[tr.n] == p and tr.mu[tr.n] == u
    assert sum(tr.quotients) == len(tr.sd())
    for i, q in enumerate(tr.quotients):
        assert tr.delta[i + 2] == q * tr.delta[i + 1] + tr.delta[i]


@pytest.mark.parametrize("p,u", [(6, 2), (5, 3), (2, 1), (7, 0)])
def test_constraints(p, u):
    with pytest.raises(ConstraintError):
        euclid_trace(p, u)


def test_swap_hint():
    with pytest.raises(ConstraintError, match="u=2"):
        euclid_trace(5, 3)


def test_fibonacci_reports():
    assert fibonacci_report(6).sd == (1, 2, 3, 5, 8, 13, 21)
    assert fibonacci_report(7).sd == (1, 2, 3, 5, 8, 13, 21, 34)
    for ell in range(4, 12):
        rep = fibonacci_report(ell)
        assert rep == sifted_closed_form(fibonacci(ell + 2), fibonacci(ell))
        assert (rep.st, rep.rt) == (ell + 1, fibonacci(ell + 2))


def test_family_ideals():
    I, J = family_ideal(FamilySpec("classical", 2))
    assert J is None and [format_polynomial(g) for g in I.gens] == ["a1^2", "a2^2", "a1*a2"]
    I, J = family_ideal(FamilySpec("wang", 3))
    assert [format_polynomial(g) for g in I.gens] == ["a1^3", "a2^3", "a1*a2^2 + a3^3"]
    assert [format_polynomial(g) for g in J.gens] == ["a3"]
    I, _ = family_ideal(FamilySpec("fibonacci", ell=4))
    assert [format_polynomial(g) for g in I.gens] == ["a1^8", "a2^8", "a1^3*a2^5"]


@pytest.mark.parametrize("kind,p", [("variant", 4), ("variant", 3), ("wang_variant", 6), ("classical", 1)])
def test_family_constraints(kind, p):
    with pytest.raises(ConstraintError):
        FamilySpec(kind, p)


@pytest.mark.parametrize("p,u", valid_pairs(9))
def test_closed_form_agrees_with_groebner(p, u):
    I, _ = family_ideal(FamilySpec("general", p, u))
    rep = sifted_invariants(I)
    closed = sifted_closed_form(p, u)
    assert (rep.sd, rep.st, rep.rt) == (closed.sd, closed.st, closed.rt)
