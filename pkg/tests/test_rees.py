import pytest

from reestype import DegenerateIdealError, FamilySpec, Ideal, ReesPresentation, VariableContext
from reestype import effective_profile, family_ideal, invariant_report, parse_polynomial, rees_kernel
from reestype import sifted_invariants
from reestype.corpus import HARTSHORNE_I, HARTSHORNE_P, SUV_P, SUV_QUADRATIC, SUV_VARS
from reestype.groebner import ideal_equal, ideal_member
from reestype.polyring import x_degree
from reestype.rees import DegreeProfile, check_kernel_element, effective_generator_count

from conftest import ideal


def kernel_of(I, J=None):
    return rees_kernel(ReesPresentation(I, J))


def test_regular_sequence_is_linear_type(R2):
    H = kernel_of(ideal(R2, "a1", "a2"))
    assert H.max_degree == 1
    (g,) = H.generators()
    K = H.ctx
    koszul = parse_polynomial("a2*X1 - a1*X2", K)
    assert g == koszul or g == -koszul
    prof = effective_profile(H)
    assert prof.flags == {} and invariant_report(prof).sd == (1,)


def test_classical_p2_kernel():
    I, _ = family_ideal(FamilySpec("classical", 2))
    pres = ReesPresentation(I, x_names=("X1", "X2", "Y"))
    H = rees_kernel(pres)
    K = pres.kernel_ctx
    expected = [parse_polynomial(t, K) for t in ("a1*Y - a2*X1", "a2*Y - a1*X2", "Y^2 - X1*X2")]
    assert ideal_equal(Ideal(K, list(H.generators())), Ideal(K, expected))
    assert sorted(x_degree(g) for g in expected) == [1, 1, 2]
    assert all(check_kernel_element(g, pres) for g in H.generators())


def test_kernel_with_quotient_has_degree_zero_part():
    I, _ = family_ideal(FamilySpec("transversal", 3))
    J = ideal(I.ctx, "a3")
    pres = ReesPresentation(I, J)
    H = rees_kernel(pres)
    deg0 = H.gens_by_degree[0]
    assert ideal_equal(Ideal(H.ctx, list(deg0)), J.embed(H.ctx, [0, 1, 2]))
    assert all(check_kernel_element(g, pres) for g in H.generators())


def test_non_kernel_element_detected(R2):
    pres = ReesPresentation(ideal(R2, "a1", "a2"))
    assert not check_kernel_element(parse_polynomial("X1 - X2", pres.kernel_ctx), pres)


@pytest.mark.parametrize("kind,p,sd", [
    ("classical", 3, (1, 2, 3)),
    ("classical", 4, (1, 2, 3, 4)),
    ("variant", 5, (1, 2, 3, 5)),
    ("variant", 7, (1, 2, 3, 4, 7)),
])
def test_families(kind, p, sd):
    I, _ = family_ideal(FamilySpec(kind, p))
    prof = effective_profile(kernel_of(I))
    assert prof.exact
    assert tuple(n for n, v in prof.flags.items() if v) == sd[1:]
    rep = invariant_report(prof)
    assert (rep.sd, rep.st, rep.rt) == (sd, len(sd), max(sd))


def test_empty_profile():
    rep = invariant_report(DegreeProfile({}, 1))
    assert (rep.sd, rep.st, rep.rt) == ((1,), 1, 1)


def test_hartshorne():
    ctx = VariableContext(("x1", "x2", "x3", "x4"))
    assert sifted_invariants(ideal(ctx, *HARTSHORNE_I)).sd == (1,)
    rep = sifted_invariants(ideal(ctx, *HARTSHORNE_P))
    assert (rep.st, rep.rt) == (2, 2)


def test_wang_quotient():
    I, J = family_ideal(FamilySpec("wang", 2))
    rep = sifted_invariants(I, J)
    assert (rep.st, rep.rt) == (2, 2)
    # over A itself the same ideal is of linear type
    assert sifted_invariants(I).sd == (1,)


@pytest.mark.parametrize("order", ["degrevlex", "lex"])
def test_order_does_not_change_result(order):
    I, J = family_ideal(FamilySpec("wang", 3))
    assert sifted_invariants(I, J, order).sd == (1, 2, 3)
    I, _ = family_ideal(FamilySpec("variant", 5))
    assert sifted_invariants(I, order=order).sd == (1, 2, 3, 5)


def test_presentation_independence(R2):
    # a redundant generator changes the presentation, not the invariants
    I, _ = family_ideal(FamilySpec("classical", 3))
    extra = Ideal(I.ctx, list(I.gens) + [I.gens[0] + I.gens[2]])
    assert sifted_invariants(extra).sd == sifted_invariants(I).sd


def test_degenerate_inputs(R2):
    with pytest.raises(DegenerateIdealError):
        sifted_invariants(Ideal(R2, []))
    with pytest.raises(DegenerateIdealError):
        sifted_invariants(ideal(R2, "a1", "1 - a1*a2"))
    with pytest.raises(DegenerateIdealError):
        sifted_invariants(ideal(R2, "a1"), ideal(R2, "3"))
    assert sifted_invariants(ideal(R2, "a1"), Ideal(R2, [])).sd == (1,)


def test_suv_prime():
    ctx = VariableContext(SUV_VARS)
    I = ideal(ctx, *SUV_P)
    pres = ReesPresentation(I)
    H = rees_kernel(pres)
    rep = invariant_report(effective_profile(H))
    assert (rep.st, rep.rt) == (2, 2)
    assert effective_generator_count(H, 2) == 1
    F = parse_polynomial(SUV_QUADRATIC, pres.kernel_ctx)
    assert check_kernel_element(F, pres)
    assert ideal_member(F, Ideal(H.ctx, list(H.generators())))
    assert not ideal_member(F, Ideal(H.ctx, H.below(2)))
