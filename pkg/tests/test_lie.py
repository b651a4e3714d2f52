import random

import pytest
from hypothesis import given, settings, strategies as st

from pradical.fields import PrimeField, base_change_map, ExtensionField
from pradical.gallery import paper_g, sl2_kernel_char2
from pradical.lie import NotPIdealError, RLieAlgebra, direct_sum
from pradical.survey import enumerate_algebras


def _instances():
    F = PrimeField(2)
    out = list(enumerate_algebras(F, 2))
    out += list(enumerate_algebras(F, 3, cap=120))
    return out

INSTANCES = _instances()


def _random_vec(g, rng):
    return tuple(g.field.random_element(rng) for _ in range(g.dim))


def test_validate_rejects_jacobi_violation():
    F = PrimeField(2)
    one, zero = F.one, F.zero
    # [e1,e2]=e2, [e2,e3]=e1: the Jacobi sum is [e3,[e1,e2]] = -e1 != 0
    g = RLieAlgebra.from_upper(
        F, 3, {(0, 1): (zero, one, zero), (1, 2): (one, zero, zero)},
        [(zero,) * 3] * 3)
    report = g.validate()
    assert not report
    assert any(name == "jacobi" for name, *_ in report.failures)
    with pytest.raises(ValueError):
        g.require_valid()


def test_validate_rejects_non_restricted_p_power():
    F = PrimeField(2)
    one, zero = F.one, F.zero
    # [e1,e2] = e2 but e1^[2] = 0: ad(e1)^2 = ad(e1) != 0 = ad(e1^[2])
    g = RLieAlgebra.from_upper(F, 2, {(0, 1): (zero, one)},
                               [(zero, zero), (zero, zero)])
    report = g.validate()
    assert not report
    assert any(name == "restricted" for name, *_ in report.failures)


@given(st.sampled_from(INSTANCES), st.integers(0, 2 ** 32))
@settings(max_examples=120, deadline=None)
def test_p_power_is_restricted_semilinear(g, seed):
    """ad(x^[p]) = ad(x)^p and (cx)^[p] = c^p x^[p] for arbitrary x."""
    from pradical.linalg import mat_pow

    F = g.field
    rng = random.Random(seed)
    x = _random_vec(g, rng)
    c = F.random_element(rng)
    px = g.p_power(x)
    assert g.ad_matrix(px) == mat_pow(F, g.ad_matrix(x), F.p)
    cx = tuple(F.mul(c, xi) for xi in x)
    expect = tuple(F.mul(F.pow_int(c, F.p), v) for v in px)
    assert g.p_power(cx) == expect


@given(st.sampled_from(INSTANCES), st.integers(0, 2 ** 32))
@settings(max_examples=100, deadline=None)
def test_jacobson_additivity_against_generic_polynomial(g, seed):
    """p_power agrees with the symbolic generic p-power at random points."""
    rng = random.Random(seed)
    x = _random_vec(g, rng)
    generic, R = g.generic_p_power()
    evaluated = tuple(R.evaluate(component, x) for component in generic)
    assert evaluated == g.p_power(x)


@given(st.sampled_from(INSTANCES))
@settings(max_examples=100, deadline=None)
def test_center_and_derived_are_p_ideals(g):
    for S in (g.center(), g.spin_p_ideal(g.derived_subalgebra())):
        assert g.is_p_ideal(S)


@given(st.sampled_from(INSTANCES), st.integers(0, 2 ** 32))
@settings(max_examples=80, deadline=None)
def test_spin_p_ideal_is_smallest_containing(g, seed):
    rng = random.Random(seed)
    v = _random_vec(g, rng)
    S = g.subspace([v])
    I = g.spin_p_ideal(S)
    assert g.is_p_ideal(I)
    assert I.contains(S)


def test_quotient_rejects_non_ideal():
    g = sl2_kernel_char2()
    e_line = g.subspace([g.basis_vector(0)])
    with pytest.raises(NotPIdealError):
        g.quotient(e_line)


@given(st.sampled_from(INSTANCES))
@settings(max_examples=80, deadline=None)
def test_quotient_bracket_compatibility(g):
    I = g.center()
    if I.dim in (0, g.dim):
        return
    q, project, section = g.quotient(I)
    assert q.validate()
    F = g.field
    for i in range(g.dim):
        for j in range(g.dim):
            lhs = project(g.brackets[i][j])
            rhs = q.bracket(project(g.basis_vector(i)),
                            project(g.basis_vector(j)))
            assert lhs == rhs
        assert project(g.ppowers[i]) == q.p_power(project(g.basis_vector(i)))


def test_unipotence_is_base_change_invariant():
    F = PrimeField(2)
    K = ExtensionField(2, 2)
    hom = base_change_map(F, K)
    for g in INSTANCES[:60]:
        gK = g.base_change(hom)
        assert g.is_unipotent() == gK.is_unipotent()


def test_direct_sum_structure():
    a = sl2_kernel_char2()
    b = sl2_kernel_char2()
    s = direct_sum(a, b)
    assert s.validate()
    assert s.dim == 6
    assert s.center().dim == 2


def test_series_classification_on_solvable_family():
    g, _ = paper_g(2)
    X = g.basis_vector(0)
    Y = g.basis_vector(1)
    chain = [g.zero_subspace(), g.subspace([X]), g.subspace([X, Y]),
             g.full_subspace()]
    kinds = [s["kind"] for s in g.verify_subnormal_series(chain)]
    assert kinds == ["mu-form", "alpha-type", "mu-form"]


def test_characteristic_series_shapes():
    g = sl2_kernel_char2()
    series = g.characteristic_series()
    assert series["nilpotent"] and series["solvable"]
    assert [S.dim for S in series["lower_central_series"]] == [3, 1, 0]
    assert series["center"] == g.subspace([g.basis_vector(1)])
