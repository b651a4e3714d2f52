import random

from hypothesis import given, settings, strategies as st

from pradical.fields import ExtensionField, PrimeField, RationalFunctionField, \
    base_change_map
from pradical.gallery import alpha_lie, mu_lie, paper_g, sl2_kernel_char2, \
    torus_lie
from pradical.lie import RLieAlgebra, direct_sum
from pradical.radical import (is_mult_type, is_p_reductive, one_dim_p_ideals,
                              rad_p, weight_decomposition)
from pradical.survey import (brute_force_radical, enumerate_algebras,
                             has_nonzero_p_nilpotent,
                             unipotent_restricted_subalgebras)

INSTANCES = (list(enumerate_algebras(PrimeField(2), 2))
             + list(enumerate_algebras(PrimeField(2), 3, cap=200)))


def test_degenerate_zero_dimensional_algebra():
    F = PrimeField(2)
    g = RLieAlgebra(F, 0, (), ())
    assert g.validate()
    assert g.is_unipotent()
    assert is_mult_type(g)
    cert = rad_p(g)
    assert cert.radical.dim == 0 and cert.is_exact
    assert is_p_reductive(g) is True


def test_one_dimensional_types():
    al = alpha_lie(2)
    mu = mu_lie(3)
    assert al.is_unipotent() and not is_mult_type(al)
    assert is_mult_type(mu) and not mu.is_unipotent()
    assert rad_p(al).radical.dim == 1
    assert rad_p(mu).radical.dim == 0


def test_product_radical_is_additive_factor():
    s = direct_sum(alpha_lie(2), mu_lie(2))
    cert = rad_p(s)
    assert cert.is_exact and cert.strategy == "s1"
    assert cert.radical == s.subspace([s.basis_vector(0)])


@given(st.sampled_from(INSTANCES))
@settings(max_examples=150, deadline=None)
def test_rad_matches_brute_force(g):
    cert = rad_p(g)
    assert cert.is_exact
    assert cert.radical == brute_force_radical(g)


@given(st.sampled_from(INSTANCES))
@settings(max_examples=80, deadline=None)
def test_radical_is_unipotent_p_ideal_and_quotient_reduced(g):
    cert = rad_p(g)
    R = cert.radical
    assert g.is_p_ideal(R) and g.is_unipotent(R)
    if R.dim < g.dim:
        q, project, section = g.quotient(R)
        assert rad_p(q).radical.dim == 0


def test_solvable_family_radical_and_reductivity():
    g, _ = paper_g(2)
    cert = rad_p(g)
    assert cert.radical.dim == 0 and cert.is_exact and cert.strategy == "s4"
    assert is_p_reductive(g) is True
    # quotient by the center has radical spanned by the image of Y
    I = g.subspace([g.basis_vector(0)])
    q, project, section = g.quotient(I)
    qcert = rad_p(q)
    assert qcert.is_exact
    assert qcert.radical == q.subspace([project(g.basis_vector(1))])
    assert is_p_reductive(q) is False


def test_inner_abelian_part_not_p_reductive():
    # the abelian p-ideal spanned by X, Y: trivial radical over the base
    # field, but the p-power matrix has stable rank 1 < 2
    K = RationalFunctionField(2)
    t = K.t
    N = RLieAlgebra(K, 2, (((K.zero,) * 2,) * 2,) * 2,
                    ((K.one, K.zero), (t, K.zero)))
    assert rad_p(N).radical.dim == 0
    assert is_p_reductive(N) is False


def test_sl2_kernel_radical():
    g = sl2_kernel_char2()
    cert = rad_p(g)
    assert cert.radical.dim == 0 and cert.is_exact and cert.strategy == "s3"


def test_weight_decomposition_on_solvable_family():
    g, _ = paper_g(2)
    dec = weight_decomposition(g)
    assert dec is not None
    idx, spaces = dec
    assert g.labels[idx] == "Z"
    assert spaces[1] == g.subspace([g.basis_vector(1)])
    assert spaces[0].dim == 2


def test_one_dim_p_ideals_exact_cases():
    g, _ = paper_g(2)
    lines, verdict = one_dim_p_ideals(g)
    assert verdict == "exact"
    assert lines == [g.subspace([g.basis_vector(0)])]
    torus = torus_lie(2, 2)
    lines, verdict = one_dim_p_ideals(torus)
    assert verdict == "exact" and len(lines) == 3


@given(st.sampled_from(INSTANCES))
@settings(max_examples=60, deadline=None)
def test_one_dim_p_ideals_against_scan(g):
    lines, verdict = one_dim_p_ideals(g)
    assert verdict == "exact"
    from pradical.linalg import projective_points
    expected = []
    for v in projective_points(g.field, g.dim):
        L = g.subspace([v])
        if g.is_p_ideal(L):
            expected.append(L)
    assert sorted(lines, key=lambda S: S.basis) == \
        sorted(expected, key=lambda S: S.basis)


def test_base_change_equivariance_sample():
    F = PrimeField(2)
    for m in (2, 3):
        K = ExtensionField(2, m)
        hom = base_change_map(F, K)
        for g in INSTANCES[:40]:
            gK = g.base_change(hom)
            assert rad_p(gK).radical == g.base_change_subspace(
                hom, rad_p(g).radical)


def test_undecided_fragment_is_honest():
    # Heisenberg-like over GF(2)(t) with a non-semisimple, non-nilpotent
    # p-power on the center: no strategy applies, verdict degrades
    K = RationalFunctionField(2)
    t = K.t
    z3 = (K.zero,) * 3
    g = RLieAlgebra.from_upper(K, 3, {(0, 1): (K.zero, K.zero, K.one)},
                               [z3, z3, (K.zero, K.zero, t)])
    assert g.validate()
    cert = rad_p(g)
    assert cert.verdict == "undecided-fragment"
    # the reported lower bound is still a genuine unipotent p-ideal
    assert g.is_p_ideal(cert.radical) and g.is_unipotent(cert.radical)


def test_mult_type_detection():
    assert is_mult_type(torus_lie(3, 2))
    assert not is_mult_type(alpha_lie(3))
    K = RationalFunctionField(2)
    t = K.t
    # abelian with invertible but non-diagonal p-power matrix: still of
    # multiplicative type (stable rank full)
    g = RLieAlgebra(K, 2, (((K.zero,) * 2,) * 2,) * 2,
                    ((K.zero, K.one), (t, K.zero)))
    assert is_mult_type(g)


def test_instances_without_p_nilpotents_are_abelian():
    for g in INSTANCES:
        if not has_nonzero_p_nilpotent(g):
            assert g.is_abelian()


def test_unipotent_subalgebras_land_in_radical_when_derived_unipotent():
    for g in INSTANCES[:120]:
        D = g.spin_p_ideal(g.derived_subalgebra())
        if not g.is_unipotent(D):
            continue
        R = rad_p(g).radical
        for S in unipotent_restricted_subalgebras(g):
            assert R.contains(S)
