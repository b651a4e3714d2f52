import random

import pytest
from hypothesis import given, settings, strategies as st

from pradical.envelope import dual_hopf, u_env
from pradical.fields import ExtensionField, PrimeField, RationalFunctionField
from pradical.gallery import alpha_hopf, mu_hopf, paper_g, sl2_kernel_char2
from pradical.survey import enumerate_algebras
from pradical.textio import (ParseError, parse_algebra, parse_element,
                             parse_field, parse_hopf, print_algebra,
                             print_hopf)

PAPER_G_TEXT = """\
FIELD GF(2)(t)
BASIS X Y Z
BRACKETS
[Z,Y] = Y   // brackets may be given in either order
PPOWERS
X^[p] = X
Y^[p] = t*X
Z^[p] = Z
REP
X = [[1,0],[0,1]]
Y = [[0,t],[1,0]]
Z = [[1,0],[0,0]]
"""


def test_parse_field_literals():
    assert repr(parse_field("GF(7)")) == "GF(7)"
    assert repr(parse_field("GF(9)")) == "GF(3^2)"
    assert repr(parse_field("GF(2^3)")) == "GF(2^3)"
    assert repr(parse_field("GF(5)(t)")) == "GF(5)(t)"
    with pytest.raises(ParseError):
        parse_field("GF(6)")
    with pytest.raises(ParseError):
        parse_field("GF(4)(t)")
    with pytest.raises(ParseError):
        parse_field("Q")


def test_parse_shipped_document_matches_gallery():
    g, rep = parse_algebra(PAPER_G_TEXT)
    gp, repp = paper_g(2)
    assert g.brackets == gp.brackets and g.ppowers == gp.ppowers
    assert rep == repp
    assert g.validate()


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError) as err:
        parse_algebra("FIELD GF(2)\nBASIS X Y\nBRACKETS\n[X,X] = Y\n")
    assert err.value.line == 4
    with pytest.raises(ParseError) as err:
        parse_algebra("FIELD GF(2)\nBASIS X Y\nBRACKETS\n[X,W] = Y\n")
    assert err.value.line == 4
    with pytest.raises(ParseError) as err:
        parse_algebra("FIELD GF(2)\nBASIS X Y\nPPOWERS\nX^[p] = 1 + X\n")
    assert err.value.line == 4
    with pytest.raises(ParseError):
        parse_algebra("BASIS X\nPPOWERS\n")


def test_alg_roundtrip_is_byte_identical():
    g, rep = parse_algebra(PAPER_G_TEXT)
    canon = print_algebra(g, rep)
    g2, rep2 = parse_algebra(canon)
    assert print_algebra(g2, rep2) == canon


@given(st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_alg_roundtrip_on_enumerated_instances(seed):
    rng = random.Random(seed)
    instances = list(enumerate_algebras(PrimeField(2), 2))
    g = instances[rng.randrange(len(instances))]
    canon = print_algebra(g)
    g2, rep2 = parse_algebra(canon)
    assert rep2 is None
    assert g2.brackets == g.brackets and g2.ppowers == g.ppowers
    assert print_algebra(g2) == canon


def test_element_expressions():
    K = RationalFunctionField(2)
    t = K.t
    vec = parse_element(K, ("X", "Y"), "(t^2 + t)/t * X + Y - Y")
    assert vec == (K.add(t, K.one), K.zero)
    E = ExtensionField(2, 2)
    vec = parse_element(E, ("A", "B"), "u*A + (u + 1)*B")
    assert vec[0] == (0, 1)
    with pytest.raises(ParseError):
        parse_element(K, ("X",), "X*X")
    with pytest.raises(ParseError):
        parse_element(K, ("X",), "1/X")


def test_hopf_roundtrip():
    for H in (alpha_hopf(2, 2), mu_hopf(3), u_env(sl2_kernel_char2()),
              dual_hopf(u_env(sl2_kernel_char2()))):
        text = print_hopf(H)
        H2 = parse_hopf(text)
        assert (H2.mult, H2.unit, H2.comult, H2.counit, H2.antipode) == \
            (H.mult, H.unit, H.comult, H.counit, H.antipode)
        assert print_hopf(H2) == text
        assert H2.validate_hopf()
