import pytest
from hypothesis import given
from hypothesis import strategies as st

from newton_irred import IntPoly, PolyParseError, content_and_primitive, evaluate, factor_out_x, mul, parse_poly, reciprocal
from newton_irred.poly import divmod_exact, format_expr

from conftest import polys


class TestParse:
    def test_coefficient_list(self):
        assert parse_poly("4,6,4,1").coeffs == (4, 6, 4, 1)

    def test_expression(self):
        assert parse_poly("x^2+2*x+2").coeffs == (2, 2, 1)

    def test_sample_polynomial(self, sample11):
        assert sample11.coeffs == (2**4, 2**2, -(2**2), 2, -2, 1, 2, -1, -1, 2**4, 2**2, 2**5)

    @pytest.mark.parametrize(
        "text, coeffs",
        [
            ("X^3 + 4X^2 + 6X + 4", (4, 6, 4, 1)),
            ("  -x  ", (0, -1)),
            ("7", (7,)),
            ("3x - 3x + 1", (1,)),
            ("x**2 - 1", (-1, 0, 1)),
            ("-3, 0, +2", (-3, 0, 2)),
            ("0,0,0", (0,)),
            ("x^2 − 2", (-2, 0, 1)),
        ],
    )
    def test_variants(self, text, coeffs):
        assert parse_poly(text).coeffs == coeffs

    def test_all_zero_is_zero_polynomial(self):
        f = parse_poly("0,0")
        assert f.is_zero() and f.degree is None

    @pytest.mark.parametrize("text, pos", [("x^2 + y", 6), ("1,,2", 2), ("x^", 2), ("2 x 3", 4), ("x + (1)", 4)])
    def test_syntax_errors_report_position(self, text, pos):
        with pytest.raises(PolyParseError) as info:
            parse_poly(text)
        assert info.value.position == pos

    @pytest.mark.parametrize("text", ["", "   "])
    def test_empty(self, text):
        with pytest.raises(PolyParseError):
            parse_poly(text)

    @given(polys(max_degree=10, bound=10**30))
    def test_round_trip_coefficients(self, f):
        assert parse_poly(str(f)) == f

    @given(polys(max_degree=10, bound=1000))
    def test_round_trip_expression(self, f):
        assert parse_poly(format_expr(f)) == f


class TestArithmetic:
    def test_product(self):
        assert mul(parse_poly("x+2"), parse_poly("x^2+2x+2")) == parse_poly("x^3+4x^2+6x+4")

    def test_identity_and_zero(self):
        f = parse_poly("3x^2-1")
        assert mul(f, IntPoly([1])) == f
        assert mul(f, IntPoly([0])).is_zero()

    @pytest.mark.parametrize("t, value", [(0, 2), (1, 5)])
    def test_eval(self, t, value):
        assert evaluate(parse_poly("x^2+2x+2"), t) == value

    def test_eval_root(self):
        assert evaluate(parse_poly("x^3+4x^2+6x+4"), -2) == 0

    def test_big_coefficients_stay_exact(self):
        f = IntPoly([2**200, 1])
        assert (f * f).coeffs == (2**400, 2**201, 1)

    @given(polys(), polys(), polys())
    def test_ring_laws(self, f, g, h):
        assert mul(f, g) == mul(g, f)
        assert mul(mul(f, g), h) == mul(f, mul(g, h))

    @given(polys(), polys(), st.integers(-50, 50))
    def test_eval_is_homomorphism(self, f, g, t):
        assert evaluate(mul(f, g), t) == evaluate(f, t) * evaluate(g, t)

    @given(polys(min_degree=0), polys(min_degree=0))
    def test_degree_adds(self, f, g):
        if not (f.is_zero() or g.is_zero()):
            assert mul(f, g).degree == f.degree + g.degree

    @given(polys(), polys())
    def test_exact_division_recovers_factor(self, f, g):
        if not g.is_zero():
            assert divmod_exact(mul(f, g), g) == f

    def test_inexact_division(self):
        assert divmod_exact(parse_poly("x^2+1"), parse_poly("x+1")) is None
        assert divmod_exact(parse_poly("x^2+1"), parse_poly("2x")) is None


class TestContent:
    @pytest.mark.parametrize(
        "text, content, prim",
        [("2x^2+2", 2, "x^2+1"), ("x^2+2x+2", 1, "x^2+2x+2"), ("-3x-6", 3, "x+2")],
    )
    def test_examples(self, text, content, prim):
        assert content_and_primitive(parse_poly(text)) == (content, parse_poly(prim))

    def test_zero(self):
        with pytest.raises(ValueError):
            content_and_primitive(IntPoly([0]))

    @given(polys(bound=60), polys(bound=60))
    def test_gauss_lemma(self, f, g):
        if f.is_zero() or g.is_zero():
            return
        cf, pf = content_and_primitive(f)
        cg, pg = content_and_primitive(g)
        cfg, pfg = content_and_primitive(mul(f, g))
        assert cfg == cf * cg
        assert pfg == mul(pf, pg)

    @given(polys())
    def test_reconstructs_up_to_sign(self, f):
        if not f.is_zero():
            c, prim = content_and_primitive(f)
            assert c > 0 and prim.leading > 0
            assert prim * c in (f, -f)


class TestReciprocalAndX:
    @pytest.mark.parametrize("text, out", [("4,6,4,1", "1,4,6,4"), ("1,3,1", "1,3,1"), ("0,1", "1")])
    def test_reciprocal(self, text, out):
        assert reciprocal(parse_poly(text)) == parse_poly(out)

    def test_reciprocal_degree_drop(self):
        assert reciprocal(parse_poly("0,1")).degree == 0

    @given(polys(nonzero_ends=True))
    def test_involution(self, f):
        assert reciprocal(reciprocal(f)) == f

    @pytest.mark.parametrize("text, k, rest", [("x^3+x^2", 2, "x+1"), ("x^2+1", 0, "x^2+1"), ("8x", 1, "8")])
    def test_factor_out_x(self, text, k, rest):
        assert factor_out_x(parse_poly(text)) == (k, parse_poly(rest))

    @given(polys(), st.integers(0, 5))
    def test_factor_out_x_inverts_shift(self, f, k):
        if f.is_zero():
            return
        j, g = factor_out_x(mul(IntPoly.monomial(1, k), f))
        assert g.coeffs[0] != 0
        assert mul(IntPoly.monomial(1, j), g) == mul(IntPoly.monomial(1, k), f)
