import hypothesis.strategies as st
import pytest
from hypothesis import given

from lctkit import (
    DimensionMismatch,
    EmptyIdeal,
    MonomialIdeal,
    ParseError,
    UnitIdeal,
    ZeroRestriction,
    maximal_ideal,
    normalize,
    order,
    parse_ideal,
    power,
    product,
    restrict,
)
from lctkit.ideal import _minimal_numpy, _minimal_python, ideal_sum, permute
from strategies import ideals


class TestParse:
    def test_alias_form(self):
        I = parse_ideal("x^4, y^7, z^14, y^6*z")
        assert I.dimension == 3
        assert set(I.generators) == {(4, 0, 0), (0, 7, 0), (0, 0, 14), (0, 6, 1)}

    def test_indexed_form_gives_maximal_ideal(self):
        assert parse_ideal("x1, x2") == maximal_ideal(2)

    def test_divisibility_pruning(self):
        I = parse_ideal("x^2, x^3")
        assert I.dimension == 1
        assert I.generators == ((2,),)

    def test_tuple_form(self):
        assert parse_ideal("(4,0,0),(0,7,0),(0,0,14),(0,6,1)") == parse_ideal(
            "x^4, y^7, z^14, y^6*z"
        )

    def test_semicolon_and_whitespace(self):
        assert parse_ideal(" x ^ 2 ;\n y^3 ") == parse_ideal("x^2,y^3")

    def test_juxtaposed_factors(self):
        assert parse_ideal("xy, x^3") == parse_ideal("x*y, x^3")
        assert parse_ideal("xy^2z, x^5") == parse_ideal("x*y^2*z, x^5")
        assert parse_ideal("x1x2^3, x3") == parse_ideal("x1*x2^3, x3")

    def test_repeated_variable_multiplies(self):
        assert parse_ideal("x^2*y*x").generators == ((3, 1),)

    def test_explicit_dimension_pads(self):
        I = parse_ideal("x^2", dimension=3)
        assert I.generators == ((2, 0, 0),)

    def test_canonical_order(self):
        assert parse_ideal("y^3, x^2").generators == ((0, 3), (2, 0))

    @pytest.mark.parametrize(
        "text",
        ["x^", "x^0", "q", "x,,y", "x*", "x1, y", "(1,2),(3)", "(1,2)(3,4)", "x^2, (1,0)",
         "x5", "(1,-1)", "(a,b)"],
    )
    def test_malformed(self, text):
        with pytest.raises(ParseError):
            parse_ideal(text, dimension=2 if text == "x5" else None)

    def test_unit_ideal(self):
        with pytest.raises(UnitIdeal):
            parse_ideal("1, x")
        with pytest.raises(UnitIdeal):
            parse_ideal("(0,0),(1,0)")

    def test_empty(self):
        with pytest.raises(EmptyIdeal):
            parse_ideal("   ")

    def test_aliases_need_small_dimension(self):
        with pytest.raises(ParseError):
            parse_ideal("x", dimension=5)


class TestNormalize:
    def test_drops_multiples(self):
        assert normalize({(2, 0), (2, 1), (0, 3)}) == ((0, 3), (2, 0))

    def test_already_minimal(self):
        assert normalize({(1, 1)}) == ((1, 1),)

    def test_duplicates(self):
        assert normalize([(5, 0, 0), (1, 2, 1), (1, 2, 1)]) == ((1, 2, 1), (5, 0, 0))

    def test_errors(self):
        with pytest.raises(EmptyIdeal):
            normalize([])
        with pytest.raises(UnitIdeal):
            normalize([(0, 0)])
        with pytest.raises(DimensionMismatch):
            normalize([(1, 0), (1,)])

    @given(st.lists(st.tuples(*[st.integers(0, 5)] * 3).filter(any), min_size=17, max_size=80))
    def test_vectorized_path_matches_reference(self, gens):
        ordered = sorted(set(gens))
        assert _minimal_numpy(ordered) == _minimal_python(ordered)

    @given(st.lists(st.tuples(st.integers(0, 9), st.integers(0, 9)).filter(any), min_size=17,
                    max_size=80))
    def test_planar_sweep_matches_reference(self, gens):
        ordered = sorted(set(gens))
        assert _minimal_numpy(ordered) == _minimal_python(ordered)

    @given(ideals(finite=False))
    def test_idempotent(self, I):
        assert normalize(I.generators) == I.generators

    @given(ideals(finite=False))
    def test_minimal(self, I):
        for g in I.generators:
            for h in I.generators:
                if g != h:
                    assert not all(a <= b for a, b in zip(g, h))

    def test_large_exponents_are_exact(self):
        big = 2**70
        I = MonomialIdeal(2, ((big, 0), (0, big), (big + 1, 1)))
        assert I.generators == ((0, big), (big, 0))


class TestAlgebra:
    def test_product_prunes(self):
        I = product(parse_ideal("x^2,y^3"), parse_ideal("x^3,y^2"))
        assert I.generators == ((0, 5), (2, 2), (5, 0))

    def test_product_with_maximal(self, I0):
        mI = product(maximal_ideal(3), I0)
        assert len(mI.generators) == 11
        for g in [(5, 0, 0), (4, 1, 0), (4, 0, 1), (0, 8, 0), (0, 7, 1), (0, 0, 15)]:
            assert g in mI.generators

    def test_product_shift(self):
        x = MonomialIdeal(3, ((1, 0, 0),))
        assert product(maximal_ideal(3), x).generators == ((1, 0, 1), (1, 1, 0), (2, 0, 0))

    def test_product_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            product(maximal_ideal(2), maximal_ideal(3))

    def test_power(self):
        assert power(parse_ideal("x^2,y^3"), 2).generators == ((0, 6), (2, 3), (4, 0))
        I = parse_ideal("x^2,x*y,y^5")
        assert power(I, 1) == I
        assert power(maximal_ideal(2), 3).generators == ((0, 3), (1, 2), (2, 1), (3, 0))

    def test_power_rejects_zero(self):
        with pytest.raises(ValueError):
            power(maximal_ideal(2), 0)

    def test_operators(self):
        I, J = parse_ideal("x^2,y^3"), parse_ideal("x*y")
        assert I * J == product(I, J)
        assert I**3 == power(I, 3)
        assert I + J == ideal_sum(I, J) == parse_ideal("x^2,y^3,x*y")

    def test_maximal_ideal(self):
        assert maximal_ideal(1).generators == ((1,),)
        assert maximal_ideal(2).generators == ((0, 1), (1, 0))
        assert set(maximal_ideal(3).generators) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}

    def test_restrict(self, I0):
        assert restrict(I0, [1, 2]) == parse_ideal("x^7, y^14, x^6*y")
        assert restrict(I0, [0]) == parse_ideal("x^4")
        with pytest.raises(ZeroRestriction):
            restrict(parse_ideal("x*y"), [0])

    def test_order(self, I0):
        assert order(I0) == 4
        assert order(maximal_ideal(4)) == 1
        assert order(parse_ideal("x*y^2*z, x^5, y^6, z^5")) == 4

    def test_contains_monomial(self):
        I = parse_ideal("x^2, y^3")
        assert I.contains_monomial((2, 0)) and I.contains_monomial((5, 1))
        assert not I.contains_monomial((1, 2))

    @given(ideals(finite=False), ideals(finite=False))
    def test_text_round_trip(self, I, _):
        assert parse_ideal(I.to_text(), I.dimension) == I
        assert parse_ideal(I.to_tuple_text()) == I


@st.composite
def triples(draw):
    n = draw(st.integers(1, 3))
    return tuple(draw(ideals(n=n, finite=False, max_exponent=4)) for _ in range(3))


class TestProperties:
    @given(triples())
    def test_product_commutative_associative(self, t):
        I, J, K = t
        assert product(I, J) == product(J, I)
        assert product(product(I, J), K) == product(I, product(J, K))

    @given(triples())
    def test_order_additive(self, t):
        I, J, _ = t
        assert order(product(I, J)) == order(I) + order(J)

    @given(ideals(finite=False, max_exponent=4), st.integers(1, 4))
    def test_order_of_power(self, I, s):
        assert order(power(I, s)) == s * order(I)

    @given(ideals(finite=False))
    def test_restrict_to_everything(self, I):
        assert restrict(I, range(I.dimension)) == I

    @given(ideals(), st.data())
    def test_finite_colength_restricts(self, I, data):
        L = data.draw(st.sets(st.integers(0, I.dimension - 1), min_size=1))
        assert restrict(I, L).dimension == len(L)

    @given(ideals(finite=False), st.permutations([0, 1, 2]))
    def test_permute_preserves_order(self, I, perm):
        if I.dimension == 3:
            assert order(permute(I, perm)) == order(I)
