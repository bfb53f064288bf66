import pytest
from hypothesis import given, strategies as st

from ncalg.errors import PermissibilityError
from ncalg.ncpoly import ONE, T1, X, Y, ZERO, NCPoly
from deriv.derivation import Derivation, delta_degree, derive
from constants.brackets import (
    Box,
    BracketedWord,
    T1Pow,
    XPow,
    boxed,
    bracketed_weight,
    eval_bracketed,
    is_permissible,
    nested_box,
    symbolic_leading_monomial,
)
from constants.operators import box, t_sequence

from strategies import nonzero_polys, polys

F_SAMPLES = [ONE, X, X ** 2, 1 + X, X + X ** 2]


class TestBox:
    def test_examples(self):
        assert box(T1, ONE) == Y * T1 - T1 * Y
        assert box(T1, X) == NCPoly({"YYXX": 1, "YXYX": -1, "XYXY": -1, "XXYY": 1})
        assert box(Y, ONE) == ZERO

    def test_t_sequence(self):
        assert t_sequence(1, X) == T1
        F = 1 + X ** 2
        assert t_sequence(2, F) == Y * T1 * F - F * T1 * Y
        for i in range(1, 5):
            assert t_sequence(i, ONE).leading_monomial() == "Y" * i + "X"
        with pytest.raises(ValueError):
            t_sequence(0, X)

    @pytest.mark.parametrize("F", F_SAMPLES)
    def test_t_sequence_constants(self, F):
        D = Derivation.from_polynomial(F)
        for i in range(1, 5):
            assert derive(D, t_sequence(i, F)) == ZERO

    @given(polys(4, 4), st.sampled_from(F_SAMPLES))
    def test_box_commutes_with_derivation(self, A, F):
        D = Derivation.from_polynomial(F)
        assert box(derive(D, A), F) == derive(D, box(A, F))

    @given(nonzero_polys(4, 4), st.sampled_from(F_SAMPLES[1:]))
    def test_box_preserves_degree(self, A, F):
        D = Derivation.from_polynomial(F)
        assert delta_degree(D, box(A, F)) == delta_degree(D, A)

    @given(st.integers(min_value=0, max_value=6))
    def test_kernel_of_box_for_constant_f(self, k):
        assert box(Y ** k, ONE) == ZERO

    @given(nonzero_polys(4, 4))
    def test_box_is_injective_for_f_equal_x(self, p):
        assert box(p, X) != ZERO


class TestBracketedWord:
    def test_canonical_merging(self):
        bw = BracketedWord.of(T1Pow(1), T1Pow(2), XPow(1), BracketedWord.of(XPow(2), T1Pow(1)))
        assert bw.items == (T1Pow(3), XPow(3), T1Pow(1))
        with pytest.raises(ValueError):
            BracketedWord((T1Pow(1), T1Pow(1)))
        with pytest.raises(ValueError):
            Box(BracketedWord())

    def test_adjacent_boxes_are_kept(self):
        inner = boxed(T1Pow(1))
        bw = BracketedWord.of(inner, inner)
        assert len(bw.items) == 2
        assert bw.box_count() == 2

    def test_string_form(self):
        assert str(boxed(T1Pow(1), XPow(1), T1Pow(1))) == "{T1 X T1}"
        assert str(boxed(boxed(T1Pow(2)))) == "{{T1^2}}"

    def test_eval(self):
        assert eval_bracketed(BracketedWord.of(T1Pow(1)), X ** 5) == T1
        assert eval_bracketed(boxed(T1Pow(1)), X) == t_sequence(2, X)
        assert eval_bracketed(boxed(T1Pow(2)), X) == Y * T1 * T1 * X - X * T1 * T1 * Y
        assert eval_bracketed(BracketedWord.of(XPow(2), T1Pow(1)), X) == X * X * T1
        assert eval_bracketed(nested_box(2), 1 + X) == t_sequence(3, 1 + X)

    def test_weights(self):
        assert bracketed_weight(boxed(T1Pow(1)), 1) == 4
        assert bracketed_weight(boxed(T1Pow(2)), 1) == 6
        assert bracketed_weight(boxed(T1Pow(3)), 1) == 8
        assert bracketed_weight(boxed(T1Pow(1), XPow(1), T1Pow(1)), 2) == 11
        assert bracketed_weight(nested_box(2), 0) == 4


class TestPermissible:
    def test_examples(self):
        assert is_permissible(boxed(T1Pow(1)), 1)
        assert not is_permissible(boxed(T1Pow(1), XPow(1)), 1)
        three = boxed(T1Pow(1), XPow(1), T1Pow(1))
        assert is_permissible(three, 2)
        assert not is_permissible(three, 1)

    def test_nested_rules(self):
        assert is_permissible(boxed(boxed(T1Pow(1)), T1Pow(1)), 1)
        assert not is_permissible(boxed(XPow(1), T1Pow(1)), 3)
        assert not is_permissible(boxed(boxed(T1Pow(1), XPow(1)), T1Pow(1)), 2)
        assert not is_permissible(boxed(T1Pow(1), XPow(2), T1Pow(1)), 2)

    def test_needs_positive_m(self):
        with pytest.raises(ValueError):
            is_permissible(boxed(T1Pow(1)), 0)


class TestSymbolicLeadingMonomial:
    def test_examples(self):
        assert symbolic_leading_monomial(boxed(T1Pow(1)), 1) == "YYXX"
        assert symbolic_leading_monomial(BracketedWord.of(T1Pow(2)), 1) == "YXYX"
        assert symbolic_leading_monomial(boxed(T1Pow(1), XPow(1), T1Pow(1)), 2) == "YYXXYXXX"

    def test_rejects_non_permissible(self):
        with pytest.raises(PermissibilityError):
            symbolic_leading_monomial(boxed(T1Pow(1), XPow(1)), 1)

    @pytest.mark.parametrize("m", [1, 2, 3])
    def test_matches_evaluation(self, m):
        samples = [
            boxed(T1Pow(1)),
            boxed(T1Pow(2)),
            boxed(boxed(T1Pow(1)), T1Pow(1)),
            BracketedWord.of(T1Pow(1), boxed(T1Pow(1))),
        ]
        if m > 1:
            samples.append(boxed(T1Pow(1), XPow(m - 1), T1Pow(1)))
        for bw in samples:
            value = eval_bracketed(bw, X ** m)
            assert symbolic_leading_monomial(bw, m) == value.leading_monomial()
