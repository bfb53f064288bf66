from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from ncalg.errors import ConsistencyError, NilpotencyError
from ncalg.ncpoly import T1, X, Y, ZERO, NCPoly
from deriv.automorphism import Automorphism, ElementaryAuto, FactorKind, apply_auto, log_auto, t1_scaling
from deriv.derivation import Derivation, weitzenbock

from strategies import coefficients


def test_identity():
    A = Automorphism.identity()
    p = NCPoly({"YXY": 2, "X": -1})
    assert apply_auto(A, p) == p
    assert t1_scaling(A) == 1
    assert A.is_identity()


def test_triangular_fixes_t1():
    A = Automorphism.triangular([0, 1])
    assert A.image_y == Y + X
    assert apply_auto(A, T1) == T1


def test_affine_swap_negates_t1():
    A = Automorphism.affine(0, 1, 0, 1, 0, 0)
    assert apply_auto(A, T1) == -T1
    assert t1_scaling(A) == -1


def test_affine_needs_nonzero_determinant():
    with pytest.raises(ValueError):
        ElementaryAuto.affine(1, 2, 0, 2, 4, 0)


@given(coefficients, coefficients, coefficients, coefficients, coefficients, coefficients)
def test_affine_scaling_is_determinant(a1, a2, a3, b1, b2, b3):
    if a1 * b2 - a2 * b1 == 0:
        return
    A = Automorphism.affine(a1, a2, a3, b1, b2, b3)
    assert t1_scaling(A) == a1 * b2 - a2 * b1


def test_composition_order():
    shift = Automorphism.triangular([0, 1])
    swap = Automorphism.affine(0, 1, 0, 1, 0, 0)
    both = swap.compose(shift)
    assert both(Y) == swap(shift(Y))
    assert both(Y) == X + Y
    assert both.factors[0].kind is FactorKind.AFFINE


@given(st.integers(min_value=0, max_value=3), coefficients, coefficients)
def test_exp_composition_adds_parameters(m, lam, mu):
    D = weitzenbock(m)
    composed = Automorphism.from_exp(D.scaled(lam)).compose(Automorphism.from_exp(D.scaled(mu)))
    summed = Automorphism.from_exp(D.scaled(lam + mu))
    assert composed.image_x == summed.image_x
    assert composed.image_y == summed.image_y


@given(st.integers(min_value=0, max_value=4), coefficients)
def test_log_of_exp_round_trip(m, lam):
    D = weitzenbock(m).scaled(lam)
    assert log_auto(Automorphism.from_exp(D)) == D


def test_log_examples():
    assert log_auto(Automorphism.identity()).is_zero()
    assert log_auto(Automorphism.triangular([0, 0, 1])) == Derivation(ZERO, X ** 2)
    D = Derivation.switched(2)
    assert log_auto(Automorphism.from_exp(D)) == D


def test_log_of_non_unipotent_fails():
    with pytest.raises(NilpotencyError):
        log_auto(Automorphism.affine(2, 0, 0, 0, 1, 0), cap=16)


@given(st.lists(coefficients, min_size=1, max_size=4).map(NCPoly.from_x_coefficients))
def test_exp_of_lnd_fixes_t1(f):
    assert t1_scaling(Automorphism.from_exp(Derivation.from_polynomial(f))) == 1


def test_scaling_of_composition_is_product():
    A = Automorphism.affine(2, 1, 0, 1, 3, 5)
    B = Automorphism.affine(1, 0, 1, 4, Fraction(1, 2), 0)
    C = Automorphism.triangular([1, 2, 3])
    composed = A.compose(C).compose(B)
    assert t1_scaling(composed) == t1_scaling(A) * t1_scaling(B) * t1_scaling(C)


def test_scaling_detects_non_automorphism():
    collapse = Automorphism(image_x=X, image_y=X)
    with pytest.raises(ConsistencyError):
        t1_scaling(collapse)
