from hypothesis import given, strategies as st

from ncalg.ncpoly import ONE, T1, X, Y, ZERO, commutator
from constants.nabla import MarkedElement, nabla_l, nabla_r
from constants.operators import box

from strategies import coefficients, monomials

F_SAMPLES = st.sampled_from([X, X ** 2, 1 + X])


def test_nabla_examples():
    assert nabla_r(ONE, ONE, ONE, X) == T1
    assert nabla_r(X, ONE, ONE, X) == X * Y * X - X * X * Y
    assert nabla_l(ONE, ONE, ONE, X) == -T1
    assert nabla_l(ONE, X, ONE, X) == X * Y * X - Y * X * X


def test_marked_element_value():
    M = MarkedElement.single(X, Y)
    assert M.value() == X * Y * Y
    assert M.with_marked(X) == X * X * Y
    assert (M - M).value() == ZERO
    assert MarkedElement().value() == ZERO


@given(monomials(), monomials(), F_SAMPLES)
def test_boxed_value_is_box_of_value(V, U, F):
    M = MarkedElement.single(V, U)
    assert M.boxed(F).value() == box(M.value(), F)


@given(monomials(), monomials(), monomials(), F_SAMPLES)
def test_marked_operations_match_decomposition_formulas(V, U, W, F):
    M = MarkedElement.single(V, U)
    assert M.nabla_r(F) == nabla_r(V, U, ONE, F)
    assert M.nabla_l(F) == nabla_l(V, U, ONE, F)
    assert M.nabla_r(F, W) == nabla_r(V, U, W, F)
    assert M.nabla_l(F, W) == nabla_l(V, U, W, F)


@given(monomials(), monomials(), F_SAMPLES)
def test_commutation_identity(V, U, F):
    M = MarkedElement.single(V, U)
    assert M.boxed(F).nabla_r(F) == box(M.nabla_r(F), F) - M.nabla_l(F) * commutator(Y, F)


@given(monomials(), monomials(), monomials(3), F_SAMPLES)
def test_commutation_identity_with_right_factor(V, U, W, F):
    M = MarkedElement.single(V, U)
    lhs = M.boxed(F).nabla_r(F, W) - box(M.nabla_r(F, W), F)
    rhs = box(M.nabla_r(F) * W - M.nabla_r(F, W), F) - M.nabla_l(F) * box(W, F)
    assert lhs == rhs


@given(monomials(), monomials(), monomials(), monomials(), coefficients, F_SAMPLES)
def test_identity_is_linear_in_decompositions(V1, U1, V2, U2, c, F):
    M = MarkedElement.single(V1, U1) + MarkedElement.single(V2, U2).scale(c)
    assert M.boxed(F).nabla_r(F) == box(M.nabla_r(F), F) - M.nabla_l(F) * commutator(Y, F)
