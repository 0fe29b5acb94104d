from hypothesis import given, settings

from gencartan.algebra import AlgebraElement, monomial, one
from gencartan.probe import Window, window_monomials
from gencartan.witt import WittConfig, WittVector, apply_witt, common_constants, validate_witt, witt_bracket
from strategies import elements, witt_vectors

W1 = WittConfig.build(1, 1, "N", [[1]])
W2 = WittConfig.build(2, 2, "0N", [[1, 0], [0, 1]])


def field(n, p, u):
    return WittVector.component(n, p, u)


def test_validator_examples():
    assert validate_witt(WittConfig.build(1, 1, "0", [[1]])) == []
    bad = validate_witt(WittConfig.build(1, 1, "0", [[0]]))
    assert {v.condition for v in bad} == {"(2.6)", "(2.7)"}
    only = validate_witt(WittConfig.build(2, 2, "NN", [[1, 0], [1, 0]]))
    assert [v.condition for v in only] == ["(2.7)"]


def test_action_examples():
    u = monomial((2,), (3,))
    assert apply_witt(field(1, 0, one(1, 1)), u, W1) == monomial((2,), (3,), 2) + monomial((2,), (2,), 3)
    assert not apply_witt(field(1, 0, monomial((1,), (1,))), one(1, 1), W1)
    assert apply_witt(field(1, 0, monomial((1,), (0,))), monomial((1,), (0,)), W1) == monomial((2,), (0,))


def test_bracket_examples():
    a = field(1, 0, monomial((1,), (0,)))
    b = field(1, 0, monomial((0,), (1,)))
    assert witt_bracket(a, b, W1) == field(1, 0, monomial((1,), (0,)) - monomial((1,), (1,)))
    assert str(witt_bracket(a, b, W1)) == "(1)*x[(1);(0)]d1 + (-1)*x[(1);(1)]d1"
    assert not witt_bracket(a, a, W1)
    c1, c2 = field(2, 0, one(2, 2)), field(2, 1, one(2, 2))
    assert not witt_bracket(c1, c2, W2)


def test_constants_killed_by_all_derivations():
    monos = window_monomials(W2, Window.cube(2, 2, 2))
    consts = common_constants(W2, monos)
    assert consts == [one(2, 2)]


@settings(max_examples=40)
@given(witt_vectors(W2), witt_vectors(W2), witt_vectors(W2))
def test_jacobi(a, b, c):
    total = witt_bracket(a, witt_bracket(b, c, W2), W2)
    total = total + witt_bracket(b, witt_bracket(c, a, W2), W2) + witt_bracket(c, witt_bracket(a, b, W2), W2)
    assert not total


@settings(max_examples=40)
@given(witt_vectors(W2), witt_vectors(W2), elements(W2))
def test_bracket_acts_as_commutator(a, b, u):
    lhs = apply_witt(witt_bracket(a, b, W2), u, W2)
    rhs = apply_witt(a, apply_witt(b, u, W2), W2) - apply_witt(b, apply_witt(a, u, W2), W2)
    assert lhs == rhs


@given(witt_vectors(W2), witt_vectors(W2))
def test_skew(a, b):
    assert witt_bracket(a, b, W2) == -witt_bracket(b, a, W2)


def test_printing_orders_by_component_then_monomial():
    w = field(2, 1, monomial((0, 0), (0, 0))) + field(2, 0, monomial((1, 0), (0, 0), 2))
    assert str(w) == "(2)*x[(1,0);(0,0)]d1 + (1)*x[(0,0);(0,0)]d2"
    assert str(WittVector.zero(2)) == "0"
    assert isinstance(w.coeffs[0], AlgebraElement)
