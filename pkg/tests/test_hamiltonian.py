import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gencartan.algebra import AlgebraElement, Monomial, group_monomial, monomial, one
from gencartan.hamiltonian import (
    HamiltonianConfig,
    closed_form_bracket_degenerate,
    derived_subalgebra_window,
    hamiltonian_bracket,
    quotient_bracket,
    quotient_rep,
    suggest_sigmas,
    validate_hamiltonian,
)
from gencartan.presets import example_4
from strategies import COORD, elements

DEGENERATE = HamiltonianConfig.build(2, 2, "00", [[1, 0], [0, 1]], m1=1, sigmas=[[1, 1]])
SYMPLECTIC = example_4(k=2, m=1)
MIXED = example_4(k=2, m=2, m1=1, kinds="0NN0")


def x(alpha, n=2):
    return group_monomial(alpha, n)


def test_validator_examples():
    assert validate_hamiltonian(example_4()) == []
    assert validate_hamiltonian(MIXED) == []
    bad = HamiltonianConfig.build(1, 2, "00", [[0], [0]], m1=1, sigmas=[[1]])
    assert "(4.2)" in {v.condition for v in validate_hamiltonian(bad)}
    cfg = example_4(m=2, m1=1, kinds="NNNN")
    off = HamiltonianConfig.build(cfg.k, cfg.n, cfg.kinds, cfg.maps, m1=1, sigmas=[[1, 1, 1, 0]])
    assert [v.condition for v in validate_hamiltonian(off)] == ["(4.9)"]


def test_degenerate_closed_form_example():
    assert hamiltonian_bracket(x((1, 0)), x((0, 1)), DEGENERATE) == x((2, 2))
    assert closed_form_bracket_degenerate((1, 0), (0, 1), DEGENERATE) == x((2, 2))
    assert not closed_form_bracket_degenerate((2, -1), (2, -1), DEGENERATE)


@given(st.tuples(COORD, COORD), st.tuples(COORD, COORD))
def test_sigma_never_appears_in_degenerate_brackets(a, b):
    sigma = Monomial((1, 1), (0, 0))
    assert closed_form_bracket_degenerate(a, b, DEGENERATE).coeff(sigma) == 0


def test_closed_form_requires_degenerate_kinds():
    with pytest.raises(ValueError):
        closed_form_bracket_degenerate((0,) * 5, (0,) * 5, MIXED)


def test_quotient_examples():
    assert not quotient_rep(one(2, 2))
    assert quotient_rep(one(2, 2).scale(3) + x((1, 0))) == x((1, 0))
    assert quotient_rep(x((1, 0))) == x((1, 0))


def test_derived_window_examples():
    assert derived_subalgebra_window(DEGENERATE, [(0, 0)]) == set()
    grid = list(itertools.product(range(-2, 3), repeat=2))
    assert derived_subalgebra_window(DEGENERATE, grid) == set(grid) - {(0, 0), (1, 1)}


def test_suggested_sigmas_are_valid():
    cfg = example_4(m=2, m1=1, kinds="NNNN")
    (basis,) = suggest_sigmas(cfg)
    for s in basis:
        trial = HamiltonianConfig.build(cfg.k, cfg.n, cfg.kinds, cfg.maps, m1=1, sigmas=[s])
        assert all(v.condition != "(4.9)" for v in validate_hamiltonian(trial))


@given(elements(MIXED))
def test_one_is_central(v):
    assert not hamiltonian_bracket(one(MIXED.k, MIXED.n), v, MIXED)


@settings(max_examples=40)
@given(elements(MIXED), elements(MIXED), st.integers(-3, 3), st.integers(-3, 3))
def test_constants_do_not_change_brackets(u, v, c1, c2):
    e = one(MIXED.k, MIXED.n)
    assert quotient_bracket(u + e.scale(c1), v + e.scale(c2), MIXED) == quotient_bracket(u, v, MIXED)


@settings(max_examples=30)
@given(elements(SYMPLECTIC), elements(SYMPLECTIC), elements(SYMPLECTIC))
def test_jacobi_with_skew_form(a, b, c):
    br = lambda s, t: hamiltonian_bracket(s, t, SYMPLECTIC)  # noqa: E731
    assert not (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)))
    assert br(a, b) == -br(b, a)


@settings(max_examples=30)
@given(elements(MIXED), elements(MIXED), elements(MIXED))
def test_jacobi_mixed_kinds(a, b, c):
    br = lambda s, t: hamiltonian_bracket(s, t, MIXED)  # noqa: E731
    assert not (br(a, br(b, c)) + br(b, br(c, a)) + br(c, br(a, b)))


def test_polynomial_pair_acts_like_poisson_bracket():
    # m = 1, m1 = 0, trivial group: the bracket of the two coordinates is 1 (a constant)
    cfg = HamiltonianConfig.build(0, 2, "NN", [[], []], m1=0)
    p, q = monomial((), (1, 0)), monomial((), (0, 1))
    assert hamiltonian_bracket(p, q, cfg) == one(0, 2)
    assert isinstance(quotient_bracket(p, q, cfg), AlgebraElement) and not quotient_bracket(p, q, cfg)
