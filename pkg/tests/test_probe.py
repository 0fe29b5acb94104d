import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gencartan.algebra import AlgebraElement, Monomial, group_monomial
from gencartan.families import from_vector, to_vector
from gencartan.hamiltonian import HamiltonianConfig
from gencartan.probe import Window, default_multipliers, ideal_closure, replay, window_basis, window_keys
from gencartan.special import SpecialConfig
from gencartan.witt import WittConfig, WittVector

W = WittConfig.build(1, 1, "N", [[1]])
WIN = Window(((-3, 3),), 2)
H = HamiltonianConfig.build(2, 2, "00", [[1, 0], [0, 1]], m1=1, sigmas=[[1, 1]])


def field(alpha, exps, c=1):
    return WittVector.component(1, 0, AlgebraElement({Monomial(alpha, exps): c}))


def test_one_dimensional_window():
    win = Window(((1, 1), (0, 0)))
    rep = ideal_closure(H, group_monomial((1, 0), 2), win)
    assert (rep.window_dim, rep.reached_dim, rep.saturated) == (1, 1, True)


def test_witt_window_saturates():
    mults = window_basis(W, WIN)
    rep = ideal_closure(W, field((0,), (0,)), WIN, mults)
    assert rep.window_dim == 21
    assert rep.reached_dim == 21 and rep.saturated
    assert replay(rep, W, mults) == rep.reached_basis


def test_hamiltonian_window_misses_sigma():
    win = Window.cube(2, 2)
    rep = ideal_closure(H, group_monomial((1, 0), 2), win)
    assert rep.window_dim == 24
    assert rep.reached_dim == 23
    sigma = Monomial((1, 1), (0, 0))
    assert all(v.coeff(sigma) == 0 for v in rep.reached_basis)


def test_special_multipliers_are_generators():
    cfg = SpecialConfig.build(2, "00", [True, True])
    mults = default_multipliers(cfg, Window.cube(2, 1))
    assert mults and all(isinstance(g, WittVector) for g in mults)
    rep = ideal_closure(cfg, mults[0], Window.cube(2, 1))
    assert replay(rep, cfg, mults) == rep.reached_basis


def test_argument_errors():
    with pytest.raises(ValueError):
        ideal_closure(W, WittVector.zero(1), WIN)
    with pytest.raises(ValueError):
        ideal_closure(W, field((5,), (0,)), WIN)
    with pytest.raises(ValueError):
        Window(((2, 1),))


def test_iteration_cap_marks_unsaturated():
    rep = ideal_closure(W, field((0,), (0,)), WIN, window_basis(W, WIN), max_iter=1)
    assert rep.iterations == 1 and not rep.saturated


def test_report_is_deterministic():
    a = ideal_closure(H, group_monomial((2, -1), 2), Window.cube(2, 2))
    b = ideal_closure(H, group_monomial((2, -1), 2), Window.cube(2, 2))
    assert str(a) == str(b)


def test_vector_round_trip():
    for b in window_basis(W, WIN):
        assert from_vector(to_vector(b), W) == b
    assert len(window_keys(W, WIN)) == 21


seeds = st.sampled_from(window_basis(W, Window(((-1, 1),), 1)))


@settings(max_examples=10, deadline=None)
@given(seeds)
def test_enlarging_the_window_never_loses_reach(seed):
    small, big = Window(((-1, 1),), 1), Window(((-2, 2),), 1)
    rs = ideal_closure(W, seed, small, window_basis(W, small))
    rb = ideal_closure(W, seed, big, window_basis(W, big))
    assert rb.reached_dim >= rs.reached_dim
