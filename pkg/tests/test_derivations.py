from hypothesis import given, settings
from hypothesis import strategies as st

from gencartan.algebra import AlgebraElement, Monomial, monomial, multiply, one
from gencartan.contact import ContactConfig
from gencartan.derivations import (
    ContactEuler,
    DownGrading,
    Grading,
    Mixed,
    Scaled,
    Tag,
    all_kinds,
    apply_derivation,
    check_leibniz,
)
from gencartan.special import SpecialConfig
from gencartan.witt import WittConfig
from strategies import elements, monomials

W = WittConfig.build(1, 1, "N", [[1]])
S = SpecialConfig.build(3, "NN0", [True, False, True], rho=[1, 0, 0], sigma=[2, 0, -1])
K = ContactConfig.build(2, 3, "NNN", [[1, 0], [0, 0], [0, 1]], [0], [1], [[-1, 0]], [0, 1])


def test_mixed_on_monomial():
    u = monomial((4,), (3,))
    assert apply_derivation(Mixed(0), u, W) == monomial((4,), (3,), 4) + monomial((4,), (2,), 3)


def test_down_grading_is_nilpotent():
    u = monomial((2,), (3,))
    for _ in range(4):
        u = apply_derivation(DownGrading(0), u, W)
    assert not u


def test_contact_euler_weight():
    # mho1 = {1}, mho2 = {2}: weight phi_1(alpha) + i_2 = 3 + 2
    u = AlgebraElement({Monomial((3, 7), (1, 2, 4)): 1})
    assert apply_derivation(ContactEuler, u, K) == u.scale(5)


def test_leibniz_examples():
    for d in all_kinds(W):
        assert check_leibniz(d, one(1, 1), one(1, 1), W)
    assert check_leibniz(Mixed(0), monomial((1,), (0,)), monomial((0,), (1,)), W)


def test_kind_lists():
    assert [d.tag for d in all_kinds(W)] == [Tag.GRADING, Tag.DOWN, Tag.MIXED]
    assert sum(d.tag is Tag.SCALED for d in all_kinds(S)) == 3
    assert all_kinds(K)[-1] == ContactEuler


def _check_all(cfg, u, v):
    for d in all_kinds(cfg):
        assert check_leibniz(d, u, v, cfg), d
    basic = [d for d in all_kinds(cfg) if d.tag in (Tag.GRADING, Tag.DOWN, Tag.MIXED)]
    scaled = [d for d in all_kinds(cfg) if d.tag is Tag.SCALED]
    for group in (basic, scaled):
        for d1 in group:
            for d2 in group:
                lhs = apply_derivation(d1, apply_derivation(d2, u, cfg), cfg)
                assert lhs == apply_derivation(d2, apply_derivation(d1, u, cfg), cfg)


@settings(max_examples=60)
@given(st.data())
def test_leibniz_and_commutativity(data):
    for cfg in (W, S, K):
        _check_all(cfg, data.draw(elements(cfg)), data.draw(elements(cfg)))


@given(monomials(S))
def test_nilpotence_per_index(m):
    for p in range(S.n):
        if not S.is_polynomial(p):
            continue
        u = AlgebraElement({m: 1})
        for _ in range(m.exps[p] + 1):
            u = apply_derivation(DownGrading(p), u, S)
        assert not u


@given(monomials(W))
def test_mixed_is_grading_plus_down(m):
    u = AlgebraElement({m: 1})
    assert apply_derivation(Mixed(0), u, W) == apply_derivation(Grading(0), u, W) + apply_derivation(
        DownGrading(0), u, W
    )


def test_scaled_multiplies_by_sigma_monomial():
    u = monomial((1, 0, 1), (0, 0, 0))
    got = apply_derivation(Scaled(0), u, S)
    assert got == multiply(AlgebraElement({Monomial((2, 0, 0), (0, 0, 0)): 1}), apply_derivation(Mixed(0), u, S))
