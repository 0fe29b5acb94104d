"""Hypothesis strategies for monomials and elements of a given configuration."""

from hypothesis import strategies as st

from gencartan.algebra import AlgebraElement, Monomial
from gencartan.witt import WittVector

COORD = st.integers(-3, 3)
EXP = st.integers(0, 3)
COEFF = st.sampled_from([-2, -1, 1, 2])


def monomials(cfg, coords=None, skip_last=False):
    coords = range(cfg.k) if coords is None else coords
    free = set(coords)
    if hasattr(cfg, "delta_nonzero"):
        free &= {j for j in range(cfg.k) if cfg.delta_nonzero[j]}

    def build(alpha, exps):
        a = tuple(alpha[j] if j in free else 0 for j in range(cfg.k))
        e = tuple(
            exps[p] if cfg.is_polynomial(p) and not (skip_last and p == cfg.n - 1) else 0 for p in range(cfg.n)
        )
        return Monomial(a, e)

    return st.builds(build, st.lists(COORD, min_size=cfg.k, max_size=cfg.k), st.lists(EXP, min_size=cfg.n, max_size=cfg.n))


def elements(cfg, max_terms=3, **kw):
    return st.lists(st.tuples(monomials(cfg, **kw), COEFF), min_size=1, max_size=max_terms).map(
        lambda terms: sum((AlgebraElement({m: c}) for m, c in terms), AlgebraElement())
    )


def witt_vectors(cfg, max_terms=3):
    term = st.tuples(st.integers(0, cfg.n - 1), monomials(cfg), COEFF)
    return st.lists(term, min_size=1, max_size=max_terms).map(
        lambda terms: sum(
            (WittVector.component(cfg.n, p, AlgebraElement({m: c})) for p, m, c in terms), WittVector.zero(cfg.n)
        )
    )
