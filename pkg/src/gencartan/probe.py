"""Finite-window ideal closure.

Starting from a seed, repeatedly bracket with a list of multipliers and keep
only the combinations whose brackets stay inside the window.  Everything
reached is an explicit combination of iterated brackets of the seed, so it
lies in the ideal the seed generates; nothing is ever projected.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from gencartan.algebra import AlgebraElement, Monomial
from gencartan.config import AlgebraConfig
from gencartan.errors import ConfigError
from gencartan.families import (
    HAMILTONIAN,
    SPECIAL,
    Element,
    bracket,
    family,
    from_vector,
    to_vector,
    uses_vector_fields,
)
from gencartan.hamiltonian import quotient_rep
from gencartan.linalg import RankAccumulator, exact_rank_accumulate
from gencartan.special import special_generator
from gencartan.witt import WittVector

__all__ = [
    "ClosureReport",
    "Window",
    "Witness",
    "default_multipliers",
    "exact_rank_accumulate",
    "ideal_closure",
    "replay",
    "window_basis",
]

DEFAULT_MAX_ITER = 64


@dataclass(frozen=True)
class Window:
    """Box of group coordinates and a bound on the total polynomial degree."""

    group_box: tuple[tuple[int, int], ...]
    max_degree: int = 0

    def __post_init__(self) -> None:
        for lo, hi in self.group_box:
            if lo > hi:
                raise ValueError(f"empty interval {lo}..{hi}")
        if self.max_degree < 0:
            raise ValueError("max_degree must be nonnegative")

    @classmethod
    def cube(cls, k: int, radius: int, max_degree: int = 0) -> Window:
        return cls(((-radius, radius),) * k, max_degree)

    def group_elements(self) -> list[tuple[int, ...]]:
        return list(itertools.product(*(range(lo, hi + 1) for lo, hi in self.group_box)))

    def contains_monomial(self, m: Monomial) -> bool:
        if len(m.alpha) != len(self.group_box):
            return False
        return all(lo <= a <= hi for a, (lo, hi) in zip(m.alpha, self.group_box)) and sum(m.exps) <= self.max_degree


def _exponent_vectors(cfg: AlgebraConfig, max_degree: int) -> list[tuple[int, ...]]:
    free = [p for p in range(cfg.n) if cfg.is_polynomial(p)]
    out = []
    for combo in itertools.product(range(max_degree + 1), repeat=len(free)):
        if sum(combo) <= max_degree:
            e = [0] * cfg.n
            for p, x in zip(free, combo):
                e[p] = x
            out.append(tuple(e))
    return sorted(out)


def window_monomials(cfg: AlgebraConfig, window: Window) -> list[Monomial]:
    if len(window.group_box) != cfg.k:
        raise ConfigError(f"window has {len(window.group_box)} coordinates, config has k={cfg.k}")
    out = []
    for a in window.group_elements():
        for e in _exponent_vectors(cfg, window.max_degree):
            try:
                cfg.check_monomial(a, e)
            except ConfigError:
                continue
            out.append(Monomial(a, e))
    if family(cfg) == HAMILTONIAN:
        out = [m for m in out if any(m.alpha) or any(m.exps)]
    return sorted(out)


def window_keys(cfg: AlgebraConfig, window: Window) -> list:
    """Coordinates of the window span, in canonical order."""
    monos = window_monomials(cfg, window)
    if uses_vector_fields(cfg):
        return [(p, m) for p in range(cfg.n) for m in monos]
    return monos


def window_basis(cfg: AlgebraConfig, window: Window) -> list[Element]:
    return [from_vector({key: 1}, cfg) for key in window_keys(cfg, window)]


def default_multipliers(cfg: AlgebraConfig, window: Window) -> list[Element]:
    """Window basis elements of polynomial degree at most one (constants included).

    For type S the multipliers are the generators D_{p,q}(x) (p < q) on the
    same monomials.
    """
    monos = [m for m in window_monomials(cfg, window) if sum(m.exps) <= 1]
    fam = family(cfg)
    if fam == SPECIAL:
        out = []
        for m in monos:
            for p, q in itertools.combinations(range(cfg.n), 2):
                g = special_generator(p, q, AlgebraElement({m: 1}), cfg)
                if g:
                    out.append(g)
        return out
    if uses_vector_fields(cfg):
        return [WittVector.component(cfg.n, p, AlgebraElement({m: 1})) for p in range(cfg.n) for m in monos]
    return [AlgebraElement({m: 1}) for m in monos]


@dataclass(frozen=True)
class Witness:
    """How a reached vector was produced.

    ``multiplier is None`` marks the seed; otherwise the vector equals
    ``[multipliers[multiplier], sum_j combo[j] * reached[j]]``.
    """

    multiplier: int | None
    combo: tuple[tuple[int, Fraction], ...] = ()


@dataclass
class ClosureReport:
    window_dim: int
    reached_dim: int
    reached_basis: list[Element]
    saturated: bool
    iterations: int
    witnesses: list[Witness] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [
            f"window_dim: {self.window_dim}",
            f"reached_dim: {self.reached_dim}",
            f"saturated: {str(self.saturated).lower()}",
            f"iterations: {self.iterations}",
        ]
        for i, (v, w) in enumerate(zip(self.reached_basis, self.witnesses)):
            if w.multiplier is None:
                how = "seed"
            else:
                how = f"[g{w.multiplier}, " + " + ".join(f"({c})*v{j}" for j, c in w.combo) + "]"
            out.append(f"v{i} = {how} = {v}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def _normalize(x: Element, cfg: AlgebraConfig) -> Element:
    return quotient_rep(x) if family(cfg) == HAMILTONIAN else x


def ideal_closure(
    cfg: AlgebraConfig,
    seed: Element,
    window: Window,
    multipliers: Sequence[Element] | None = None,
    max_iter: int = DEFAULT_MAX_ITER,
) -> ClosureReport:
    keys = window_keys(cfg, window)
    inside = set(keys)
    seed = _normalize(seed, cfg)
    if not seed:
        raise ValueError("seed must be nonzero")
    if any(key not in inside for key, _ in seed.items()):
        raise ValueError("seed is not supported inside the window")
    if multipliers is None:
        multipliers = default_multipliers(cfg, window)

    reached: list[Element] = [seed]
    witnesses = [Witness(None)]
    span = RankAccumulator()
    span.add(to_vector(seed))
    images: dict[tuple[int, int], Element] = {}

    iterations = 0
    changed = True
    while changed and iterations < max_iter:
        iterations += 1
        changed = False
        for gi, g in enumerate(multipliers):
            n_now = len(reached)
            imgs = []
            escape = RankAccumulator()
            relations = []
            for j in range(n_now):
                img = images.get((gi, j))
                if img is None:
                    img = images[(gi, j)] = _normalize(bracket(g, reached[j], cfg), cfg)
                imgs.append(img)
                rel = escape.add({key: c for key, c in img.items() if key not in inside})
                if rel is not None:
                    relations.append(rel)
            for rel in relations:
                vec: dict = {}
                for j, c in rel.items():
                    for key, x in imgs[j].items():
                        vec[key] = vec.get(key, 0) + c * x
                vec = {key: c for key, c in vec.items() if c}
                if vec and span.add(vec) is None:
                    reached.append(from_vector(vec, cfg))
                    witnesses.append(Witness(gi, tuple(sorted(rel.items()))))
                    changed = True
    return ClosureReport(
        window_dim=len(keys),
        reached_dim=span.rank,
        reached_basis=reached,
        saturated=not changed,
        iterations=iterations,
        witnesses=witnesses,
    )


def replay(report: ClosureReport, cfg: AlgebraConfig, multipliers: Sequence[Element]) -> list[Element]:
    """Recompute every reached vector from its witness chain."""
    out: list[Element] = []
    for w in report.witnesses:
        if w.multiplier is None:
            out.append(report.reached_basis[0])
            continue
        arg = None
        for j, c in w.combo:
            term = out[j].scale(c)
            arg = term if arg is None else arg + term
        out.append(_normalize(bracket(multipliers[w.multiplier], arg, cfg), cfg))
    return out
