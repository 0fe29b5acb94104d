"""Witt-type algebra: vector fields sum_p u_p d_p over the monomial algebra."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gencartan.algebra import AlgebraElement, Monomial, format_coeff, format_monomial, multiply, zero
from gencartan.config import AlgebraConfig, VariableKind
from gencartan.derivations import mixed
from gencartan.errors import ConfigError, Violation
from gencartan.lattice import kernel_lattice, witness_outside_kernel
from gencartan.linalg import RankAccumulator


class WittVector:
    """``sum_p coeffs[p] * d_p`` with ``d_p`` the mixed derivations."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[AlgebraElement]):
        self.coeffs = tuple(coeffs)

    @classmethod
    def zero(cls, n: int) -> WittVector:
        return cls(zero() for _ in range(n))

    @classmethod
    def component(cls, n: int, p: int, u: AlgebraElement) -> WittVector:
        return cls(u if q == p else zero() for q in range(n))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    def _check(self, other: WittVector) -> None:
        if self.n != other.n:
            raise ConfigError(f"Witt vectors of lengths {self.n} and {other.n}")

    def __add__(self, other: WittVector) -> WittVector:
        if not isinstance(other, WittVector):
            return NotImplemented
        self._check(other)
        return WittVector(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: WittVector) -> WittVector:
        if not isinstance(other, WittVector):
            return NotImplemented
        self._check(other)
        return WittVector(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> WittVector:
        return WittVector(-a for a in self.coeffs)

    def scale(self, c) -> WittVector:
        return WittVector(a.scale(c) for a in self.coeffs)

    def __mul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, WittVector):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def items(self):
        """Sparse view ``(p, monomial) -> coefficient``."""
        for p, u in enumerate(self.coeffs):
            for m, c in u.items():
                yield (p, m), c

    def sorted_items(self) -> list[tuple[tuple[int, Monomial], Fraction]]:
        return sorted(self.items())

    def __str__(self) -> str:
        terms = [f"{format_coeff(c)}*{format_monomial(m)}d{p + 1}" for (p, m), c in self.sorted_items()]
        return " + ".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return f"WittVector({self})"


@dataclass(frozen=True)
class WittConfig(AlgebraConfig):
    @classmethod
    def build(cls, k: int, n: int, kinds, maps) -> WittConfig:
        return cls(**AlgebraConfig.build_fields(k, n, kinds, maps))


def validate_witt(cfg: AlgebraConfig) -> list[Violation]:
    """Check the two kernel conditions; an empty list means the data is valid."""
    out: list[Violation] = []
    common = kernel_lattice(cfg.maps, cfg.k)
    for p in range(cfg.n):
        if cfg.kinds[p] is VariableKind.GROUP_ONLY:
            others = kernel_lattice([cfg.maps[q] for q in range(cfg.n) if q != p], cfg.k)
            if witness_outside_kernel(others, cfg.maps[p]) is None:
                out.append(
                    Violation("(2.6)", f"grading map {p + 1} vanishes on the common kernel of the other maps")
                )
    if not common.is_trivial():
        out.append(Violation("(2.7)", f"the grading maps share a nonzero kernel element {common.basis[0]}"))
    return sorted(out, key=lambda v: v.condition)


def apply_witt(w: WittVector, u: AlgebraElement, cfg: AlgebraConfig) -> AlgebraElement:
    if w.n != cfg.n:
        raise ConfigError(f"Witt vector has {w.n} components, config has n={cfg.n}")
    out = zero()
    for p, up in enumerate(w.coeffs):
        if up:
            out = out + multiply(up, mixed(u, p, cfg))
    return out


def witt_bracket(a: WittVector, b: WittVector, cfg: AlgebraConfig) -> WittVector:
    """Commutator of two vector fields, component ``q`` is
    ``sum_p a_p d_p(b_q) - b_p d_p(a_q)``."""
    a._check(b)
    if a.n != cfg.n:
        raise ConfigError(f"Witt vector has {a.n} components, config has n={cfg.n}")
    out = [zero() for _ in range(cfg.n)]
    for p in range(cfg.n):
        ap, bp = a.coeffs[p], b.coeffs[p]
        for q in range(cfg.n):
            if ap and b.coeffs[q]:
                out[q] = out[q] + multiply(ap, mixed(b.coeffs[q], p, cfg))
            if bp and a.coeffs[q]:
                out[q] = out[q] - multiply(bp, mixed(a.coeffs[q], p, cfg))
    return WittVector(out)


def common_constants(cfg: AlgebraConfig, monomials: Sequence[Monomial]) -> list[AlgebraElement]:
    """Basis of ``{u in span(monomials) : d_p(u) = 0 for all p}``."""
    acc = RankAccumulator()
    kernel = []
    for m in monomials:
        u = AlgebraElement({m: 1})
        image = {(p, mm): c for p in range(cfg.n) for mm, c in mixed(u, p, cfg).items()}
        rel = acc.add(image)
        if rel is not None:
            kernel.append(AlgebraElement({monomials[i]: c for i, c in rel.items()}))
    # relations are independent but not reduced; echelonize for a stable answer
    red = RankAccumulator()
    for u in kernel:
        red.add(dict(u.items()))
    return [AlgebraElement(row) for row in red.basis()]
