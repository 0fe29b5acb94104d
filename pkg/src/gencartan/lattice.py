"""The grading group Z^k, its homomorphisms to Q, skew forms, and sublattices.

Group elements are plain integer tuples.  A grading map is given by its
values on the standard generators, so evaluation is a dot product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gencartan.errors import ConfigError
from gencartan.linalg import hermite_rows, integer_kernel

GroupElement = tuple[int, ...]
GradingMap = tuple[Fraction, ...]


def group_element(coords: Iterable[int]) -> GroupElement:
    return tuple(int(c) for c in coords)


def grading_map(values: Iterable) -> GradingMap:
    return tuple(Fraction(v) for v in values)


def zero(k: int) -> GroupElement:
    return (0,) * k


def add(a: GroupElement, b: GroupElement) -> GroupElement:
    return tuple(x + y for x, y in zip(a, b))


def neg(a: GroupElement) -> GroupElement:
    return tuple(-x for x in a)


def sub(a: GroupElement, b: GroupElement) -> GroupElement:
    return tuple(x - y for x, y in zip(a, b))


def unit(k: int, j: int, value: int = 1) -> GroupElement:
    """``value`` placed in coordinate ``j`` (0-based), zero elsewhere."""
    return tuple(value if i == j else 0 for i in range(k))


def eval_grading_map(phi: Sequence[Fraction], alpha: Sequence[int]) -> Fraction:
    if len(phi) != len(alpha):
        raise ConfigError(f"grading map has length {len(phi)}, group element has length {len(alpha)}")
    return sum((Fraction(a) * v for a, v in zip(alpha, phi)), Fraction(0))


def is_zero_map(phi: Sequence[Fraction]) -> bool:
    return not any(phi)


@dataclass(frozen=True)
class SkewForm:
    """Skew-symmetric Z-bilinear form ``(a, b) -> a^T G b`` on Z^k."""

    gram: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        k = len(self.gram)
        for i, row in enumerate(self.gram):
            if len(row) != k:
                raise ConfigError("skew form must be a square matrix")
            for j in range(k):
                if row[j] != -self.gram[j][i]:
                    raise ConfigError(f"skew form is not skew-symmetric at ({i + 1},{j + 1})")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable]) -> SkewForm:
        return cls(tuple(tuple(Fraction(x) for x in row) for row in rows))

    @classmethod
    def zero(cls, k: int) -> SkewForm:
        return cls(tuple((Fraction(0),) * k for _ in range(k)))

    @property
    def k(self) -> int:
        return len(self.gram)

    def __call__(self, a: Sequence[int], b: Sequence[int]) -> Fraction:
        total = Fraction(0)
        for i, ai in enumerate(a):
            if ai:
                row = self.gram[i]
                for j, bj in enumerate(b):
                    if bj:
                        total += ai * row[j] * bj
        return total

    def is_zero(self) -> bool:
        return not any(any(row) for row in self.gram)


@dataclass(frozen=True)
class IntegerLattice:
    """Sublattice of Z^dim given by a basis kept in Hermite normal form.

    Keeping the canonical basis makes lattice equality structural.
    """

    dim: int
    basis: tuple[GroupElement, ...]

    @classmethod
    def span(cls, dim: int, vectors: Iterable[Sequence[int]]) -> IntegerLattice:
        return cls(dim, tuple(hermite_rows([list(v) for v in vectors], dim)))

    @classmethod
    def full(cls, dim: int) -> IntegerLattice:
        return cls.span(dim, [unit(dim, j) for j in range(dim)])

    @classmethod
    def trivial(cls, dim: int) -> IntegerLattice:
        return cls(dim, ())

    @property
    def rank(self) -> int:
        return len(self.basis)

    def is_trivial(self) -> bool:
        return not self.basis

    def contains(self, v: Sequence[int]) -> bool:
        if len(v) != self.dim:
            raise ConfigError(f"element of length {len(v)} in lattice of dimension {self.dim}")
        return hermite_rows([*self.basis, tuple(v)], self.dim) == list(self.basis)


def kernel_lattice(maps: Sequence[Sequence[Fraction]], k: int) -> IntegerLattice:
    """All integer vectors on which every map in ``maps`` vanishes."""
    for phi in maps:
        if len(phi) != k:
            raise ConfigError(f"grading map of length {len(phi)} in rank-{k} group")
    if not maps:
        return IntegerLattice.full(k)
    return IntegerLattice(k, tuple(integer_kernel(maps, k)))


def radical_lattice(form: SkewForm) -> IntegerLattice:
    """``{g : form(g, b) = 0 for all b}``."""
    k = form.k
    if k == 0:
        return IntegerLattice.trivial(0)
    return IntegerLattice(k, tuple(integer_kernel(form.gram, k)))


def lattice_intersect(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    if a.dim != b.dim:
        raise ConfigError(f"lattices of dimensions {a.dim} and {b.dim}")
    k = a.dim
    if a.is_trivial() or b.is_trivial():
        return IntegerLattice.trivial(k)
    ra, rb = a.rank, b.rank
    # integer solutions of A x = B y, columns of A, B are the bases
    rows = [[a.basis[i][j] for i in range(ra)] + [-b.basis[i][j] for i in range(rb)] for j in range(k)]
    sols = integer_kernel(rows, ra + rb)
    vecs = [tuple(sum(s[i] * a.basis[i][j] for i in range(ra)) for j in range(k)) for s in sols]
    return IntegerLattice.span(k, vecs)


def witness_outside_kernel(inside: IntegerLattice, avoid: Sequence[Fraction]) -> GroupElement | None:
    """A lattice element on which ``avoid`` is nonzero, or None.

    A homomorphism vanishing on every basis vector vanishes on the lattice,
    so scanning the basis is enough.
    """
    if len(avoid) != inside.dim:
        raise ConfigError("grading map and lattice dimensions differ")
    for v in inside.basis:
        if eval_grading_map(avoid, v) != 0:
            return v
    return None


def map_on_lattice_is_zero(lat: IntegerLattice, phi: Sequence[Fraction]) -> bool:
    return witness_outside_kernel(lat, phi) is None
