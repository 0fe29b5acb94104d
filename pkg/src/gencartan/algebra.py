"""The commutative algebra spanned by monomials x^{alpha, i}.

``alpha`` ranges over Z^k and ``i`` over N^n (with some coordinates pinned to
zero by the configuration).  Multiplication adds both components.  Elements
are sparse maps from monomials to nonzero Fractions, normalized eagerly so
that equality is structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping, NamedTuple, Union

Scalar = Union[int, Fraction]


class Monomial(NamedTuple):
    alpha: tuple[int, ...]
    exps: tuple[int, ...]

    def __mul__(self, other: Monomial) -> Monomial:  # type: ignore[override]
        return Monomial(
            tuple(a + b for a, b in zip(self.alpha, other.alpha)),
            tuple(a + b for a, b in zip(self.exps, other.exps)),
        )

    def shift(self, gamma: Iterable[int]) -> Monomial:
        return Monomial(tuple(a + g for a, g in zip(self.alpha, gamma)), self.exps)

    def lower(self, p: int, by: int = 1) -> Monomial | None:
        """Exponent ``p`` (0-based) decreased by ``by``; None below zero."""
        e = self.exps[p] - by
        if e < 0:
            return None
        return Monomial(self.alpha, self.exps[:p] + (e,) + self.exps[p + 1 :])

    def __str__(self) -> str:
        return format_monomial(self)


def total_degree(exps: Iterable[int]) -> int:
    return sum(exps)


def format_monomial(m: Monomial) -> str:
    return "x[(" + ",".join(map(str, m.alpha)) + ");(" + ",".join(map(str, m.exps)) + ")]"


def format_coeff(c: Fraction) -> str:
    return f"({c})"


class AlgebraElement:
    """Finite linear combination of monomials with rational coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Scalar] | Iterable[tuple[Monomial, Scalar]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        out: dict[Monomial, Fraction] = {}
        for m, c in items:
            m = m if isinstance(m, Monomial) else Monomial(*m)
            out[m] = out.get(m, Fraction(0)) + Fraction(c)
        self._terms = {m: c for m, c in out.items() if c}
        self._hash: int | None = None

    @classmethod
    def _wrap(cls, terms: dict[Monomial, Fraction]) -> AlgebraElement:
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # container protocol

    def items(self):
        return self._terms.items()

    def monomials(self) -> Iterator[Monomial]:
        return iter(self._terms)

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def sorted_items(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, AlgebraElement):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # arithmetic

    def __add__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        if not other._terms:
            return self
        out = dict(self._terms)
        for m, c in other._terms.items():
            x = out.get(m, 0) + c
            if x:
                out[m] = x
            else:
                out.pop(m, None)
        return AlgebraElement._wrap(out)

    def __neg__(self) -> AlgebraElement:
        return AlgebraElement._wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: AlgebraElement) -> AlgebraElement:
        if not isinstance(other, AlgebraElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Scalar) -> AlgebraElement:
        c = Fraction(c)
        if not c:
            return AlgebraElement._wrap({})
        return AlgebraElement._wrap({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{format_coeff(c)}*{format_monomial(m)}" for m, c in self.sorted_items())

    def __repr__(self) -> str:
        return f"AlgebraElement({self})"


def multiply(u: AlgebraElement, v: AlgebraElement) -> AlgebraElement:
    if not u or not v:
        return AlgebraElement._wrap({})
    mu, mv = next(iter(u._terms)), next(iter(v._terms))
    if len(mu.alpha) != len(mv.alpha) or len(mu.exps) != len(mv.exps):
        raise ValueError("operands belong to algebras of different shape")
    out: dict[Monomial, Fraction] = {}
    for a, ca in u._terms.items():
        for b, cb in v._terms.items():
            m = a * b
            x = out.get(m, 0) + ca * cb
            if x:
                out[m] = x
            else:
                out.pop(m, None)
    return AlgebraElement._wrap(out)


def monomial(alpha: Iterable[int], exps: Iterable[int], coeff: Scalar = 1) -> AlgebraElement:
    return AlgebraElement({Monomial(tuple(alpha), tuple(exps)): coeff})


def one(k: int, n: int) -> AlgebraElement:
    return monomial((0,) * k, (0,) * n)


def zero() -> AlgebraElement:
    return AlgebraElement._wrap({})


def group_monomial(alpha: Iterable[int], n: int, coeff: Scalar = 1) -> AlgebraElement:
    """``x^{alpha, 0}``, the pure group-algebra monomial."""
    return monomial(alpha, (0,) * n, coeff)


def map_terms(u: AlgebraElement, fn) -> AlgebraElement:
    """Linear extension of ``fn: Monomial -> iterable of (Monomial, Fraction)``."""
    out: dict[Monomial, Fraction] = {}
    for m, c in u.items():
        for m2, c2 in fn(m):
            if c2:
                x = out.get(m2, 0) + c * c2
                if x:
                    out[m2] = x
                else:
                    out.pop(m2, None)
    return AlgebraElement._wrap(out)


def shift(u: AlgebraElement, gamma: Iterable[int]) -> AlgebraElement:
    """Multiplication by ``x^{gamma, 0}``."""
    gamma = tuple(gamma)
    if not any(gamma):
        return u
    return AlgebraElement._wrap({m.shift(gamma): c for m, c in u.items()})


def grade_split(u: AlgebraElement) -> dict[tuple[int, ...], AlgebraElement]:
    """Decompose ``u`` into its homogeneous parts for the Z^k grading."""
    parts: dict[tuple[int, ...], dict[Monomial, Fraction]] = {}
    for m, c in u.items():
        parts.setdefault(m.alpha, {})[m] = c
    return {a: AlgebraElement._wrap(t) for a, t in parts.items()}
