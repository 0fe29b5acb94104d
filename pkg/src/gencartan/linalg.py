"""Exact linear algebra over Z and Q.

Integer routines work on plain lists of ints; rational inputs are scaled
row-by-row to integers first (scaling a row never changes its kernel).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Hashable, Iterable, Mapping, Sequence

Vector = tuple[int, ...]


def clear_denominators(row: Sequence[Fraction | int]) -> list[int]:
    """Scale a rational row by the lcm of its denominators."""
    den = 1
    for x in row:
        den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in row]


def hermite_rows(vectors: Iterable[Sequence[int]], dim: int) -> list[Vector]:
    """Row-style Hermite normal form of the lattice spanned by ``vectors``.

    Returns the nonzero rows: echelon form, positive pivots, entries above
    each pivot reduced into ``[0, pivot)``.  Two families span the same
    lattice iff their Hermite forms agree.
    """
    rows = [list(v) for v in vectors if any(v)]
    for v in rows:
        if len(v) != dim:
            raise ValueError(f"expected vectors of length {dim}, got {len(v)}")
    out: list[list[int]] = []
    col = 0
    while rows and col < dim:
        active = [r for r in rows if r[col] != 0]
        rest = [r for r in rows if r[col] == 0]
        if not active:
            col += 1
            continue
        # Euclid on column `col` across the active rows
        while len(active) > 1:
            active.sort(key=lambda r: abs(r[col]))
            piv = active[0]
            nxt = [piv]
            for r in active[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            active = nxt
        piv = active[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        rows = rest
        col += 1
    # reduce entries above pivots
    for i, row in enumerate(out):
        pc = next(j for j, a in enumerate(row) if a != 0)
        for h in range(i):
            q = out[h][pc] // row[pc]
            if q:
                out[h] = [a - q * b for a, b in zip(out[h], row)]
    return [tuple(r) for r in out]


def integer_kernel(rows: Sequence[Sequence[Fraction | int]], dim: int) -> list[Vector]:
    """Basis (in Hermite form) of ``{x in Z^dim : row . x = 0 for every row}``.

    Unimodular column operations bring the matrix to column echelon form;
    the transform's trailing columns then span the integer kernel, which is
    saturated by construction.
    """
    a = [clear_denominators(r) for r in rows]
    for r in a:
        if len(r) != dim:
            raise ValueError(f"expected rows of length {dim}, got {len(r)}")
    u = [[int(i == j) for j in range(dim)] for i in range(dim)]  # u[col] is a column of U

    def col_axpy(dst: int, src: int, q: int) -> None:
        for r in a:
            r[dst] -= q * r[src]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]

    def col_swap(i: int, j: int) -> None:
        for r in a:
            r[i], r[j] = r[j], r[i]
        u[i], u[j] = u[j], u[i]

    start = 0
    for r in a:
        if start >= dim:
            break
        while True:
            nz = [j for j in range(start, dim) if r[j] != 0]
            if len(nz) <= 1:
                break
            jmin = min(nz, key=lambda j: abs(r[j]))
            for j in nz:
                if j != jmin:
                    col_axpy(j, jmin, r[j] // r[jmin])
        if nz:
            col_swap(start, nz[0])
            start += 1
    return hermite_rows(u[start:], dim)


def rational_rank(rows: Sequence[Sequence[Fraction | int]]) -> int:
    rows = [clear_denominators(r) for r in rows]
    return len(hermite_rows(rows, len(rows[0]))) if rows else 0


class RankAccumulator:
    """Incremental fraction-free echelon basis of sparse rational vectors.

    Vectors are mappings ``key -> coefficient`` with sortable keys; the pivot
    of a row is its smallest key.  Stored rows are primitive integer vectors.
    Each stored row also carries its expression in terms of the inputs, so a
    dependent input yields the linear relation that killed it.
    """

    def __init__(self) -> None:
        self._pivots: dict[Hashable, tuple[dict, dict[int, Fraction]]] = {}
        self._count = 0

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def __len__(self) -> int:
        return self._count

    def basis(self) -> list[dict]:
        """Reduced rows in pivot order (integer coefficients)."""
        return [dict(self._pivots[k][0]) for k in sorted(self._pivots)]

    def reduce(self, vec: Mapping) -> tuple[dict, dict[int, Fraction], int]:
        return self._reduce(vec, {})

    def _reduce(self, vec: Mapping, combo: dict[int, Fraction]) -> tuple[dict, dict[int, Fraction], int]:
        items = [(k, Fraction(c)) for k, c in vec.items() if c]
        den = 1
        for _, c in items:
            den = lcm(den, c.denominator)
        v = {k: int(c * den) for k, c in items}
        combo = {t: c * den for t, c in combo.items()}
        while v:
            lead = min(v)
            row = self._pivots.get(lead)
            if row is None:
                return v, combo, lead
            rvec, rcombo = row
            a, b = rvec[lead], v[lead]
            new = {k: a * c for k, c in v.items()}
            for k, c in rvec.items():
                x = new.get(k, 0) - b * c
                if x:
                    new[k] = x
                else:
                    new.pop(k, None)
            combo = {t: a * c for t, c in combo.items()}
            for t, c in rcombo.items():
                combo[t] = combo.get(t, 0) - b * c
            combo = {t: c for t, c in combo.items() if c}
            g = 0
            for c in new.values():
                g = gcd(g, c)
            if g > 1:
                new = {k: c // g for k, c in new.items()}
                combo = {t: c / g for t, c in combo.items()}
            v = new
        return v, combo, None

    def add(self, vec: Mapping) -> dict[int, Fraction] | None:
        """Insert ``vec`` as input number ``len(self)``.

        Returns ``None`` when it raised the rank, otherwise the relation
        ``{input index: coefficient}`` with ``sum c_i * input_i == 0``.
        """
        tag = self._count
        self._count += 1
        v, combo, lead = self._reduce(vec, {tag: Fraction(1)})
        if lead is None:
            return combo
        if v[lead] < 0:
            v = {k: -c for k, c in v.items()}
            combo = {t: -c for t, c in combo.items()}
        self._pivots[lead] = (v, combo)
        return None

    def contains(self, vec: Mapping) -> bool:
        v, _, _ = self._reduce(vec, {})
        return not v


def exact_rank_accumulate(vectors: Iterable[Mapping]) -> tuple[list[dict], int]:
    acc = RankAccumulator()
    for v in vectors:
        acc.add(v)
    return acc.basis(), acc.rank
