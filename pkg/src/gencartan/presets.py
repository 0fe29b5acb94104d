"""Named example configurations built from coordinate projections.

``example-2``  Witt type: n1 group-only slots then n2 polynomial slots,
               group Z^m, phi_p the p-th coordinate for p <= m, else 0.
``example-4``  Hamiltonian type: group Z^(k + l) carrying a standard
               symplectic form on the first k coordinates and coordinate
               grading maps on the last l, assigned through a permutation.
``example-5``  Contact type: group Z^l, coordinate grading maps assigned
               through a permutation, the contact slot on the last coordinate.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from gencartan.config import VariableKind, parse_kinds
from gencartan.contact import ContactConfig
from gencartan.errors import ConfigError
from gencartan.hamiltonian import HamiltonianConfig
from gencartan.lattice import SkewForm
from gencartan.witt import WittConfig


def example_2(n1: int = 1, n2: int = 1, m: int | None = None) -> WittConfig:
    n = n1 + n2
    if m is None:
        m = n
    if not n1 <= m <= n:
        raise ConfigError(f"need n1 <= m <= n1 + n2, got n1={n1}, m={m}, n={n}")
    kinds = "0" * n1 + "N" * n2
    maps = [[int(p == j) for j in range(m)] for p in range(n)]
    return WittConfig.build(m, n, kinds, maps)


def symplectic(k: int) -> SkewForm:
    if k % 2:
        raise ConfigError("a nondegenerate skew form needs an even dimension")
    h = k // 2
    rows = [[0] * k for _ in range(k)]
    for i in range(h):
        rows[i][h + i] = 1
        rows[h + i][i] = -1
    return SkewForm.from_rows(rows)


def _auto_permutation(n: int, ell: int, low: set[int], high: set[int]) -> list[int]:
    """0-based permutation ``iota`` with ``iota[p] < ell`` for p in low and ``>= ell`` for p in high."""
    if len(low) > ell or n - len(high) < ell or low & high:
        raise ConfigError(f"no permutation satisfies the placement constraints with l={ell}")
    order = sorted(low) + [p for p in range(n) if p not in low and p not in high] + sorted(high)
    iota = [0] * n
    for slot, p in enumerate(order):
        iota[p] = slot
    return iota


def example_4(
    k: int = 0,
    m: int = 1,
    m1: int | None = None,
    kinds: str | Sequence | None = None,
    ell: int | None = None,
    iota: Sequence[int] | None = None,
) -> HamiltonianConfig:
    n = 2 * m
    if m1 is None:
        m1 = m
    kinds = parse_kinds(kinds if kinds is not None else "0" * n)
    if len(kinds) != n:
        raise ConfigError(f"expected {n} variable kinds")
    twisted = {*range(m1), *range(m, m + m1)}
    untwisted = [p for p in range(n) if p not in twisted]

    def prime(p: int) -> int:
        return p + m if p < m else p - m

    group_only = {p for p in range(n) if kinds[p] is VariableKind.GROUP_ONLY}
    for q in untwisted:
        if q in group_only and prime(q) in group_only:
            raise ConfigError(f"untwisted pair ({q + 1},{prime(q) + 1}) needs at least one polynomial slot")
    low = {p for p in twisted if p in group_only} | {p for p in untwisted if p in group_only}
    high = {q for q in untwisted if prime(q) in group_only}
    k1 = len(twisted & group_only)
    k2 = sum(1 for q in untwisted if kinds[q] is VariableKind.POLYNOMIAL)
    s = k1 + n - 2 * m1 - k2
    if ell is None:
        ell = 2 * m1 + k2
    if not s <= ell <= 2 * m1 + k2:
        raise ConfigError(f"need {s} <= l <= {2 * m1 + k2}, got l={ell}")
    if iota is None:
        iota0 = _auto_permutation(n, ell, low, high)
    else:
        iota0 = [int(i) - 1 for i in iota]
        if sorted(iota0) != list(range(n)):
            raise ConfigError("iota must be a permutation of 1..n")
    dim = k + ell
    maps = []
    for p in range(n):
        row = [0] * dim
        if iota0[p] < ell:
            row[k + iota0[p]] = 1
        maps.append(row)
    sigmas = []
    for p in range(m1):
        sig = [0] * dim
        for j in (p, m + p):
            if iota0[j] < ell:
                sig[k + iota0[j]] = 1
        sigmas.append(sig)
    form = symplectic(k)
    gram = [[Fraction(0)] * dim for _ in range(dim)]
    for i in range(k):
        for j in range(k):
            gram[i][j] = form.gram[i][j]
    return HamiltonianConfig.build(dim, n, kinds, maps, m1=m1, form=gram, sigmas=sigmas)


def example_5(
    kinds: str | Sequence = "000",
    ell: int | None = None,
    iota: Sequence[int] | None = None,
    sigma_n: int = 0,
) -> ContactConfig:
    kinds = parse_kinds(kinds)
    n = len(kinds)
    if n % 2 == 0 or n < 3:
        raise ConfigError("contact examples need n = 2m + 1 with m > 0")
    m = (n - 1) // 2
    last = n - 1
    group_only = {p for p in range(n) if kinds[p] is VariableKind.GROUP_ONLY}
    if ell is None:
        ell = n
    if not len(group_only) <= ell <= n:
        raise ConfigError(f"need #group-only <= l <= n, got l={ell}")
    if iota is None:
        iota0 = _auto_permutation(n, ell, group_only, set())
        if iota0[last] < ell and iota0[last] != ell - 1:
            # move the contact slot onto the last low coordinate
            other = iota0.index(ell - 1)
            iota0[other], iota0[last] = iota0[last], ell - 1
    else:
        iota0 = [int(i) - 1 for i in iota]
        if sorted(iota0) != list(range(n)):
            raise ConfigError("iota must be a permutation of 1..n")
    maps = []
    for p in range(n):
        row = [0] * ell
        if iota0[p] < ell:
            row[iota0[p]] = 1
        maps.append(row)
    contact_coord = iota0[last] if iota0[last] < ell else None
    gamma2 = [contact_coord] if contact_coord is not None else []
    gamma1 = [j for j in range(ell) if j != contact_coord]
    sigmas = []
    for p in range(m):
        sig = [0] * ell
        for j in (p, m + p):
            if iota0[j] < ell:
                sig[iota0[j]] = -1
        sigmas.append(sig)
    sn = [0] * ell
    if sigma_n:
        if contact_coord is None:
            raise ConfigError("sigma_n must be 0 when gamma2 is trivial")
        sn[contact_coord] = int(sigma_n)
    return ContactConfig.build(ell, n, kinds, maps, gamma1, gamma2, sigmas, sn)


PRESETS = {"example-2": example_2, "example-4": example_4, "example-5": example_5}


def load_preset(spec: str):
    """Parse ``name`` or ``name:key=value,key=value``.

    Integer values are converted; ``kinds`` stays a string such as ``0N``;
    ``iota`` is a ``/``-separated 1-based permutation.
    """
    name, _, rest = spec.partition(":")
    if name not in PRESETS:
        raise ConfigError(f"unknown preset {name!r}; known: {', '.join(sorted(PRESETS))}")
    kwargs: dict = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        if not eq:
            raise ConfigError(f"bad preset parameter {item!r}")
        key = key.strip()
        val = val.strip()
        if key == "kinds":
            kwargs[key] = val
        elif key == "iota":
            kwargs[key] = [int(x) for x in val.split("/")]
        else:
            try:
                kwargs[key] = int(val)
            except ValueError:
                raise ConfigError(f"preset parameter {key} must be an integer") from None
    try:
        return PRESETS[name](**kwargs)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for {name}: {exc}") from None
