"""Special-type algebra spanned by the fields D_{p,q}(u).

The group is Z^n with coordinate grading maps; a coordinate whose factor
group is trivial is modelled by a zero grading map and a coordinate that
every group element must leave at 0.  ``D_p`` denotes the scaled derivation
``x^{(sigma_p) e_p} d_p`` and

    D_{p,q}(u) = x^rho (D_q(u) D_p - D_p(u) D_q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from gencartan.algebra import AlgebraElement, Monomial, group_monomial, multiply, shift, zero
from gencartan.config import AlgebraConfig, VariableKind
from gencartan.derivations import mixed
from gencartan.errors import ConfigError, Violation
from gencartan.lattice import GroupElement, add, unit
from gencartan.witt import WittVector, witt_bracket

Pair = tuple[int, int]


@dataclass(frozen=True)
class SpecialConfig(AlgebraConfig):
    delta_nonzero: tuple[bool, ...] = ()
    rho: GroupElement = ()
    sigma: GroupElement = ()

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.k != self.n:
            raise ConfigError("special-type configs use Z^n with one coordinate per derivation")
        if len(self.delta_nonzero) != self.n:
            raise ConfigError(f"expected {self.n} delta flags")
        for name, g in (("rho", self.rho), ("sigma", self.sigma)):
            if len(g) != self.n:
                raise ConfigError(f"{name} must have {self.n} coordinates")
        for p in range(self.n):
            expected = tuple(Fraction(int(j == p and self.delta_nonzero[p])) for j in range(self.n))
            if self.maps[p] != expected:
                raise ConfigError(f"grading map {p + 1} must be the coordinate projection (or zero)")

    @classmethod
    def build(cls, n: int, kinds, delta_nonzero: Sequence[bool], rho=None, sigma=None) -> SpecialConfig:
        n = int(n)
        dn = tuple(bool(x) for x in delta_nonzero)
        maps = [[int(j == p and dn[p]) for j in range(n)] for p in range(n)]
        fields = AlgebraConfig.build_fields(n, n, kinds, maps)
        return cls(
            **fields,
            delta_nonzero=dn,
            rho=tuple(rho) if rho is not None else (0,) * n,
            sigma=tuple(sigma) if sigma is not None else (0,) * n,
        )

    def check_monomial(self, alpha, exps) -> None:
        super().check_monomial(alpha, exps)
        for p, a in enumerate(alpha):
            if a and not self.delta_nonzero[p]:
                raise ConfigError(f"coordinate {p + 1} of the group part must be 0 (trivial factor)")

    def sigma_unit(self, p: int) -> GroupElement:
        return unit(self.n, p, self.sigma[p])

    def sigma_pair(self, p: int, q: int) -> GroupElement:
        return add(self.sigma_unit(p), self.sigma_unit(q))

    @cached_property
    def _scale_monomials(self) -> tuple[AlgebraElement, ...]:
        return tuple(group_monomial(self.sigma_unit(p), self.n) for p in range(self.n))

    def scale_monomial(self, p: int) -> AlgebraElement:
        return self._scale_monomials[p]


def validate_special(cfg: SpecialConfig) -> list[Violation]:
    out: list[Violation] = []
    if cfg.n < 2:
        out.append(Violation("n>=2", "special-type algebras need at least two derivations"))
    for p in range(cfg.n):
        if cfg.kinds[p] is VariableKind.GROUP_ONLY and not cfg.delta_nonzero[p]:
            out.append(Violation("(3.5)", f"index {p + 1} has a trivial group factor and no polynomial variable"))
    for name, g in (("rho", cfg.rho), ("sigma", cfg.sigma)):
        for p in range(cfg.n):
            if g[p] and not cfg.delta_nonzero[p]:
                out.append(Violation("group", f"{name} has a nonzero coordinate {p + 1} in a trivial factor"))
    return out


def scaled(u: AlgebraElement, p: int, cfg: SpecialConfig) -> AlgebraElement:
    return shift(mixed(u, p, cfg), cfg.sigma_unit(p))


def special_generator(p: int, q: int, u: AlgebraElement, cfg: SpecialConfig) -> WittVector:
    if p == q:
        raise ValueError("D_{p,q} needs two distinct indices")
    if not (0 <= p < cfg.n and 0 <= q < cfg.n):
        raise ValueError(f"indices ({p + 1},{q + 1}) out of range for n={cfg.n}")
    coeffs = [zero() for _ in range(cfg.n)]
    coeffs[p] = shift(scaled(u, q, cfg), add(cfg.rho, cfg.sigma_unit(p)))
    coeffs[q] = -shift(scaled(u, p, cfg), add(cfg.rho, cfg.sigma_unit(q)))
    return WittVector(coeffs)


def special_bracket_direct(a: WittVector, b: WittVector, cfg: SpecialConfig) -> WittVector:
    return witt_bracket(a, b, cfg)


def special_bracket_expansion(
    p: int, q: int, r: int, s: int, u: AlgebraElement, v: AlgebraElement, cfg: SpecialConfig
) -> list[tuple[Pair, AlgebraElement]]:
    """Four-term expansion of ``[D_{p,q}(u), D_{r,s}(v)]`` as generator arguments."""
    if p == q or r == s:
        raise ValueError("D_{p,q} needs two distinct indices")
    d = {i: scaled(u, i, cfg) for i in (p, q)}
    e = {i: scaled(v, i, cfg) for i in (r, s)}

    def arg(du: AlgebraElement, dv: AlgebraElement) -> AlgebraElement:
        return shift(multiply(du, dv), cfg.rho)

    return [
        ((p, s), arg(d[q], e[r])),
        ((q, r), arg(d[p], e[s])),
        ((p, r), -arg(d[q], e[s])),
        ((q, s), -arg(d[p], e[r])),
    ]


def realize(terms, cfg: SpecialConfig) -> WittVector:
    """Sum of ``D_{i,j}(w)`` over ``((i, j), w)``; pairs with ``i == j`` contribute 0."""
    out = WittVector.zero(cfg.n)
    for (i, j), w in terms:
        if i != j and w:
            out = out + special_generator(i, j, w, cfg)
    return out


def monomial_bracket(
    a: Monomial, b: Monomial, p: int, q: int, cfg: SpecialConfig
) -> list[tuple[Pair, Monomial, Fraction]]:
    """Closed form of ``[D_{p,q}(x^a), D_{p,q}(x^b)]`` as weighted generator monomials."""
    if p == q:
        raise ValueError("D_{p,q} needs two distinct indices")
    al, be = a.alpha, b.alpha
    i, j = a.exps, b.exps
    base = Monomial(
        tuple(x + y + z + w for x, y, z, w in zip(al, be, cfg.rho, cfg.sigma_pair(p, q))),
        tuple(x + y for x, y in zip(i, j)),
    )
    cands = [
        (al[q] * be[p] - al[p] * be[q], base),
        (i[q] * j[p] - i[p] * j[q], _lower(_lower(base, p), q)),
        (al[q] * j[p] - be[q] * i[p], _lower(base, p)),
        (be[p] * i[q] - al[p] * j[q], _lower(base, q)),
    ]
    return [((p, q), m, Fraction(c)) for c, m in cands if c and m is not None]


def realize_monomials(terms, cfg: SpecialConfig) -> WittVector:
    return realize([(pair, AlgebraElement({m: c})) for pair, m, c in terms], cfg)


def iota_pair(p: int, q: int, cfg: SpecialConfig) -> GroupElement:
    """``(rho_p + sigma_p) e_p + (rho_q + sigma_q) e_q``."""
    return add(
        unit(cfg.n, p, cfg.rho[p] + cfg.sigma[p]),
        unit(cfg.n, q, cfg.rho[q] + cfg.sigma[q]),
    )


def restrict_pair(gamma: Sequence[int], p: int, q: int) -> GroupElement:
    """Keep coordinates ``p`` and ``q`` of ``gamma``, zero the rest."""
    return tuple(g if j in (p, q) else 0 for j, g in enumerate(gamma))


def _lower(m: Monomial | None, p: int) -> Monomial | None:
    return None if m is None else m.lower(p)
