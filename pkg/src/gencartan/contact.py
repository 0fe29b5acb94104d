"""Contact-type bracket.

With n = 2m + 1 derivations the last one plays the role of the contact
direction.  The group splits along a generator partition into gamma1 (the
kernel of the last grading map) and gamma2 (the common kernel of the others).
Each pair (p, m+p) carries a twist sigma_p; the contact direction carries
sigma_n in gamma2.  ``E`` below is the weighted Euler operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from gencartan.algebra import AlgebraElement, Monomial, multiply, shift, zero
from gencartan.config import AlgebraConfig
from gencartan.derivations import contact_euler, euler_weight, mixed
from gencartan.errors import ConfigError, Violation
from gencartan.hamiltonian import HamiltonianConfig
from gencartan.lattice import (
    GroupElement,
    IntegerLattice,
    eval_grading_map,
    kernel_lattice,
    lattice_intersect,
    unit,
    witness_outside_kernel,
)


@dataclass(frozen=True)
class ContactConfig(AlgebraConfig):
    gamma1: tuple[int, ...] = ()  # 0-based generator indices spanning gamma1
    gamma2: tuple[int, ...] = ()
    sigmas: tuple[GroupElement, ...] = ()  # one per pair (p, m+p)
    sigma_n: GroupElement = ()

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n % 2 == 0:
            raise ConfigError(f"contact configs need an odd number of derivations, got n={self.n}")
        if len(self.sigmas) != self.m:
            raise ConfigError(f"expected {self.m} sigma elements (one per pair), got {len(self.sigmas)}")
        for s in (*self.sigmas, self.sigma_n):
            if len(s) != self.k:
                raise ConfigError(f"sigma elements need {self.k} coordinates")
        for j in (*self.gamma1, *self.gamma2):
            if not 0 <= j < self.k:
                raise ConfigError(f"generator index {j + 1} out of range for k={self.k}")

    @classmethod
    def build(cls, k, n, kinds, maps, gamma1, gamma2, sigmas, sigma_n=None) -> ContactConfig:
        fields = AlgebraConfig.build_fields(k, n, kinds, maps)
        return cls(
            **fields,
            gamma1=tuple(int(j) for j in gamma1),
            gamma2=tuple(int(j) for j in gamma2),
            sigmas=tuple(tuple(int(x) for x in s) for s in sigmas),
            sigma_n=tuple(int(x) for x in sigma_n) if sigma_n is not None else (0,) * int(k),
        )

    @property
    def m(self) -> int:
        return (self.n - 1) // 2

    @property
    def last(self) -> int:
        return self.n - 1

    def prime(self, p: int) -> int:
        return p + self.m if p < self.m else p - self.m

    @cached_property
    def mho1(self) -> tuple[int, ...]:
        return tuple(p for p in range(2 * self.m) if not self.map_is_zero(p))

    @cached_property
    def mho2(self) -> tuple[int, ...]:
        return tuple(p for p in range(2 * self.m) if self.map_is_zero(p))

    @cached_property
    def gamma1_lattice(self) -> IntegerLattice:
        return IntegerLattice.span(self.k, [unit(self.k, j) for j in self.gamma1])

    @cached_property
    def gamma2_lattice(self) -> IntegerLattice:
        return IntegerLattice.span(self.k, [unit(self.k, j) for j in self.gamma2])


def validate_contact(cfg: ContactConfig) -> list[Violation]:
    out: list[Violation] = []
    m, k, last = cfg.m, cfg.k, cfg.last
    if m < 1:
        out.append(Violation("(5.1)", "need n = 2m + 1 with m > 0"))
    for p in range(cfg.n):
        if cfg.map_is_zero(p) and not cfg.is_polynomial(p):
            out.append(Violation("(5.1)", f"index {p + 1}: zero grading map and no polynomial variable"))

    g1, g2 = set(cfg.gamma1), set(cfg.gamma2)
    if g1 & g2 or g1 | g2 != set(range(k)) or len(cfg.gamma1) + len(cfg.gamma2) != k:
        out.append(Violation("(5.2)", "gamma1/gamma2 generators must partition the generators"))
    for j in cfg.gamma1:
        if cfg.maps[last][j] != 0:
            out.append(Violation("(5.2)", f"generator {j + 1} is in gamma1 but the last grading map is nonzero on it"))
    for j in cfg.gamma2:
        for p in range(2 * m):
            if cfg.maps[p][j] != 0:
                out.append(Violation("(5.2)", f"generator {j + 1} is in gamma2 but grading map {p + 1} is nonzero on it"))
                break
    if cfg.gamma2:
        restricted = [[cfg.maps[last][j] for j in cfg.gamma2]]
        if not kernel_lattice(restricted, len(cfg.gamma2)).is_trivial():
            out.append(Violation("(5.2)", "the last grading map is not injective on gamma2"))
    if cfg.gamma1:
        restricted = [[cfg.maps[p][j] for j in cfg.gamma1] for p in range(2 * m)]
        if not kernel_lattice(restricted, len(cfg.gamma1)).is_trivial():
            out.append(Violation("(5.3)", "the first 2m grading maps share a nonzero kernel element on gamma1"))

    g1lat = cfg.gamma1_lattice
    for q in cfg.mho1:
        others = kernel_lattice([cfg.maps[p] for p in range(2 * m) if p != q], k)
        if witness_outside_kernel(lattice_intersect(g1lat, others), cfg.maps[q]) is None:
            out.append(Violation("(5.5)", f"grading map {q + 1} vanishes on gamma1 ∩ common kernel of the others"))

    for p in range(m):
        s = cfg.sigmas[p]
        members = [q for q in (p, m + p) if q in cfg.mho1]
        if not members:
            if any(s):
                out.append(Violation("(5.9)", f"pair ({p + 1},{m + p + 1}) has zero grading maps, sigma must be 0"))
            continue
        if not g1lat.contains(s):
            out.append(Violation("(5.6)", f"sigma_{p + 1} is not in gamma1"))
        for r in range(2 * m):
            if r not in (p, m + p) and eval_grading_map(cfg.maps[r], s) != 0:
                out.append(Violation("(5.6)", f"sigma_{p + 1} is not in the kernel of grading map {r + 1}"))
        for q in members:
            val = eval_grading_map(cfg.maps[q], s)
            if val == 0:
                out.append(Violation("(5.6)", f"sigma_{p + 1} lies in the kernel of grading map {q + 1}"))
            elif val != -1:
                out.append(Violation("(5.8)", f"grading map {q + 1} takes value {val} on sigma_{p + 1}, expected -1"))
    if not cfg.gamma2_lattice.contains(cfg.sigma_n):
        out.append(Violation("(5.7)", "sigma_n is not in gamma2"))
    return out


def theta(alpha: Sequence[int], exps: Sequence[int], cfg: ContactConfig) -> Fraction:
    return 2 - euler_weight(Monomial(tuple(alpha), tuple(exps)), cfg)


def contact_bracket(u: AlgebraElement, v: AlgebraElement, cfg: ContactConfig) -> AlgebraElement:
    if not u or not v:
        return zero()
    m, last = cfg.m, cfg.last
    out = zero()
    for p in range(m):
        q = m + p
        inner = multiply(mixed(u, p, cfg), mixed(v, q, cfg)) - multiply(mixed(u, q, cfg), mixed(v, p, cfg))
        out = out + shift(inner, cfg.sigmas[p])
    two_minus_u = u.scale(2) - contact_euler(u, cfg)
    two_minus_v = v.scale(2) - contact_euler(v, cfg)
    contact = multiply(two_minus_u, mixed(v, last, cfg)) - multiply(mixed(u, last, cfg), two_minus_v)
    return out + shift(contact, cfg.sigma_n)


def bracket_with_one(target: Monomial, cfg: ContactConfig) -> AlgebraElement:
    """Closed form of ``[1, x^{gamma, l}]``."""
    return contact_bracket_with_constant((0,) * cfg.k, target, cfg)


def contact_bracket_with_constant(kappa: Sequence[int], target: Monomial, cfg: ContactConfig) -> AlgebraElement:
    """Closed form of ``[x^{kappa}, x^{gamma, l}]`` for ``kappa`` in gamma2."""
    kappa = tuple(kappa)
    if not cfg.gamma2_lattice.contains(kappa):
        raise ValueError(f"{kappa} is not in gamma2")
    last = cfg.last
    gamma, l = target.alpha, target.exps
    phin = cfg.maps[last]
    head = Monomial(tuple(g + a + s for g, a, s in zip(gamma, kappa, cfg.sigma_n)), l)
    c0 = 2 * eval_grading_map(phin, gamma) - eval_grading_map(phin, kappa) * theta(gamma, l, cfg)
    terms = {head: c0}
    low = head.lower(last)
    if low is not None:
        terms[low] = Fraction(2 * l[last])
    return AlgebraElement(terms)


def restriction_config(cfg: ContactConfig) -> HamiltonianConfig:
    """Hamiltonian-type data the contact bracket reduces to on ``ker d_n``."""
    two_m = 2 * cfg.m
    return HamiltonianConfig(
        k=cfg.k,
        n=two_m,
        kinds=cfg.kinds[:two_m],
        maps=cfg.maps[:two_m],
        m1=cfg.m,
        form=None,
        sigmas=cfg.sigmas,
    )


def drop_last(u: AlgebraElement) -> AlgebraElement:
    """Forget the (zero) last exponent, for elements killed by ``d_n``."""
    if any(m.exps[-1] for m in u.monomials()):
        raise ValueError("element has a nonzero last exponent")
    return AlgebraElement({Monomial(m.alpha, m.exps[:-1]): c for m, c in u.items()})


def append_last(u: AlgebraElement) -> AlgebraElement:
    return AlgebraElement({Monomial(m.alpha, m.exps + (0,)): c for m, c in u.items()})
