"""Grading, down-grading and mixed derivations of the monomial algebra.

``Grading(p)`` scales x^{a,i} by phi_p(a), ``DownGrading(p)`` sends it to
i_p x^{a, i - e_p}, ``Mixed(p)`` is their sum.  ``Scaled(p)`` is Mixed(p)
followed by multiplication with the fixed group monomial of a Special-type
configuration, and ``ContactEuler`` is the weighted degree operator of a
Contact-type configuration.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from gencartan.algebra import AlgebraElement, Monomial, map_terms, multiply
from gencartan.errors import ConfigError


class Tag(Enum):
    GRADING = "grading"
    DOWN = "down"
    MIXED = "mixed"
    SCALED = "scaled"
    CONTACT_EULER = "euler"


@dataclass(frozen=True)
class DerivationKind:
    tag: Tag
    p: int | None = None

    def __str__(self) -> str:
        return self.tag.value if self.p is None else f"{self.tag.value}({self.p + 1})"


def Grading(p: int) -> DerivationKind:
    return DerivationKind(Tag.GRADING, p)


def DownGrading(p: int) -> DerivationKind:
    return DerivationKind(Tag.DOWN, p)


def Mixed(p: int) -> DerivationKind:
    return DerivationKind(Tag.MIXED, p)


def Scaled(p: int) -> DerivationKind:
    return DerivationKind(Tag.SCALED, p)


ContactEuler = DerivationKind(Tag.CONTACT_EULER)


def grading(u: AlgebraElement, p: int, cfg) -> AlgebraElement:
    phi = cfg.maps[p]
    return map_terms(u, lambda m: ((m, _dot(phi, m.alpha)),))


def down(u: AlgebraElement, p: int) -> AlgebraElement:
    def f(m: Monomial):
        i = m.exps[p]
        if i:
            yield m.lower(p), Fraction(i)

    return map_terms(u, f)


def mixed(u: AlgebraElement, p: int, cfg) -> AlgebraElement:
    phi = cfg.maps[p]

    def f(m: Monomial):
        yield m, _dot(phi, m.alpha)
        i = m.exps[p]
        if i:
            yield m.lower(p), Fraction(i)

    return map_terms(u, f)


def euler_weight(m: Monomial, cfg) -> Fraction:
    """Eigenvalue of the contact Euler operator on the monomial ``m``."""
    w = Fraction(0)
    for p in cfg.mho1:
        w += _dot(cfg.maps[p], m.alpha)
    for q in cfg.mho2:
        w += m.exps[q]
    return w


def contact_euler(u: AlgebraElement, cfg) -> AlgebraElement:
    return map_terms(u, lambda m: ((m, euler_weight(m, cfg)),))


def apply_derivation(d: DerivationKind, u: AlgebraElement, cfg) -> AlgebraElement:
    if d.tag is Tag.CONTACT_EULER:
        if not hasattr(cfg, "mho1"):
            raise ConfigError("the contact Euler operator needs a contact configuration")
        return contact_euler(u, cfg)
    p = d.p
    if p is None or not 0 <= p < cfg.n:
        raise ConfigError(f"derivation index {p} out of range for n={cfg.n}")
    if d.tag is Tag.GRADING:
        return grading(u, p, cfg)
    if d.tag is Tag.DOWN:
        return down(u, p)
    if d.tag is Tag.MIXED:
        return mixed(u, p, cfg)
    if d.tag is Tag.SCALED:
        if not hasattr(cfg, "scale_monomial"):
            raise ConfigError("scaled derivations need a special-type configuration")
        return multiply(cfg.scale_monomial(p), mixed(u, p, cfg))
    raise ConfigError(f"unknown derivation {d}")  # pragma: no cover


def check_leibniz(d: DerivationKind, u: AlgebraElement, v: AlgebraElement, cfg) -> bool:
    lhs = apply_derivation(d, multiply(u, v), cfg)
    rhs = multiply(apply_derivation(d, u, cfg), v) + multiply(u, apply_derivation(d, v, cfg))
    return lhs == rhs


def all_kinds(cfg) -> list[DerivationKind]:
    """Every derivation kind meaningful for ``cfg``."""
    out: list[DerivationKind] = []
    for p in range(cfg.n):
        out += [Grading(p), DownGrading(p), Mixed(p)]
        if hasattr(cfg, "scale_monomial"):
            out.append(Scaled(p))
    if hasattr(cfg, "mho1"):
        out.append(ContactEuler)
    return out


def _dot(phi, alpha) -> Fraction:
    s = Fraction(0)
    for a, v in zip(alpha, phi):
        if a and v:
            s += a * v
    return s
