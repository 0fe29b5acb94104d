"""Seeded property suites behind ``gencartan verify``.

Random elements use group coordinates in [-3, 3], exponents in [0, 3] on
polynomial slots, coefficients in {-2, -1, 1, 2} and one to three terms.
Every check is exact; a suite reports the number of violations and the
first counterexample.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from gencartan.algebra import AlgebraElement, Monomial, multiply, one
from gencartan.config import AlgebraConfig
from gencartan.contact import (
    append_last,
    bracket_with_one,
    contact_bracket,
    contact_bracket_with_constant,
    drop_last,
    restriction_config,
)
from gencartan.derivations import Tag, all_kinds, apply_derivation, down
from gencartan.families import CONTACT, HAMILTONIAN, SPECIAL, Element, family, raw_bracket, uses_vector_fields
from gencartan.hamiltonian import closed_form_bracket_degenerate, hamiltonian_bracket
from gencartan.special import (
    monomial_bracket,
    realize,
    realize_monomials,
    special_bracket_expansion,
    special_generator,
)
from gencartan.witt import WittVector, witt_bracket

COORD_RANGE = (-3, 3)
EXP_RANGE = (0, 3)
COEFFS = (-2, -1, 1, 2)
MAX_TERMS = 3


class SuiteNotApplicable(ValueError):
    pass


@dataclass
class SuiteResult:
    suite: str
    samples: int
    checks: int = 0
    violations: int = 0
    counterexample: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.violations == 0

    def record(self, passed: bool, describe: Callable[[], list[str]]) -> None:
        self.checks += 1
        if not passed:
            self.violations += 1
            if not self.counterexample:
                self.counterexample = describe()

    def lines(self) -> list[str]:
        out = [f"suite {self.suite}: {self.samples} samples, {self.checks} checks, {self.violations} violations"]
        if self.counterexample:
            out.append("first counterexample:")
            out += ["  " + s for s in self.counterexample]
        return out


class Sampler:
    """Random monomials and elements adapted to a configuration."""

    def __init__(self, cfg: AlgebraConfig, rng: random.Random):
        self.cfg = cfg
        self.rng = rng
        self.free_coords = list(range(cfg.k))
        if family(cfg) == SPECIAL:
            self.free_coords = [j for j in range(cfg.k) if cfg.delta_nonzero[j]]

    def alpha(self, coords=None) -> tuple[int, ...]:
        coords = self.free_coords if coords is None else coords
        a = [0] * self.cfg.k
        for j in coords:
            a[j] = self.rng.randint(*COORD_RANGE)
        return tuple(a)

    def exps(self, skip_last: bool = False) -> tuple[int, ...]:
        n = self.cfg.n
        return tuple(
            self.rng.randint(*EXP_RANGE) if self.cfg.is_polynomial(p) and not (skip_last and p == n - 1) else 0
            for p in range(n)
        )

    def monomial(self, coords=None, skip_last: bool = False) -> Monomial:
        return Monomial(self.alpha(coords), self.exps(skip_last))

    def coeff(self) -> int:
        return self.rng.choice(COEFFS)

    def scalar(self, coords=None, skip_last: bool = False) -> AlgebraElement:
        terms = self.rng.randint(1, MAX_TERMS)
        out = AlgebraElement()
        for _ in range(terms):
            out = out + AlgebraElement({self.monomial(coords, skip_last): self.coeff()})
        return out

    def pair(self) -> tuple[int, int]:
        return tuple(self.rng.sample(range(self.cfg.n), 2))

    def element(self) -> Element:
        fam = family(self.cfg)
        n = self.cfg.n
        if fam == SPECIAL:
            out = WittVector.zero(n)
            for _ in range(self.rng.randint(1, MAX_TERMS)):
                p, q = self.pair()
                mono = AlgebraElement({self.monomial(): self.coeff()})
                out = out + special_generator(p, q, mono, self.cfg)
            return out
        if uses_vector_fields(self.cfg):
            out = WittVector.zero(n)
            for _ in range(self.rng.randint(1, MAX_TERMS)):
                p = self.rng.randrange(n)
                out = out + WittVector.component(n, p, AlgebraElement({self.monomial(): self.coeff()}))
            return out
        return self.scalar()


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise SuiteNotApplicable(message)


def suite_jacobi(cfg, samples, rng) -> SuiteResult:
    res = SuiteResult("jacobi", samples)
    s = Sampler(cfg, rng)
    for _ in range(samples):
        a, b, c = s.element(), s.element(), s.element()
        total = (
            raw_bracket(a, raw_bracket(b, c, cfg), cfg)
            + raw_bracket(b, raw_bracket(c, a, cfg), cfg)
            + raw_bracket(c, raw_bracket(a, b, cfg), cfg)
        )
        res.record(not total, lambda: [f"a = {a}", f"b = {b}", f"c = {c}", f"jacobi sum = {total}"])
    return res


def suite_skew(cfg, samples, rng) -> SuiteResult:
    res = SuiteResult("skew", samples)
    s = Sampler(cfg, rng)
    for _ in range(samples):
        a, b = s.element(), s.element()
        ab, ba, aa = raw_bracket(a, b, cfg), raw_bracket(b, a, cfg), raw_bracket(a, a, cfg)
        res.record(not (ab + ba), lambda: [f"a = {a}", f"b = {b}", f"[a,b] + [b,a] = {ab + ba}"])
        res.record(not aa, lambda: [f"a = {a}", f"[a,a] = {aa}"])
    return res


def _commuting_pairs(kinds):
    basic = [d for d in kinds if d.tag in (Tag.GRADING, Tag.DOWN, Tag.MIXED)]
    scaled = [d for d in kinds if d.tag is Tag.SCALED]
    out = []
    for group in (basic, scaled):
        for i, d1 in enumerate(group):
            for d2 in group[i + 1 :]:
                out.append((d1, d2))
    return out


def suite_leibniz(cfg, samples, rng) -> SuiteResult:
    res = SuiteResult("leibniz", samples)
    s = Sampler(cfg, rng)
    kinds = all_kinds(cfg)
    pairs = _commuting_pairs(kinds)
    for _ in range(samples):
        u, v = s.scalar(), s.scalar()
        uv = multiply(u, v)
        for d in kinds:
            lhs = apply_derivation(d, uv, cfg)
            rhs = multiply(apply_derivation(d, u, cfg), v) + multiply(u, apply_derivation(d, v, cfg))
            res.record(lhs == rhs, lambda: [f"derivation {d}", f"u = {u}", f"v = {v}", f"d(uv) - d(u)v - u d(v) = {lhs - rhs}"])
        for d1, d2 in pairs:
            x = apply_derivation(d1, apply_derivation(d2, u, cfg), cfg)
            y = apply_derivation(d2, apply_derivation(d1, u, cfg), cfg)
            res.record(x == y, lambda: [f"derivations {d1}, {d2}", f"u = {u}", f"commutator = {x - y}"])
        mono = s.monomial()
        for p in range(cfg.n):
            if not cfg.is_polynomial(p):
                continue
            w = AlgebraElement({mono: 1})
            for _ in range(mono.exps[p] + 1):
                w = down(w, p)
            res.record(not w, lambda: [f"index {p + 1}", f"monomial {mono}", "iterated down-grading is nonzero"])
    return res


def suite_oracle_3_8(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == SPECIAL, "oracle-3.8 needs a special-type config")
    res = SuiteResult("oracle-3.8", samples)
    s = Sampler(cfg, rng)
    for _ in range(samples):
        (p, q), (r, t) = s.pair(), s.pair()
        u, v = s.scalar(), s.scalar()
        direct = witt_bracket(special_generator(p, q, u, cfg), special_generator(r, t, v, cfg), cfg)
        expanded = realize(special_bracket_expansion(p, q, r, t, u, v, cfg), cfg)
        res.record(
            direct == expanded,
            lambda: [f"pairs ({p + 1},{q + 1}), ({r + 1},{t + 1})", f"u = {u}", f"v = {v}", f"direct = {direct}", f"expansion = {expanded}"],
        )
    return res


def suite_oracle_3_12(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == SPECIAL, "oracle-3.12 needs a special-type config")
    res = SuiteResult("oracle-3.12", samples)
    s = Sampler(cfg, rng)
    for _ in range(samples):
        p, q = s.pair()
        a, b = s.monomial(), s.monomial()
        direct = witt_bracket(
            special_generator(p, q, AlgebraElement({a: 1}), cfg),
            special_generator(p, q, AlgebraElement({b: 1}), cfg),
            cfg,
        )
        closed = realize_monomials(monomial_bracket(a, b, p, q, cfg), cfg)
        res.record(
            direct == closed,
            lambda: [f"pair ({p + 1},{q + 1})", f"a = {a}", f"b = {b}", f"direct = {direct}", f"closed form = {closed}"],
        )
    return res


def suite_oracle_4_78(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == HAMILTONIAN, "oracle-4.78 needs a hamiltonian-type config")
    _require(cfg.all_group_only(), "oracle-4.78 needs every variable kind group-only")
    res = SuiteResult("oracle-4.78", samples)
    s = Sampler(cfg, rng)
    for _ in range(samples):
        a, b = s.alpha(), s.alpha()
        direct = hamiltonian_bracket(AlgebraElement({Monomial(a, (0,) * cfg.n): 1}), AlgebraElement({Monomial(b, (0,) * cfg.n): 1}), cfg)
        closed = closed_form_bracket_degenerate(a, b, cfg)
        res.record(direct == closed, lambda: [f"alpha = {a}", f"beta = {b}", f"direct = {direct}", f"closed form = {closed}"])
    return res


def suite_oracle_5_21(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == CONTACT, "oracle-5.21 needs a contact-type config")
    res = SuiteResult("oracle-5.21", samples)
    s = Sampler(cfg, rng)
    unit = one(cfg.k, cfg.n)
    for _ in range(samples):
        target = s.monomial()
        direct = contact_bracket(unit, AlgebraElement({target: 1}), cfg)
        closed = bracket_with_one(target, cfg)
        res.record(direct == closed, lambda: [f"target = {target}", f"direct = {direct}", f"closed form = {closed}"])
    return res


def suite_oracle_5_26(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == CONTACT, "oracle-5.26 needs a contact-type config")
    res = SuiteResult("oracle-5.26", samples)
    s = Sampler(cfg, rng)
    zeros = (0,) * cfg.n
    for _ in range(samples):
        kappa = s.alpha(cfg.gamma2)
        target = s.monomial()
        direct = contact_bracket(AlgebraElement({Monomial(kappa, zeros): 1}), AlgebraElement({target: 1}), cfg)
        closed = contact_bracket_with_constant(kappa, target, cfg)
        res.record(
            direct == closed,
            lambda: [f"kappa = {kappa}", f"target = {target}", f"direct = {direct}", f"closed form = {closed}"],
        )
    return res


def suite_central_1(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == HAMILTONIAN, "central-1 needs a hamiltonian-type config")
    res = SuiteResult("central-1", samples)
    s = Sampler(cfg, rng)
    unit = one(cfg.k, cfg.n)
    for _ in range(samples):
        u, v = s.scalar(), s.scalar()
        c1, c2 = s.coeff(), s.coeff()
        central = hamiltonian_bracket(unit, v, cfg)
        res.record(not central, lambda: [f"v = {v}", f"[1, v] = {central}"])
        shifted = hamiltonian_bracket(u + unit.scale(c1), v + unit.scale(c2), cfg)
        plain = hamiltonian_bracket(u, v, cfg)
        res.record(
            shifted == plain,
            lambda: [f"u = {u}", f"v = {v}", f"constants {c1}, {c2}", f"[u+c1, v+c2] - [u, v] = {shifted - plain}"],
        )
    return res


def suite_restriction_5_40(cfg, samples, rng) -> SuiteResult:
    _require(family(cfg) == CONTACT, "restriction-5.40 needs a contact-type config")
    res = SuiteResult("restriction-5.40", samples)
    s = Sampler(cfg, rng)
    hcfg = restriction_config(cfg)
    for _ in range(samples):
        u = s.scalar(cfg.gamma1, skip_last=True)
        v = s.scalar(cfg.gamma1, skip_last=True)
        lhs = contact_bracket(u, v, cfg)
        rhs = append_last(hamiltonian_bracket(drop_last(u), drop_last(v), hcfg))
        res.record(lhs == rhs, lambda: [f"u = {u}", f"v = {v}", f"contact = {lhs}", f"hamiltonian = {rhs}"])
    return res


SUITES: dict[str, Callable[[AlgebraConfig, int, random.Random], SuiteResult]] = {
    "jacobi": suite_jacobi,
    "skew": suite_skew,
    "leibniz": suite_leibniz,
    "oracle-3.8": suite_oracle_3_8,
    "oracle-3.12": suite_oracle_3_12,
    "oracle-4.78": suite_oracle_4_78,
    "oracle-5.21": suite_oracle_5_21,
    "oracle-5.26": suite_oracle_5_26,
    "central-1": suite_central_1,
    "restriction-5.40": suite_restriction_5_40,
}


def run_suite(name: str, cfg: AlgebraConfig, samples: int, seed: int) -> SuiteResult:
    if name not in SUITES:
        raise SuiteNotApplicable(f"unknown suite {name!r}")
    return SUITES[name](cfg, samples, random.Random(seed))
