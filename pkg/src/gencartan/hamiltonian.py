"""Hamiltonian-type bracket on the monomial algebra and its central quotient.

With n = 2m derivations, the first m1 pairs (p, m+p) are twisted by group
monomials x^{sigma_p}; the remaining pairs use the split grading/down-grading
form; a skew form on the group contributes phi(a, b) u v for homogeneous
u, v of degrees a, b.  Constants are central and the quotient by them is
represented by constant-free elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from gencartan.algebra import AlgebraElement, Monomial, grade_split, group_monomial, multiply, shift, zero
from gencartan.config import AlgebraConfig
from gencartan.derivations import down, grading, mixed
from gencartan.errors import ConfigError, Violation
from gencartan.lattice import (
    GroupElement,
    IntegerLattice,
    SkewForm,
    eval_grading_map,
    kernel_lattice,
    lattice_intersect,
    radical_lattice,
    witness_outside_kernel,
)
from gencartan.linalg import RankAccumulator


@dataclass(frozen=True)
class HamiltonianConfig(AlgebraConfig):
    m1: int = 0
    form: SkewForm | None = None
    sigmas: tuple[GroupElement, ...] = ()

    def __post_init__(self) -> None:
        super().__post_init__()
        if self.n % 2:
            raise ConfigError(f"hamiltonian configs need an even number of derivations, got n={self.n}")
        if not 0 <= self.m1 <= self.n // 2:
            raise ConfigError(f"m1={self.m1} must lie in [0, m={self.n // 2}]")
        if self.form is None:
            object.__setattr__(self, "form", SkewForm.zero(self.k))
        if self.form.k != self.k:
            raise ConfigError(f"skew form is {self.form.k}x{self.form.k}, expected {self.k}x{self.k}")
        if len(self.sigmas) != self.m1:
            raise ConfigError(f"expected {self.m1} sigma elements, got {len(self.sigmas)}")
        for s in self.sigmas:
            if len(s) != self.k:
                raise ConfigError(f"sigma elements need {self.k} coordinates")

    @classmethod
    def build(cls, k: int, n: int, kinds, maps, m1: int, form=None, sigmas=()) -> HamiltonianConfig:
        fields = AlgebraConfig.build_fields(k, n, kinds, maps)
        if form is not None and not isinstance(form, SkewForm):
            form = SkewForm.from_rows(form)
        return cls(**fields, m1=int(m1), form=form, sigmas=tuple(tuple(int(x) for x in s) for s in sigmas))

    @property
    def m(self) -> int:
        return self.n // 2

    def prime(self, p: int) -> int:
        """The partner index: p <-> m + p."""
        return p + self.m if p < self.m else p - self.m

    def eps(self, p: int) -> int:
        return 1 if p < self.m else -1

    @property
    def mho(self) -> tuple[int, ...]:
        out = []
        for p in range(self.m1):
            if not self.map_is_zero(p) and not self.map_is_zero(self.m + p):
                out += [p, self.m + p]
        return tuple(sorted(out))

    @property
    def sigma_total(self) -> GroupElement:
        total = (0,) * self.k
        for s in self.sigmas:
            total = tuple(a + b for a, b in zip(total, s))
        return total


def validate_hamiltonian(cfg: HamiltonianConfig) -> list[Violation]:
    out: list[Violation] = []
    m, m1, n, k = cfg.m, cfg.m1, cfg.n, cfg.k
    nonzero = [not cfg.map_is_zero(p) for p in range(n)]

    for p in range(n):
        if not nonzero[p] and not cfg.is_polynomial(p):
            out.append(Violation("(4.2)", f"index {p + 1}: zero grading map and no polynomial variable"))
    for p in range(m1):
        if not nonzero[p] and not nonzero[m + p]:
            out.append(Violation("(4.3)", f"pair ({p + 1},{m + p + 1}): both grading maps vanish"))
    for q in range(m1, m):
        if not cfg.is_polynomial(q) and nonzero[m + q]:
            out.append(Violation("(4.4)", f"index {q + 1} is group-only but grading map {m + q + 1} is nonzero"))
        if not cfg.is_polynomial(m + q) and nonzero[q]:
            out.append(Violation("(4.4)", f"index {m + q + 1} is group-only but grading map {q + 1} is nonzero"))

    rad = radical_lattice(cfg.form) if k else IntegerLattice.trivial(0)
    untwisted = [*range(m1, m), *range(m + m1, n)]
    twisted = [*range(m1), *range(m, m + m1)]
    for p in untwisted:
        if nonzero[p]:
            others = kernel_lattice([cfg.maps[q] for q in range(n) if q != p], k)
            if witness_outside_kernel(others, cfg.maps[p]) is None:
                out.append(Violation("(4.6)", f"grading map {p + 1} vanishes on the common kernel of the others"))
    for p in twisted:
        if nonzero[p]:
            others = kernel_lattice([cfg.maps[q] for q in range(n) if q != p], k)
            if witness_outside_kernel(lattice_intersect(rad, others), cfg.maps[p]) is None:
                out.append(
                    Violation("(4.7)", f"grading map {p + 1} vanishes on radical ∩ common kernel of the others")
                )

    if k:
        # alpha orthogonal (under the form) to the kernel of the maps indexed by mho,
        # and in the kernel of every map, must be zero
        k_mho = kernel_lattice([cfg.maps[q] for q in cfg.mho], k)
        rows = [[sum(cfg.form.gram[i][j] * b[j] for j in range(k)) for i in range(k)] for b in k_mho.basis]
        rows += [list(phi) for phi in cfg.maps]
        if not kernel_lattice(rows, k).is_trivial():
            out.append(Violation("(4.8)", "a nonzero group element is killed by every map and is form-orthogonal"))

    for p, s in enumerate(cfg.sigmas):
        if not any(s):
            out.append(Violation("(4.9)", f"sigma_{p + 1} is zero"))
            continue
        if k and not rad.contains(s):
            out.append(Violation("(4.9)", f"sigma_{p + 1} is not in the radical of the skew form"))
        for q in range(n):
            if q not in (p, m + p) and eval_grading_map(cfg.maps[q], s) != 0:
                out.append(Violation("(4.9)", f"sigma_{p + 1} is not in the kernel of grading map {q + 1}"))
    return out


def hamiltonian_bracket(u: AlgebraElement, v: AlgebraElement, cfg: HamiltonianConfig) -> AlgebraElement:
    if not u or not v:
        return zero()
    m, m1 = cfg.m, cfg.m1
    out = zero()
    for q in range(m1, m):
        mq = m + q
        dv_hat_mq = down(v, mq)
        du_hat_q = down(u, q)
        du_hat_mq = down(u, mq)
        dv_hat_q = down(v, q)
        if dv_hat_mq:
            out = out + multiply(mixed(u, q, cfg), dv_hat_mq)
        if du_hat_q:
            out = out + multiply(du_hat_q, grading(v, mq, cfg))
        if du_hat_mq:
            out = out - multiply(du_hat_mq, mixed(v, q, cfg))
        if dv_hat_q:
            out = out - multiply(grading(u, mq, cfg), dv_hat_q)
    for p in range(m1):
        inner = multiply(mixed(u, p, cfg), mixed(v, m + p, cfg)) - multiply(mixed(u, m + p, cfg), mixed(v, p, cfg))
        out = out + shift(inner, cfg.sigmas[p])
    if not cfg.form.is_zero():
        for a, ua in grade_split(u).items():
            for b, vb in grade_split(v).items():
                c = cfg.form(a, b)
                if c:
                    out = out + multiply(ua, vb).scale(c)
    return out


def quotient_rep(u: AlgebraElement) -> AlgebraElement:
    """Constant-free representative of ``u`` modulo the scalars."""
    return AlgebraElement({m: c for m, c in u.items() if any(m.alpha) or any(m.exps)})


def quotient_bracket(u: AlgebraElement, v: AlgebraElement, cfg: HamiltonianConfig) -> AlgebraElement:
    return quotient_rep(hamiltonian_bracket(u, v, cfg))


def closed_form_bracket_degenerate(
    alpha: Sequence[int], beta: Sequence[int], cfg: HamiltonianConfig
) -> AlgebraElement:
    """``[x^alpha, x^beta]`` when every exponent slot is group-only."""
    if not cfg.all_group_only():
        raise ValueError("the closed form applies only when every variable kind is group-only")
    alpha, beta = tuple(alpha), tuple(beta)
    m = cfg.m
    ab = tuple(a + b for a, b in zip(alpha, beta))
    zeros = (0,) * cfg.n
    terms: dict[Monomial, Fraction] = {}
    terms[Monomial(ab, zeros)] = cfg.form(alpha, beta)
    for p in range(cfg.m1):
        c = cfg.phi(p, alpha) * cfg.phi(m + p, beta) - cfg.phi(m + p, alpha) * cfg.phi(p, beta)
        key = Monomial(tuple(x + s for x, s in zip(ab, cfg.sigmas[p])), zeros)
        terms[key] = terms.get(key, Fraction(0)) + c
    return AlgebraElement(terms)


def derived_subalgebra_window(cfg: HamiltonianConfig, window: Iterable[Sequence[int]]) -> set[GroupElement]:
    """Window elements ``a`` with ``x^a`` in the span of brackets of window monomials (mod constants)."""
    window = sorted({tuple(a) for a in window})
    if not cfg.all_group_only():
        raise ValueError("derived_subalgebra_window needs every variable kind group-only")
    if not any(cfg.sigma_total):
        raise ValueError("derived_subalgebra_window needs a nonzero total sigma")
    zeros = (0,) * cfg.n
    acc = RankAccumulator()
    for i, b in enumerate(window):
        xb = group_monomial(b, cfg.n)
        for g in window[i + 1 :]:
            w = quotient_rep(hamiltonian_bracket(xb, group_monomial(g, cfg.n), cfg))
            if w:
                acc.add(dict(w.items()))
    return {a for a in window if any(a) and acc.contains({Monomial(a, zeros): 1})}


def suggest_sigmas(cfg: HamiltonianConfig) -> list[tuple[GroupElement, ...]]:
    """Lattice bases from which each sigma_p may be drawn (one per twisted pair)."""
    rad = radical_lattice(cfg.form) if cfg.k else IntegerLattice.trivial(0)
    out = []
    for p in range(cfg.m1):
        ker = kernel_lattice([cfg.maps[q] for q in range(cfg.n) if q not in (p, cfg.m + p)], cfg.k)
        out.append(lattice_intersect(rad, ker).basis)
    return out
