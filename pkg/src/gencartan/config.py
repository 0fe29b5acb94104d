"""Construction data shared by all four families.

Indices are 0-based in code: derivation ``p`` here is the 1-based index
``p + 1`` that the CLI prints and parses.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from gencartan.algebra import AlgebraElement
from gencartan.errors import ConfigError
from gencartan.lattice import GradingMap, eval_grading_map, grading_map


class VariableKind(Enum):
    GROUP_ONLY = "0"  # exponents in that slot are always 0
    POLYNOMIAL = "N"

    @classmethod
    def parse(cls, s: str | VariableKind) -> VariableKind:
        if isinstance(s, VariableKind):
            return s
        key = str(s).strip().upper()
        if key in ("0", "{0}", "GROUP", "GROUPONLY", "GROUP_ONLY"):
            return cls.GROUP_ONLY
        if key in ("N", "NAT", "POLYNOMIAL"):
            return cls.POLYNOMIAL
        raise ConfigError(f"unknown variable kind {s!r}")


def parse_kinds(kinds: Iterable[str | VariableKind] | str) -> tuple[VariableKind, ...]:
    if isinstance(kinds, str):
        kinds = list(kinds)
    return tuple(VariableKind.parse(x) for x in kinds)


@dataclass(frozen=True)
class AlgebraConfig:
    """Rank ``k`` of the group, ``n`` derivations, exponent kinds and grading maps."""

    k: int
    n: int
    kinds: tuple[VariableKind, ...]
    maps: tuple[GradingMap, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or self.n < 0:
            raise ConfigError("k and n must be nonnegative")
        if len(self.kinds) != self.n:
            raise ConfigError(f"expected {self.n} variable kinds, got {len(self.kinds)}")
        if len(self.maps) != self.n:
            raise ConfigError(f"expected {self.n} grading maps, got {len(self.maps)}")
        for p, phi in enumerate(self.maps):
            if len(phi) != self.k:
                raise ConfigError(f"grading map {p + 1} has {len(phi)} values, expected {self.k}")

    @staticmethod
    def build_fields(k: int, n: int, kinds, maps) -> dict:
        return dict(
            k=int(k),
            n=int(n),
            kinds=parse_kinds(kinds),
            maps=tuple(grading_map(row) for row in maps),
        )

    def phi(self, p: int, alpha: Sequence[int]) -> Fraction:
        return eval_grading_map(self.maps[p], alpha)

    def is_polynomial(self, p: int) -> bool:
        return self.kinds[p] is VariableKind.POLYNOMIAL

    def map_is_zero(self, p: int) -> bool:
        return not any(self.maps[p])

    def all_group_only(self) -> bool:
        return all(kd is VariableKind.GROUP_ONLY for kd in self.kinds)

    def check_monomial(self, alpha: Sequence[int], exps: Sequence[int]) -> None:
        if len(alpha) != self.k:
            raise ConfigError(f"group part has {len(alpha)} coordinates, expected {self.k}")
        if len(exps) != self.n:
            raise ConfigError(f"exponent part has {len(exps)} entries, expected {self.n}")
        for p, e in enumerate(exps):
            if e < 0:
                raise ConfigError("exponents must be nonnegative")
            if e and not self.is_polynomial(p):
                raise ConfigError(f"exponent {p + 1} must be 0 (variable kind is group-only)")

    def check_element(self, u: AlgebraElement) -> None:
        for m in u.monomials():
            self.check_monomial(m.alpha, m.exps)
