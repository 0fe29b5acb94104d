"""Uniform access to the four families: type name, bracket, validator,
sparse-vector view of elements."""

from __future__ import annotations

from typing import Union

from gencartan.algebra import AlgebraElement
from gencartan.config import AlgebraConfig
from gencartan.contact import ContactConfig, contact_bracket, validate_contact
from gencartan.errors import Violation
from gencartan.hamiltonian import HamiltonianConfig, hamiltonian_bracket, quotient_rep, validate_hamiltonian
from gencartan.special import SpecialConfig, validate_special
from gencartan.witt import WittConfig, WittVector, validate_witt, witt_bracket

Element = Union[AlgebraElement, WittVector]

WITT, SPECIAL, HAMILTONIAN, CONTACT = "witt", "special", "hamiltonian", "contact"
FAMILIES = (WITT, SPECIAL, HAMILTONIAN, CONTACT)


def family(cfg: AlgebraConfig) -> str:
    if isinstance(cfg, SpecialConfig):
        return SPECIAL
    if isinstance(cfg, HamiltonianConfig):
        return HAMILTONIAN
    if isinstance(cfg, ContactConfig):
        return CONTACT
    if isinstance(cfg, (WittConfig, AlgebraConfig)):
        return WITT
    raise TypeError(f"not a configuration: {cfg!r}")


def uses_vector_fields(cfg: AlgebraConfig) -> bool:
    return family(cfg) in (WITT, SPECIAL)


def validate(cfg: AlgebraConfig) -> list[Violation]:
    fam = family(cfg)
    if fam == SPECIAL:
        return validate_special(cfg)
    if fam == HAMILTONIAN:
        return validate_hamiltonian(cfg)
    if fam == CONTACT:
        return validate_contact(cfg)
    return validate_witt(cfg)


def bracket(a: Element, b: Element, cfg: AlgebraConfig) -> Element:
    """Lie bracket of the family; Hamiltonian results are reduced modulo constants."""
    fam = family(cfg)
    if fam in (WITT, SPECIAL):
        return witt_bracket(a, b, cfg)
    if fam == HAMILTONIAN:
        return quotient_rep(hamiltonian_bracket(a, b, cfg))
    return contact_bracket(a, b, cfg)


def raw_bracket(a: Element, b: Element, cfg: AlgebraConfig) -> Element:
    """Bracket without the quotient (differs from :func:`bracket` only for type H)."""
    if family(cfg) == HAMILTONIAN:
        return hamiltonian_bracket(a, b, cfg)
    return bracket(a, b, cfg)


def zero_element(cfg: AlgebraConfig) -> Element:
    if uses_vector_fields(cfg):
        return WittVector.zero(cfg.n)
    return AlgebraElement()


def to_vector(x: Element) -> dict:
    return dict(x.items())


def from_vector(vec: dict, cfg: AlgebraConfig) -> Element:
    if uses_vector_fields(cfg):
        parts: list[dict] = [{} for _ in range(cfg.n)]
        for (p, m), c in vec.items():
            parts[p][m] = c
        return WittVector(AlgebraElement(t) for t in parts)
    return AlgebraElement(vec)
