"""JSON configuration files and window specifications.

A config file is a JSON object with ``algebraType`` (witt, special,
hamiltonian, contact), ``k``, ``n``, ``kinds`` (a string such as ``"0N"``
or a list), ``gradingMaps`` (rows of rationals written ``"p/q"`` or
integers) and the family-specific fields ``skewForm``, ``m1``, ``sigmas``,
``sigmaN``, ``gammaSplit`` (``{"gamma1": [...], "gamma2": [...]}``, 1-based
generator indices), ``deltaNonzero``, ``rho`` and ``sigma``.

``preset:NAME[:key=value,...]`` may be used wherever a path is expected.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from gencartan.config import AlgebraConfig
from gencartan.contact import ContactConfig
from gencartan.errors import ConfigError
from gencartan.families import CONTACT, FAMILIES, HAMILTONIAN, SPECIAL, WITT, family
from gencartan.hamiltonian import HamiltonianConfig
from gencartan.presets import load_preset
from gencartan.probe import Window
from gencartan.special import SpecialConfig
from gencartan.witt import WittConfig

_FIELDS = {
    WITT: {"algebraType", "k", "n", "kinds", "gradingMaps"},
    SPECIAL: {"algebraType", "n", "kinds", "deltaNonzero", "rho", "sigma", "k", "gradingMaps"},
    HAMILTONIAN: {"algebraType", "k", "n", "kinds", "gradingMaps", "skewForm", "m1", "sigmas"},
    CONTACT: {"algebraType", "k", "n", "kinds", "gradingMaps", "gammaSplit", "sigmas", "sigmaN"},
}


def rational(x) -> Fraction:
    if isinstance(x, bool):
        raise ConfigError(f"expected a rational, got {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise ConfigError(f"expected an integer or a 'p/q' string, got {x!r}")


def _int(x, what: str) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ConfigError(f"{what} must be an integer, got {x!r}")
    return x


def _ints(xs, what: str) -> list[int]:
    if not isinstance(xs, list):
        raise ConfigError(f"{what} must be a list of integers")
    return [_int(x, what) for x in xs]


def _require(d: dict, key: str):
    if key not in d:
        raise ConfigError(f"missing field {key!r}")
    return d[key]


def config_from_dict(d: dict) -> AlgebraConfig:
    fam = d.get("algebraType")
    if fam not in FAMILIES:
        raise ConfigError(f"algebraType must be one of {', '.join(FAMILIES)}, got {fam!r}")
    unknown = set(d) - _FIELDS[fam]
    if unknown:
        raise ConfigError(f"unknown field(s) for {fam}: {', '.join(sorted(unknown))}")
    n = _int(_require(d, "n"), "n")
    kinds = _require(d, "kinds")
    if fam == SPECIAL:
        cfg = SpecialConfig.build(
            n,
            kinds,
            [bool(x) for x in _require(d, "deltaNonzero")],
            rho=_ints(d["rho"], "rho") if "rho" in d else None,
            sigma=_ints(d["sigma"], "sigma") if "sigma" in d else None,
        )
        if "gradingMaps" in d and [[rational(x) for x in row] for row in d["gradingMaps"]] != [
            list(row) for row in cfg.maps
        ]:
            raise ConfigError("gradingMaps disagree with deltaNonzero for a special-type config")
        return cfg
    k = _int(_require(d, "k"), "k")
    maps = [[rational(x) for x in row] for row in _require(d, "gradingMaps")]
    if fam == WITT:
        return WittConfig.build(k, n, kinds, maps)
    if fam == HAMILTONIAN:
        form = d.get("skewForm")
        if form is not None:
            form = [[rational(x) for x in row] for row in form]
        return HamiltonianConfig.build(
            k,
            n,
            kinds,
            maps,
            m1=_int(d.get("m1", 0), "m1"),
            form=form,
            sigmas=[_ints(s, "sigmas") for s in d.get("sigmas", [])],
        )
    split = _require(d, "gammaSplit")
    gamma1 = [j - 1 for j in _ints(split.get("gamma1", []), "gamma1")]
    gamma2 = [j - 1 for j in _ints(split.get("gamma2", []), "gamma2")]
    sigma_n = d.get("sigmaN")
    return ContactConfig.build(
        k,
        n,
        kinds,
        maps,
        gamma1,
        gamma2,
        [_ints(s, "sigmas") for s in _require(d, "sigmas")],
        _ints(sigma_n, "sigmaN") if sigma_n is not None else None,
    )


def _frac_str(c: Fraction) -> str | int:
    return int(c) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def config_to_dict(cfg: AlgebraConfig) -> dict:
    fam = family(cfg)
    out: dict = {
        "algebraType": fam,
        "k": cfg.k,
        "n": cfg.n,
        "kinds": "".join(kd.value for kd in cfg.kinds),
        "gradingMaps": [[_frac_str(x) for x in row] for row in cfg.maps],
    }
    if fam == SPECIAL:
        out.update(deltaNonzero=list(cfg.delta_nonzero), rho=list(cfg.rho), sigma=list(cfg.sigma))
    elif fam == HAMILTONIAN:
        out.update(
            skewForm=[[_frac_str(x) for x in row] for row in cfg.form.gram],
            m1=cfg.m1,
            sigmas=[list(s) for s in cfg.sigmas],
        )
    elif fam == CONTACT:
        out.update(
            gammaSplit={"gamma1": [j + 1 for j in cfg.gamma1], "gamma2": [j + 1 for j in cfg.gamma2]},
            sigmas=[list(s) for s in cfg.sigmas],
            sigmaN=list(cfg.sigma_n),
        )
    return out


def load_config(source: str) -> AlgebraConfig:
    if source.startswith("preset:"):
        return load_preset(source[len("preset:") :])
    try:
        text = Path(source).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {source}: {exc.strerror}") from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{source}: invalid JSON ({exc})") from None
    if not isinstance(data, dict):
        raise ConfigError(f"{source}: expected a JSON object")
    return config_from_dict(data)


_RANGE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def parse_window(text: str, k: int) -> Window:
    """``lo..hi,lo..hi[/max_degree]``; a single range is repeated for every coordinate."""
    box_text, _, deg_text = text.partition("/")
    deg = 0
    if deg_text.strip():
        try:
            deg = int(deg_text)
        except ValueError:
            raise ConfigError(f"bad degree bound {deg_text!r} in window {text!r}") from None
    parts = [p for p in box_text.split(",")] if box_text.strip() else []
    box = []
    for part in parts:
        mt = _RANGE.match(part)
        if not mt:
            raise ConfigError(f"bad range {part!r} in window {text!r}; expected lo..hi")
        box.append((int(mt.group(1)), int(mt.group(2))))
    if len(box) == 1 and k != 1:
        box = box * k
    if len(box) != k:
        raise ConfigError(f"window has {len(box)} ranges, config has k={k}")
    try:
        return Window(tuple(box), deg)
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
