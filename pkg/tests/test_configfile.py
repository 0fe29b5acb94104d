from fractions import Fraction

import pytest

from gencartan.configfile import config_from_dict, config_to_dict, parse_window, rational
from gencartan.errors import ConfigError
from gencartan.presets import example_2, example_4, example_5
from gencartan.special import SpecialConfig

CONFIGS = [
    example_2(1, 1),
    example_4(k=2, m=1),
    example_4(m=2, m1=1, kinds="0N0N"),
    example_5("0NN", sigma_n=2),
    SpecialConfig.build(3, "NN0", [True, False, True], rho=[1, 0, 0], sigma=[0, 0, -1]),
]


@pytest.mark.parametrize("cfg", CONFIGS, ids=lambda c: type(c).__name__)
def test_round_trip(cfg):
    assert config_from_dict(config_to_dict(cfg)) == cfg


def test_rationals():
    assert rational("3/4") == Fraction(3, 4)
    assert rational(-2) == -2
    for bad in ("1/0", "x", 1.5, True):
        with pytest.raises(ConfigError):
            rational(bad)


def test_unknown_and_missing_fields():
    with pytest.raises(ConfigError, match="unknown"):
        config_from_dict({"algebraType": "witt", "k": 1, "n": 1, "kinds": "N", "gradingMaps": [[1]], "m1": 0})
    with pytest.raises(ConfigError, match="missing"):
        config_from_dict({"algebraType": "witt", "k": 1, "n": 1, "kinds": "N"})
    with pytest.raises(ConfigError):
        config_from_dict({"algebraType": "lie"})


def test_special_maps_must_agree():
    d = config_to_dict(SpecialConfig.build(2, "00", [True, True]))
    d["gradingMaps"] = [[1, 0], [1, 0]]
    with pytest.raises(ConfigError):
        config_from_dict(d)


def test_windows():
    w = parse_window("-2..2", 3)
    assert w.group_box == ((-2, 2),) * 3 and w.max_degree == 0
    w = parse_window("-1..1, 0..2/3", 2)
    assert w.group_box == ((-1, 1), (0, 2)) and w.max_degree == 3
    for bad in ("-1..1,0..1", "1..0", "a..b", "-1..1/x"):
        with pytest.raises(ConfigError):
            parse_window(bad, 3 if bad.count(",") == 1 else 1)
