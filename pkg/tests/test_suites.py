import pytest

from gencartan.presets import example_2, example_4, example_5
from gencartan.special import SpecialConfig
from gencartan.suites import SUITES, SuiteNotApplicable, SuiteResult, run_suite

S = SpecialConfig.build(3, "NN0", [True, False, True], rho=[1, 0, 0], sigma=[0, 0, -1])
H0 = example_4(k=2, m=1)
K = example_5("000")

APPLICABLE = [
    ("jacobi", example_2(1, 1)),
    ("skew", S),
    ("leibniz", example_2(0, 2)),
    ("oracle-3.8", S),
    ("oracle-3.12", S),
    ("oracle-4.78", H0),
    ("central-1", H0),
    ("oracle-5.21", K),
    ("oracle-5.26", K),
    ("restriction-5.40", K),
]


def test_every_suite_is_covered():
    assert {name for name, _ in APPLICABLE} == set(SUITES)


@pytest.mark.parametrize("name,cfg", APPLICABLE, ids=[a for a, _ in APPLICABLE])
def test_suite_holds(name, cfg):
    res = run_suite(name, cfg, 20, 1)
    assert res.ok and res.checks >= 20


def test_not_applicable():
    with pytest.raises(SuiteNotApplicable):
        run_suite("oracle-4.78", example_2(), 5, 0)
    with pytest.raises(SuiteNotApplicable):
        run_suite("oracle-3.8", K, 5, 0)


def test_seed_determinism():
    a = run_suite("jacobi", K, 10, 5)
    b = run_suite("jacobi", K, 10, 5)
    assert a == b


def test_counterexample_report():
    res = SuiteResult("demo", 2)
    res.record(True, lambda: ["unused"])
    res.record(False, lambda: ["a = 1"])
    res.record(False, lambda: ["b = 2"])
    assert res.lines() == ["suite demo: 2 samples, 3 checks, 2 violations", "first counterexample:", "  a = 1"]
