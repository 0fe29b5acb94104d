import pytest

from gencartan.errors import ConfigError
from gencartan.families import CONTACT, HAMILTONIAN, WITT, family, validate
from gencartan.presets import example_2, example_4, example_5, load_preset

VALID = [
    "example-2",
    "example-2:n1=0,n2=1,m=1",
    "example-2:n1=0,n2=2,m=2",
    "example-2:n1=2,n2=0,m=2",
    "example-2:n1=0,n2=2,m=1",
    "example-4",
    "example-4:k=2,m=1",
    "example-4:m=2,m1=1,kinds=NNNN",
    "example-4:m=2,m1=0,kinds=0NNN",
    "example-4:m=2,m1=0,kinds=0NNN,ell=2",
    "example-4:k=2,m=2,m1=1,kinds=0NN0",
    "example-5",
    "example-5:kinds=NNN",
    "example-5:kinds=0NN,sigma_n=2",
    "example-5:kinds=NNN,ell=1",
    "example-5:kinds=N0N,ell=2",
    "example-5:kinds=N0NNN",
]


@pytest.mark.parametrize("spec", VALID)
def test_presets_validate(spec):
    assert validate(load_preset(spec)) == []


def test_families():
    assert family(example_2()) == WITT
    assert family(example_4()) == HAMILTONIAN
    assert family(example_5()) == CONTACT


def test_laurent_specialization():
    # n1 = 0, m = n: every index polynomial, every map a coordinate projection
    cfg = example_2(n1=0, n2=2, m=2)
    assert [kd.value for kd in cfg.kinds] == ["N", "N"]
    assert [tuple(map(int, row)) for row in cfg.maps] == [(1, 0), (0, 1)]


def test_example_4_places_maps_after_form_coordinates():
    cfg = example_4(k=2, m=1)
    assert cfg.k == 4
    assert not any(cfg.maps[0][:2]) and not any(cfg.maps[1][:2])
    assert cfg.form(( 1, 0, 0, 0), (0, 1, 0, 0)) == 1


def test_example_5_contact_coordinate_is_last():
    cfg = example_5(kinds="NNN", sigma_n=1)
    assert cfg.gamma2 == (2,)
    assert cfg.sigma_n == (0, 0, 1)


@pytest.mark.parametrize(
    "spec",
    [
        "example-9",
        "example-2:n1=3,n2=0,m=2",
        "example-2:q=1",
        "example-2:m",
        "example-4:m=2,m1=0,kinds=0N0N",
        "example-4:m=1,ell=5",
        "example-5:kinds=NN",
        "example-5:kinds=000,ell=2",
        "example-5:kinds=NNN,iota=1/1/2",
    ],
)
def test_bad_presets(spec):
    with pytest.raises(ConfigError):
        load_preset(spec)
