import pytest

from bdcases import CapacityExceeded, entails, parse_inner
from bdcases.formula import Var, conjoin
from bdcases.sampling import random_formula

pytest.importorskip("dask.array")

from bdcases.dask import entails_partitioned  # noqa: E402


def test_entails_partitioned_examples():
    assert not entails_partitioned(parse_inner("p & !p"), parse_inner("q"))
    assert entails_partitioned(parse_inner("p & !p & q"), parse_inner("p & !p"))
    assert entails_partitioned(parse_inner("bot"), parse_inner("p"))


@pytest.mark.parametrize("block_vars", [0, 1, 2, 8])
def test_entails_partitioned_agrees(rng, block_vars):
    signature = ("p", "q", "r")
    for _ in range(30):
        phi = random_formula(rng, signature, 3)
        chi = random_formula(rng, signature, 3)
        expected = entails(phi, chi)
        assert entails_partitioned(phi, chi, block_vars=block_vars) == expected
        assert (
            entails_partitioned(phi, chi, block_vars=block_vars, scheduler="synchronous")
            == expected
        )


def test_entails_partitioned_capacity():
    wide = conjoin(Var(f"x{i}") for i in range(4))
    with pytest.raises(CapacityExceeded):
        entails_partitioned(wide, wide, var_cap=3)
