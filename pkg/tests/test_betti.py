import pytest

from toriglue.betti import (
    BettiError, BettiTable, format_betti, parse_betti, projective_dimension, regularity, render,
    tensor, totals,
)

from conftest import EXAMPLES
from reference import BETTI_TENSOR


def load(name):
    return parse_betti((EXAMPLES / name).read_text().splitlines())


def test_factor_totals():
    assert totals(load("betti_a.betti")) == (1, 3, 2)
    assert totals(load("betti_b.betti")) == (1, 5, 6, 2)


def test_tensor_render():
    t = tensor(load("betti_a.betti"), load("betti_b.betti"))
    assert render(t) == BETTI_TENSOR
    assert totals(t) == (1, 8, 23, 30, 18, 4)
    assert projective_dimension(t) == 5
    assert regularity(t) == 9


def test_unit_and_empty():
    u = BettiTable.unit()
    assert totals(u) == (1,)
    assert render(u).splitlines()[-1] == "total:     1"
    assert totals(BettiTable(())) == ()


def test_parse_format_roundtrip():
    b = load("betti_b.betti")
    assert parse_betti(format_betti(b).splitlines()) == b


@pytest.mark.parametrize("text", ["0 0", "0 0 x", "0 0 1\n0 0 2", "0 -1 1"])
def test_parse_errors(text):
    with pytest.raises(BettiError):
        parse_betti(text.splitlines())


def test_zero_entries_dropped():
    assert BettiTable.from_dict({(0, 0): 1, (1, 2): 0}).entries == (((0, 0), 1),)
