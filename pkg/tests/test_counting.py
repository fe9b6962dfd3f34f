import pytest

from nomset.atoms import fresh_atoms
from nomset.counting import FORMULAS, count_supported, cross_check


@pytest.mark.parametrize("kind,s,expected", [
    ("atoms", 3, 3), ("subsets", 2, 8), ("inj-tuples", 2, 5), ("funAA", 0, 1),
    ("funAA", 3, 108), ("funASet", 0, 4), ("funASet", 1, 32), ("inj-tuples", 0, 1),
    ("funATfin", 0, 2), ("funATfin", 1, 10),
])
def test_known_counts(kind, s, expected):
    assert count_supported(kind, s) == expected


def test_tuple_counts():
    assert count_supported("funATuple", 0, 2) == 1
    assert count_supported("funATuple", 1, 2) == 4
    with pytest.raises(ValueError):
        count_supported("funATuple", 1)


def test_errors():
    with pytest.raises(ValueError):
        count_supported("bogus", 1)
    with pytest.raises(ValueError):
        count_supported("atoms", -1)


@pytest.mark.parametrize("kind", sorted(FORMULAS))
def test_monotone_in_s(kind):
    arity = 2 if kind == "funATuple" else None
    vals = [count_supported(kind, s, arity) for s in range(6)]
    assert vals == sorted(vals)


def test_catalogue_bounds():
    for s in range(8):
        assert count_supported("atoms", s) <= s
        assert count_supported("subsets", s) <= 2 ** (s + 1)


def test_cross_check_examples():
    a, b = fresh_atoms(2, "ab")
    assert cross_check("subsets", [a, b], 6).ok
    r = cross_check("funAA", [a], 5)
    assert (r.formula, r.symbolic, r.oracle) == (2, 2, 2)
    r = cross_check("inj-tuples", [], 4)
    assert (r.formula, r.symbolic, r.oracle) == (1, 1, 1)


def test_cross_check_threshold():
    a, b = fresh_atoms(2)
    with pytest.raises(ValueError):
        cross_check("subsets", [a, b], 5)
