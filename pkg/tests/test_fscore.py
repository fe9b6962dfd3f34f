import pytest
from hypothesis import given

from nomset.atoms import Labels, Perm, fresh_atoms, transpose
from nomset.fscore import (
    ALL, EMPTY, AtomSet, act, act_set, least_support, member, parse_atomset,
    set_algebra, supp, supp_pair,
)
from conftest import atoms, atomsets, perms


def test_finite_and_cofinite_membership(abc):
    a, b, c = abc
    X = AtomSet.finite([a])
    Y = AtomSet.cofinite_of([a])
    assert a in X and b not in X
    assert a not in Y and b in Y and fresh_atoms(1)[0] in Y
    assert member(a, X)


def test_set_algebra_example(abc):
    a, b, c = abc
    X, Y = AtomSet.finite([a, b]), AtomSet.cofinite_of([b])
    union, inter, diff = set_algebra(X, Y)
    assert union == ALL
    assert inter == AtomSet.finite([a])
    assert diff == AtomSet.finite([b])


@given(atomsets(), atomsets(), atomsets())
def test_boolean_algebra_laws(X, Y, Z):
    assert X | Y == Y | X and X & Y == Y & X
    assert (X | Y) | Z == X | (Y | Z)
    assert X & (Y | Z) == (X & Y) | (X & Z)
    assert (X | Y).complement() == X.complement() & Y.complement()
    assert X | X.complement() == ALL and X & X.complement() == EMPTY
    assert X.complement().complement() == X


@given(atomsets(), atomsets(), atoms)
def test_operations_agree_with_membership(X, Y, a):
    assert (a in X | Y) == (a in X or a in Y)
    assert (a in X & Y) == (a in X and a in Y)
    assert (a in X - Y) == (a in X and a not in Y)


@given(atomsets(), perms(), perms())
def test_action_laws(X, p, q):
    assert act_set(p * q, X) == act_set(p, act_set(q, X))
    assert act_set(Perm.identity(), X) == X


@given(atomsets(), perms())
def test_supp_equivariance(X, p):
    assert supp(act(p, X)) == frozenset(p(a) for a in supp(X))


@given(atomsets())
def test_supp_is_least(X):
    # the swap oracle recovers exactly the stored support
    superset = supp(X) | set(fresh_atoms(2))
    assert least_support(X, superset).support == supp(X)


def test_supp_of_pairs_and_scalars(abc):
    a, b, c = abc
    assert supp((a, AtomSet.cofinite_of([b]))) == {a, b}
    assert supp(7) == frozenset()
    assert supp_pair({a}, {b}) == {a, b}
    assert supp(frozenset({a, (b, 3)})) == {a, b}


def test_least_support_records_checks(abc):
    a, b, c = abc
    rep = least_support((a, a), {a, b})
    assert rep.support == {a}
    assert len(rep.witness_checks) == 2


def test_parse_atomset():
    L = Labels()
    assert parse_atomset("{a,b}", L) == AtomSet.finite(L.atoms("ab"))
    assert parse_atomset("A", L) == ALL
    assert parse_atomset("A\\{a}", L) == AtomSet.cofinite_of([L["a"]])
    assert parse_atomset("{}", L) == EMPTY
    with pytest.raises(ValueError):
        parse_atomset("{a", L)


def test_cofinite_sets_cannot_be_listed(abc):
    with pytest.raises(TypeError):
        len(AtomSet.cofinite_of(abc))
    with pytest.raises(TypeError):
        list(ALL)
    assert str(AtomSet.cofinite_of(abc[:1])) == "A\\{a}"
