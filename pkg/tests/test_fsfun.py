import pytest
from hypothesis import given

from nomset.atoms import Labels, Perm, fresh_atoms, transpose
from nomset.fscore import AtomSet, act, least_support, supp
from nomset.fsfun import (
    SELF, AtomFun, AtomSetFun, SetTail, TailKind, TupleFun, compose_funs, conjugate,
    enumerate_atom_funs, enumerate_injective_tuple_funs, enumerate_set_funs,
    enumerate_tuple_funs, is_injective, is_surjective, make_atom_fun, parse_fun,
)
from nomset.oracle import FiniteModel
from conftest import atomfuns, atoms, perms


def _swap_oracle(f, extra=2):
    """Least support by swapping carrier atoms with fresh ones, compared pointwise."""
    fresh = fresh_atoms(extra)
    probe = sorted(f.carrier) + fresh
    def same(g, h):
        return all(g(x) == h(x) for x in probe + fresh_atoms(2))
    out = set()
    for a in f.carrier:
        (b,) = fresh_atoms(1)
        if not same(conjugate(transpose(a, b), f), f):
            out.add(a)
    return frozenset(out)


def test_identity_and_constants(abc):
    a, b, c = abc
    assert AtomFun.identity().support() == frozenset()
    k = AtomFun.constant(a)
    assert k(b) == a and k(a) == a and k.support() == {a}


def test_make_atom_fun_validates(abc):
    a, b, c = abc
    with pytest.raises(ValueError):
        make_atom_fun([a], {a: b})
    with pytest.raises(ValueError):
        make_atom_fun([a], {a: a}, tail=b)
    with pytest.raises(ValueError):
        make_atom_fun([a, b], {a: a})


def test_normalization_closes_under_images(abc):
    # a -> b differs from the identity, so both a and b are needed
    a, b, c = abc
    f = make_atom_fun([a, b, c], {a: b, b: b, c: c})
    assert f.support() == {a, b}
    assert f == make_atom_fun([a, b], {a: b, b: b})


@given(atomfuns())
def test_normalized_support_is_least(f):
    assert f.support() == _swap_oracle(f)
    assert least_support(f, f.carrier).support == f.support()


@given(atomfuns(), perms())
def test_conjugation_is_equivariant(f, p):
    g = conjugate(p, f)
    for x in f.carrier | p.moved() | set(fresh_atoms(1)):
        assert g(p(x)) == p(f(x))
    assert g.support() == frozenset(p(a) for a in f.support())


@given(atomfuns(), atomfuns(), atoms)
def test_composition_pointwise(f, g, x):
    assert compose_funs(f, g)(x) == f(g(x))


@given(atomfuns())
def test_injective_iff_surjective(f):
    assert is_injective(f) == is_surjective(f)


@given(atomfuns())
def test_injectivity_matches_finite_model(f):
    model = FiniteModel.of_size(len(f.carrier) + 3, include=sorted(f.carrier))
    image = [f(x) for x in model.universe]
    assert is_injective(f) == (len(set(image)) == len(image))


def test_enumeration_counts_small(abc):
    a, b, c = abc
    assert len(enumerate_atom_funs([])) == 1
    assert len(enumerate_atom_funs([a])) == 2
    assert len(enumerate_atom_funs([a, b, c])) == 108
    assert len(enumerate_set_funs([])) == 4
    assert len(enumerate_tuple_funs([a], 2)) == 4
    assert len(enumerate_injective_tuple_funs([])) == 2


def test_enumerations_are_supported_by_S(abc):
    a, b, _ = abc
    for f in enumerate_set_funs([a, b]):
        assert f.support() <= {a, b}
    for f in enumerate_tuple_funs([a, b], 2):
        assert f.support() <= {a, b}


def test_set_fun_tails(abc):
    a, b, c = abc
    (d,) = fresh_atoms(1)
    f = AtomSetFun(frozenset({a}), ((a, AtomSet.finite([a])),), SetTail(TailKind.FIN_WITH_SELF, frozenset({a})))
    assert f(d) == AtomSet.finite([a, d])
    assert f.support() == {a}
    g = AtomSetFun(frozenset(), (), SetTail(TailKind.COFIN_WITHOUT_SELF))
    assert d not in g(d) and a in g(d)
    assert g.act(transpose(a, b)) == g


def test_tuple_fun_components(abc):
    a, b, c = abc
    f = TupleFun(frozenset({a}), ((a, (a, a)),), (SELF, a))
    assert f(b) == (b, a)
    assert f.component(0) == AtomFun.identity()
    assert f.component(1) == AtomFun.constant(a)
    with pytest.raises(ValueError):
        TupleFun(frozenset({a}), ((a, (a, a)),), (SELF,), injective=True)


def test_parse_fun_round_trip():
    L = Labels()
    f = parse_fun("fun{a->b, b->a; tail=id}", L)
    assert f(L["a"]) == L["b"]
    assert parse_fun(str(f), L) == f
    g = parse_fun("fun{tail=const c}", L)
    assert g(L["a"]) == L["c"]
    with pytest.raises(ValueError):
        parse_fun("fun{a=>b}", L)
