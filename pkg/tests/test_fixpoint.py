import random

import pytest
from hypothesis import given, strategies as st

from nomset.atoms import Labels, Perm, fresh_atoms, sample_fix, transpose
from nomset.fscore import EMPTY, AtomSet, parse_atomset
from nomset.fsfun import AtomFun
from nomset.fixpoint import (
    BlackBoxMap, ComposeOf, ConstUnion, FixpointError, Identity, ImageUnion, PermImage, UnionOf,
    conjugate_map, is_progressive, iterate_to_fix, lfp_from_empty, parse_map,
    progressive_fixed_points_check, random_map, strict_monotone_fixed_points_check,
    support_of_map,
)

ATOMS = fresh_atoms(6)


def fs(*xs):
    return AtomSet.finite(xs)


def test_support_of_map(abc):
    a, b, c = abc
    assert support_of_map(ConstUnion(fs(a, b))) == {a, b}
    assert support_of_map(ImageUnion(AtomFun.constant(a))) == {a}
    assert support_of_map(UnionOf(ConstUnion(fs(a)), PermImage(transpose(b, c)))) == {a, b, c}


def test_lfp_examples(abc):
    a, b, _ = abc
    r = lfp_from_empty(ConstUnion(fs(a, b)))
    assert (r.fixpoint, r.steps) == (fs(a, b), 1)
    r = lfp_from_empty(Identity())
    assert (r.fixpoint, r.steps) == (EMPTY, 0)
    r = lfp_from_empty(UnionOf(ConstUnion(fs(a)), PermImage(transpose(a, b))))
    assert r.chain == (EMPTY, fs(a), fs(a, b), fs(a, b))
    assert r.steps == 2


def test_iterate_examples(abc):
    a, b, c = abc
    r = iterate_to_fix(ConstUnion(fs(a)), fs(b))
    assert (r.fixpoint, r.steps) == (fs(a, b), 1)
    r = iterate_to_fix(Identity(), fs(a, c))
    assert (r.fixpoint, r.steps) == (fs(a, c), 0)
    r = iterate_to_fix(ImageUnion(AtomFun.constant(a)), fs(b))
    assert (r.fixpoint, r.steps) == (fs(a, b), 1)


def test_progressivity_violation_reported(abc):
    a, b, _ = abc
    with pytest.raises(FixpointError) as info:
        iterate_to_fix(PermImage(transpose(a, b)), fs(a))
    assert info.value.chain[0] == fs(a)


def test_bound_violation_reported(abc):
    a, b, _ = abc
    lying = BlackBoxMap(lambda Z: Z | fs(a, b), declared_support=frozenset({a}))
    with pytest.raises(FixpointError):
        lfp_from_empty(lying)


def test_honest_black_box_accepted(abc):
    a, b, _ = abc
    honest = BlackBoxMap(lambda Z: Z | fs(a, b), declared_support=frozenset({a, b}))
    assert not honest.spot_check()
    assert lfp_from_empty(honest).fixpoint == fs(a, b)


def test_max_iter_is_enforced(abc):
    a, b, c = abc
    M = ComposeOf(ConstUnion(fs(a)), PermImage(Perm.from_cycles([(a, b, c)])))
    assert lfp_from_empty(M).steps == 3
    with pytest.raises(FixpointError):
        lfp_from_empty(M, max_iter=2)


def test_progressive_flags(abc):
    a, b, _ = abc
    assert is_progressive(UnionOf(Identity(), PermImage(transpose(a, b))))
    assert not is_progressive(PermImage(transpose(a, b)))
    assert not is_progressive(ComposeOf(Identity(), PermImage(transpose(a, b))))


@given(st.integers(0, 10**6))
def test_random_maps_lfp_is_least_and_bounded(seed):
    rng = random.Random(seed)
    M = random_map(rng, ATOMS)
    S = support_of_map(M)
    r = lfp_from_empty(M)
    assert r.steps <= len(S) + 1
    assert r.fixpoint <= AtomSet.finite(S)
    assert M(r.fixpoint) == r.fixpoint
    for Z in (AtomSet.finite(S), AtomSet.finite(ATOMS)):
        # any fixed point reached from above contains the least one
        if M(Z) == Z:
            assert r.fixpoint <= Z


@given(st.integers(0, 10**6))
def test_lfp_is_equivariant(seed):
    rng = random.Random(seed)
    M = random_map(rng, ATOMS)
    for p in sample_fix((), 5, seed, ATOMS):
        assert lfp_from_empty(conjugate_map(p, M)).fixpoint == lfp_from_empty(M).fixpoint.act(p)


def test_progressive_fixed_points(abc):
    a, _, _ = abc
    for M in (ConstUnion(fs(a)), Identity(), UnionOf(ConstUnion(fs(a)), ImageUnion(AtomFun.constant(a)))):
        rep = progressive_fixed_points_check(M, 30, seed=1)
        assert rep.ok and rep.counts()["pass"] == 30
    with pytest.raises(ValueError):
        progressive_fixed_points_check(PermImage(transpose(*abc[:2])))


def test_strict_monotone_check(abc):
    a, b, c = abc
    assert strict_monotone_fixed_points_check(Identity(), 20).counts()["pass"] == 20
    rep = strict_monotone_fixed_points_check(PermImage(transpose(a, b)), 20)
    assert rep.ok and rep.counts()["pass"] == 20
    rep = strict_monotone_fixed_points_check(ConstUnion(fs(a)), 20)
    assert rep.counts()["n/a"] == 20


def test_parse_map_round_trip():
    L = Labels()
    for text in ["id", "cup{a,b}", "img(fun{a->b; tail=id})", "perm((a b c))",
                 "(cup{a} | perm((a b)))", "(id ; (cup{a} | img(fun{c->c; tail=const c})))"]:
        M = parse_map(text, L)
        assert parse_map(str(M), L) == M


def test_parse_map_errors():
    for bad in ["cup{a", "(id | )", "foo", "id id", "(id & id)"]:
        with pytest.raises(ValueError):
            parse_map(bad)
