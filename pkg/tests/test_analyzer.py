import pytest

from nomset.analyzer import (
    AtomsA, Fun, InjectiveTuplesOfLength, Nat, ParseError, PFin, PFs, Power, Prod, Result,
    SizedSubsets, Sum, TFin, analyze, check_chain, check_witness, parse_expr,
    supp_of_uniform_family, witness,
)
from nomset.atoms import fresh_atoms
from nomset.counting import cross_check
from nomset.fscore import AtomSet, least_support
from nomset.fsfun import AtomFun
from nomset.oracle import FiniteModel, check_support

UI = Result.UNIFORMLY_INFINITE
NUI = Result.NON_UNIFORMLY_INFINITE
UNKNOWN = Result.UNKNOWN


def test_parse_examples():
    assert parse_expr("A") == AtomsA()
    assert parse_expr("Pfin(A) x Nat") == Prod(PFin(AtomsA()), Nat())
    assert parse_expr("Fun(A, Pfs(A))") == Fun(AtomsA(), PFs(AtomsA()))
    assert parse_expr("A^3") == Power(AtomsA(), 3)


def test_precedence_and_grouping():
    assert parse_expr("A + A x Nat") == Sum(AtomsA(), Prod(AtomsA(), Nat()))
    assert parse_expr("(A + A) x Nat") == Prod(Sum(AtomsA(), AtomsA()), Nat())
    assert parse_expr("A × Tfin") == Prod(AtomsA(), TFin())


@pytest.mark.parametrize("text", ["A x (Nat + Tfin)", "Pfs(Pfin(A)) + Fun(A, A^2)", "Pcofin(A x A)"])
def test_print_parse_round_trip(text):
    e = parse_expr(text)
    assert parse_expr(str(e)) == e


@pytest.mark.parametrize("text,offset", [("Pfs(", 4), ("A x Foo", 4), ("A ? A", 2), ("A^0", 2), ("A)", 1)])
def test_parse_errors_carry_offsets(text, offset):
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    assert info.value.offset == offset


def test_unknown_identifier_message():
    with pytest.raises(ParseError, match="unknown identifier"):
        parse_expr("Pow(A)")


GOLDEN = [
    ("A", NUI), ("Pfs(A)", NUI), ("Tfin", NUI), ("Fun(A, A)", NUI), ("Fun(A, Pfs(A))", NUI),
    ("Fun(A, A^2)", NUI), ("Fun(A, Tfin)", NUI), ("A x A", NUI), ("A + Pfs(A)", NUI),
    ("Pfin(A)", NUI), ("Pcofin(A)", NUI), ("Pus(A)", NUI), ("Pfin(Tfin x A)", NUI),
    ("Tdelta", UI), ("Pfs(Pfin(A))", UI), ("Pfs(Pfs(A))", UI), ("Pfs(Tfin)", UI), ("Nat", UI),
    ("Nat x A", UI), ("A + Tdelta", UI), ("Pfin(Nat)", UI), ("Pcofin(Tdelta)", UI),
    ("Pus(Nat)", UI), ("Pfs(Nat)", UI),
    ("Pfs(A x A)", UNKNOWN), ("Fun(Nat, A)", UNKNOWN), ("Fun(A, Pfin(A))", UNKNOWN),
]


@pytest.mark.parametrize("text,expected", GOLDEN)
def test_golden_verdicts(text, expected):
    v = analyze(text)
    assert v.result is expected
    assert v.trace and all(t.rule and t.anchor for t in v.trace)
    if expected is UI:
        assert v.witness is not None
        assert check_witness(v.witness, k=20, samples=50).ok
    else:
        assert v.witness is None
    if expected is UNKNOWN:
        assert v.reason


def test_derived_rules_are_flagged():
    v = analyze("Nat x A")
    assert v.trace[-1].rule == "product-ui" and v.trace[-1].derived
    assert not analyze("Pfs(Pfin(A))").trace[-1].derived


def test_pus_atoms_canonical_and_trivial_flag():
    assert "pus-atoms-canonical" in [t.rule for t in analyze("Pus(A)").trace]
    assert "pus-trivial" in [t.rule for t in analyze("Pus(Nat)").trace]


def test_analysis_is_deterministic():
    for text, _ in GOLDEN:
        a, b = analyze(text), analyze(text)
        assert a.result is b.result
        assert [t.rule for t in a.trace] == [t.rule for t in b.trace]


def test_subexpression_verdicts_are_stable():
    # the parent's trace contains the child's trace unchanged
    child = analyze("Pfs(Pfin(A))")
    parent = analyze("Pfs(Pfin(A)) x A")
    assert [t.rule for t in parent.trace][: len(child.trace)] == [t.rule for t in child.trace]


def test_witness_examples():
    assert witness("Nat").first(4) == [0, 1, 2, 3]
    w = witness("Tdelta")
    (a,) = w.common_support
    assert w.first(3) == [(), (a,), (a, a)]
    w = witness("Pfs(Pfin(A))")
    assert w.common_support == frozenset()
    assert w.first(3) == [SizedSubsets(i, AtomsA()) for i in range(3)]
    with pytest.raises(ValueError):
        witness("A")


def test_witness_json_shape():
    d = analyze("Tdelta").to_dict(3)
    assert d["result"] == "UniformlyInfinite"
    assert set(d["witness"]) == {"support", "description", "first_k"}
    assert len(d["witness"]["first_k"]) == 3


def test_sized_subsets_are_equivariant_in_finite_models():
    m = FiniteModel.of_size(5)
    for i in range(4):
        X = SizedSubsets(i, AtomsA()).materialize(m.universe)
        assert check_support(m, X, ())
    for i in range(3):
        X = SizedSubsets(i, PFin(AtomsA())).materialize(m.universe)
        assert check_support(m, X, ())
    for i in range(4):
        Y = InjectiveTuplesOfLength(i).materialize(m.universe)
        assert check_support(m, Y, ())


@pytest.mark.parametrize("text,kind,arity", [
    ("A", "atoms", None), ("Pfs(A)", "subsets", None), ("Tfin", "inj-tuples", None),
    ("Fun(A, A)", "funAA", None), ("Fun(A, A^2)", "funATuple", 2), ("Fun(A, Tfin)", "funATfin", None),
])
def test_nui_catalogue_is_finite_per_support(text, kind, arity):
    assert analyze(text).result is NUI
    for s in range(3):
        S = fresh_atoms(s)
        assert cross_check(kind, S, max(2 * s + 2, s + 3), arity).ok


def test_supp_of_uniform_family(abc):
    a, b, _ = abc
    assert supp_of_uniform_family([AtomSet.finite([a]), AtomSet.finite([a, b])]) == {a, b}
    assert supp_of_uniform_family([]) == frozenset()
    fam = [AtomFun.constant(a), AtomFun.identity()]
    assert supp_of_uniform_family(fam) == {a}
    assert least_support(frozenset(fam), {a, b}).support == {a}


def test_check_chain(abc):
    a, b, c = abc
    r = check_chain(range(10), lambda x, y: x < y)
    assert r.common_support == frozenset() and r.verified
    rank = {a: 0, b: 1, c: 2}
    r = check_chain([a, b, c], lambda x, y: rank[x] < rank[y])
    assert r.common_support >= {a, b, c} and r.verified
    chain = [AtomSet.finite([]), AtomSet.finite([a]), AtomSet.finite([a, b])]
    r = check_chain(chain, lambda x, y: x < y)
    assert r.common_support == {a, b} and r.verified


def test_check_chain_rejects_partial_orders(abc):
    a, b, _ = abc
    with pytest.raises(ValueError):
        check_chain([AtomSet.finite([a]), AtomSet.finite([b])], lambda x, y: x < y)
