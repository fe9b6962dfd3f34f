"""Exact counts of S-supported elements for the catalogue constructions.

Each formula is an exact count and records where it comes from:
``"counted"`` when it is the direct count of an explicit finite family
(atoms of S, injective tuples over S), ``"classified"`` when it follows
from the table-plus-tail classification of supported values.  Both kinds
are checked against the finite-model oracle by ``cross_check``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .atoms import Atom
from .fsfun import (
    atomsets_supported_by,
    enumerate_atom_funs,
    enumerate_injective_tuple_funs,
    enumerate_set_funs,
    enumerate_tuple_funs,
    injective_tuples,
)
from .oracle import FiniteModel, enumerate_supported, min_universe

__all__ = [
    "CountFormula",
    "FORMULAS",
    "count_supported",
    "symbolic_enumeration",
    "CrossCheckReport",
    "cross_check",
]


def _falling(n: int, k: int) -> int:
    return math.perm(n, k)


def _inj_tuples(s: int) -> int:
    return sum(_falling(s, k) for k in range(s + 1))


@dataclass(frozen=True)
class CountFormula:
    kind: str
    formula: Callable[..., int]
    provenance: str
    text: str


FORMULAS: dict[str, CountFormula] = {
    f.kind: f
    for f in [
        CountFormula("atoms", lambda s: s, "counted", "|S|"),
        CountFormula(
            "subsets", lambda s: 2 ** (s + 1), "classified", "2^(|S|+1)"
        ),
        CountFormula(
            "inj-tuples", _inj_tuples, "counted", "1 + A(s,1) + ... + A(s,s)"
        ),
        CountFormula("funAA", lambda s: s**s * (s + 1), "classified", "s^s * (s+1)"),
        CountFormula(
            "funASet",
            lambda s: (2 ** (s + 1)) ** s * 2 ** (s + 2),
            "classified",
            "(2^(s+1))^s * 2^(s+2)",
        ),
        CountFormula(
            "funATuple",
            lambda s, n: s ** (n * s) * (s + 1) ** n,
            "classified",
            "s^(n*s) * (s+1)^n",
        ),
        CountFormula(
            "funATfin",
            lambda s: _inj_tuples(s) ** s * _inj_tuples(s + 1),
            "classified",
            "T(s)^s * T(s+1), T = injective-tuple count",
        ),
    ]
}


def count_supported(kind: str, s: int, arity: int | None = None) -> int:
    """Number of elements of ``kind`` supported by a fixed set of ``s`` atoms.

    Python's ``0 ** 0 == 1`` makes the function-space formulas give the
    right value (one equivariant function) at ``s == 0``.
    """
    if s < 0:
        raise ValueError("support size must be non-negative")
    if kind not in FORMULAS:
        raise ValueError(f"unknown kind {kind!r}")
    f = FORMULAS[kind].formula
    if kind == "funATuple":
        if arity is None or arity < 1:
            raise ValueError("funATuple needs an arity >= 1")
        return f(s, arity)
    return f(s)


def symbolic_enumeration(kind: str, S: Iterable[Atom], arity: int | None = None) -> list:
    """The S-supported elements of ``kind`` as symbolic values."""
    S = sorted(set(S))
    if kind == "atoms":
        return list(S)
    if kind == "subsets":
        return atomsets_supported_by(S)
    if kind == "inj-tuples":
        return injective_tuples(S)
    if kind == "funAA":
        return enumerate_atom_funs(S)
    if kind == "funASet":
        return enumerate_set_funs(S)
    if kind == "funATuple":
        if arity is None:
            raise ValueError("funATuple needs an arity")
        return enumerate_tuple_funs(S, arity)
    if kind == "funATfin":
        return enumerate_injective_tuple_funs(S)
    raise ValueError(f"unknown kind {kind!r}")


@dataclass
class CrossCheckReport:
    kind: str
    support: tuple[Atom, ...]
    universe: int
    arity: int | None
    formula: int
    symbolic: int
    oracle: int
    bijection: bool
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.formula == self.symbolic == self.oracle
            and self.bijection
            and not self.mismatches
        )

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "support": [str(a) for a in self.support],
            "universe": self.universe,
            "arity": self.arity,
            "formula": self.formula,
            "symbolic": self.symbolic,
            "oracle": self.oracle,
            "bijection": self.bijection,
            "ok": self.ok,
            "mismatches": list(self.mismatches),
        }

    def __str__(self) -> str:
        status = "OK" if self.ok else "MISMATCH"
        sup = "{" + ",".join(map(str, self.support)) + "}"
        ar = f" n={self.arity}" if self.arity is not None else ""
        line = (
            f"{self.kind}{ar} S={sup} N={self.universe}: formula {self.formula},"
            f" symbolic {self.symbolic}, oracle {self.oracle} [{status}]"
        )
        return "\n".join([line, *("  " + m for m in self.mismatches)])


def cross_check(
    kind: str, S: Iterable[Atom], N: int, arity: int | None = None
) -> CrossCheckReport:
    """Compare formula, symbolic enumeration and oracle enumeration.

    Symbolic elements are embedded into a universe of ``N`` atoms containing
    ``S``; the report records whether the embedding is injective and lands
    exactly on the oracle's enumeration.
    """
    S = tuple(sorted(set(S)))
    need = max(2 * len(S) + 2, min_universe(kind, len(S)))
    if N < need:
        raise ValueError(f"universe {N} below threshold {need} for |S|={len(S)}")
    model = FiniteModel.of_size(N, include=S)
    formula = count_supported(kind, len(S), arity)
    sym = symbolic_enumeration(kind, S, arity)
    orc = enumerate_supported(model, kind, S, arity)
    embedded = [model.embed(x) for x in sym]
    mismatches = []
    emb_set, orc_set = set(embedded), set(orc)
    if len(emb_set) != len(embedded):
        mismatches.append("embedding of symbolic elements is not injective")
    for x in sym:
        if model.embed(x) not in orc_set:
            mismatches.append(f"symbolic {x} has no oracle counterpart")
    missing = orc_set - emb_set
    if missing:
        mismatches.append(f"{len(missing)} oracle elements have no symbolic counterpart")
    return CrossCheckReport(
        kind=kind,
        support=S,
        universe=N,
        arity=arity,
        formula=formula,
        symbolic=len(sym),
        oracle=len(orc),
        bijection=emb_set == orc_set and len(emb_set) == len(embedded),
        mismatches=mismatches,
    )
