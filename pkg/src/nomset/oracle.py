"""Brute-force finite model used as ground truth for the symbolic layer.

A ``FiniteModel`` is a finite universe of concrete atoms acted on by its
transpositions.  Concrete elements are built from atoms with ``tuple`` and
``frozenset``; a function is its graph, a frozenset of ``(x, f(x))`` pairs,
so the structural action on the graph is the conjugation action.

Supports are checked against transpositions of ``universe - S`` only.
Those generate every permutation of the universe fixing ``S`` pointwise, so
invariance under them is invariance under the whole stabiliser.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .atoms import Atom, Perm, fresh_atoms, transpose
from .fscore import AtomSet
from .fsfun import AtomFun, AtomSetFun, TupleFun

__all__ = [
    "FiniteModel",
    "KINDS",
    "check_support",
    "enumerate_supported",
    "min_universe",
    "no_total_order_on_atoms",
    "brute_force_functions",
]

KINDS = ("atoms", "subsets", "inj-tuples", "funAA", "funASet", "funATuple", "funATfin")


def _act(p: Perm, x: Any) -> Any:
    if isinstance(x, Atom):
        return p(x)
    if isinstance(x, tuple):
        return tuple(_act(p, y) for y in x)
    if isinstance(x, frozenset):
        return frozenset(_act(p, y) for y in x)
    return x


@dataclass(frozen=True)
class FiniteModel:
    universe: tuple[Atom, ...]

    def __post_init__(self):
        if len(self.universe) < 2:
            raise ValueError("a finite model needs at least two atoms")
        if len(set(self.universe)) != len(self.universe):
            raise ValueError("universe atoms must be distinct")

    @classmethod
    def of_size(cls, n: int, include: Iterable[Atom] = ()) -> FiniteModel:
        """Universe of ``n`` atoms containing ``include`` plus fresh ones."""
        base = list(dict.fromkeys(include))
        if len(base) > n:
            raise ValueError("universe smaller than the atoms it must include")
        return cls(tuple(base + fresh_atoms(n - len(base))))

    @property
    def size(self) -> int:
        return len(self.universe)

    def free(self, S: Iterable[Atom]) -> list[Atom]:
        fixed = set(S)
        return [a for a in self.universe if a not in fixed]

    def generators(self, S: Iterable[Atom] = ()) -> list[Perm]:
        """Transpositions of ``universe - S``; they generate the stabiliser of S."""
        return [transpose(a, b) for a, b in itertools.combinations(self.free(S), 2)]

    def act(self, p: Perm, x: Any) -> Any:
        return _act(p, x)

    def subsets(self) -> list[frozenset[Atom]]:
        u = self.universe
        return [frozenset(c) for r in range(len(u) + 1) for c in itertools.combinations(u, r)]

    def embed(self, x: Any) -> Any:
        """Concrete counterpart of a symbolic value inside this universe.

        ``AtomSet`` maps to its trace on the universe (cofinite sets become
        large finite ones) and functions map to their graphs.
        """
        if isinstance(x, AtomSet):
            inside = frozenset(a for a in self.universe if a in x)
            return inside
        if isinstance(x, (AtomFun, AtomSetFun, TupleFun)):
            return frozenset((a, self.embed(x(a))) for a in self.universe)
        if isinstance(x, tuple):
            return tuple(self.embed(y) for y in x)
        if isinstance(x, frozenset):
            return frozenset(self.embed(y) for y in x)
        return x


@lru_cache(maxsize=256)
def _generators(model: FiniteModel, S: frozenset[Atom]) -> tuple[Perm, ...]:
    if not S <= set(model.universe):
        raise ValueError("S must be a subset of the universe")
    return tuple(model.generators(S))


def check_support(model: FiniteModel, element: Any, S: Iterable[Atom]) -> bool:
    """True iff every permutation of the universe fixing ``S`` fixes ``element``."""
    return all(_act(t, element) == element for t in _generators(model, frozenset(S)))


def min_universe(kind: str, s: int) -> int:
    """Smallest universe on which the oracle agrees with the infinite theory.

    Atoms and tuples need two atoms outside S so that free atoms are moved.
    Set- and function-valued kinds need ``2|S| + 2`` to separate finite from
    cofinite traces, and at least three free atoms so that the value at the
    orbit representative is pinned down (with only two, the swap of the
    free atoms is itself invariant).
    """
    if kind in ("atoms", "inj-tuples"):
        return s + 2
    if kind in KINDS:
        return max(2 * s + 2, s + 3)
    raise ValueError(f"unknown kind {kind!r}")


def _tuple_values(model: FiniteModel, n: int) -> list[tuple]:
    return list(itertools.product(model.universe, repeat=n))


def _injective_values(model: FiniteModel) -> list[tuple]:
    u = model.universe
    return [t for k in range(len(u) + 1) for t in itertools.permutations(u, k)]


def _extended_functions(model: FiniteModel, S: frozenset[Atom], values: Sequence) -> list:
    """S-supported functions universe -> values by orbit-representative extension.

    Values on S must themselves be S-supported, and the value at the
    representative ``r`` must be supported by ``S | {r}``; both are
    necessary conditions.  The rest of the graph is forced by
    ``f(x) = (r x) . f(r)`` and every candidate is then checked in full.
    """
    base = sorted(S)
    free = model.free(S)
    r, others = free[0], free[1:]
    on_s = [v for v in values if check_support(model, v, S)]
    at_r = [v for v in values if check_support(model, v, S | {r})]
    found = []
    for vs in itertools.product(on_s, repeat=len(base)):
        for vr in at_r:
            graph = set(zip(base, vs))
            graph.add((r, vr))
            graph.update((x, _act(transpose(r, x), vr)) for x in others)
            g = frozenset(graph)
            if check_support(model, g, S):
                found.append(g)
    return found


def brute_force_functions(model: FiniteModel, S: Iterable[Atom], values: Sequence) -> list:
    """Every S-supported function by exhaustive search over all graphs (tiny models only)."""
    S = frozenset(S)
    u = model.universe
    out = []
    for vals in itertools.product(values, repeat=len(u)):
        g = frozenset(zip(u, vals))
        if check_support(model, g, S):
            out.append(g)
    return out


def enumerate_supported(
    model: FiniteModel, kind: str, S: Iterable[Atom], arity: int | None = None
) -> list:
    """All concrete elements of ``kind`` in the model supported by ``S``."""
    S = frozenset(S)
    if model.size < min_universe(kind, len(S)):
        raise ValueError(
            f"universe of size {model.size} too small for {kind} with |S|={len(S)};"
            f" need {min_universe(kind, len(S))}"
        )
    if kind == "atoms":
        cands: Sequence = model.universe
    elif kind == "subsets":
        cands = model.subsets()
    elif kind == "inj-tuples":
        cands = _injective_values(model)
    elif kind == "funAA":
        return _extended_functions(model, S, model.universe)
    elif kind == "funASet":
        return _extended_functions(model, S, model.subsets())
    elif kind == "funATuple":
        if arity is None or arity < 1:
            raise ValueError("funATuple needs an arity >= 1")
        return _extended_functions(model, S, _tuple_values(model, arity))
    elif kind == "funATfin":
        return _extended_functions(model, S, _injective_values(model))
    else:
        raise ValueError(f"unknown kind {kind!r}")
    return [x for x in cands if check_support(model, x, S)]


def no_total_order_on_atoms(model: FiniteModel, S: Iterable[Atom]) -> bool:
    """Check exhaustively that no strict total order on the universe is S-supported.

    Returns True when every one of the ``N!`` orders is moved by some
    transposition of two atoms outside ``S``.
    """
    S = frozenset(S)
    gens = model.generators(S)
    if len(model.free(S)) < 2:
        raise ValueError("need at least two atoms outside S")
    for ranking in itertools.permutations(model.universe):
        less = frozenset(itertools.combinations(ranking, 2))
        if all(_act(t, less) == less for t in gens):
            return False
    return True
