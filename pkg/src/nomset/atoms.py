"""Atoms and finitary permutations.

Atoms are opaque: the only meaningful operation on them is equality.  The
integer id exists so atoms can be hashed, printed and sorted for display;
no semantic operation in this package depends on the numeric order.

Permutations are stored as fixed-point-free move tables, so two ``Perm``
values are equal exactly when they denote the same bijection of A.
"""
from __future__ import annotations

import itertools
import math
import random
import re
import threading
from dataclasses import dataclass, field
from functools import reduce
from typing import Iterable, Mapping

__all__ = [
    "Atom",
    "Perm",
    "Labels",
    "fresh_atoms",
    "transpose",
    "compose",
    "inverse",
    "apply",
    "perm_order",
    "sample_fix",
    "parse_perm",
]

_counter = itertools.count()
_counter_lock = threading.Lock()


@dataclass(frozen=True, order=True)
class Atom:
    id: int
    name: str | None = field(default=None, compare=False)

    def __eq__(self, other) -> bool:
        return other.__class__ is Atom and other.id == self.id

    def __hash__(self) -> int:
        return hash(self.id)

    def __str__(self) -> str:
        return self.name if self.name is not None else f"a{self.id}"

    __repr__ = __str__


def fresh_atoms(n: int, names: Iterable[str] | None = None) -> list[Atom]:
    """Return ``n`` atoms never issued before in this process.

    ``names`` optionally attaches display labels; labels play no role in
    equality.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    labels = list(names) if names is not None else [None] * n
    if len(labels) != n:
        raise ValueError("need exactly one name per atom")
    with _counter_lock:
        ids = [next(_counter) for _ in range(n)]
    return [Atom(i, lab) for i, lab in zip(ids, labels)]


class Labels:
    """Binds textual labels to fresh atoms, issuing a new atom on first use."""

    def __init__(self, names: Iterable[str] = ()):
        self._atoms: dict[str, Atom] = {}
        for nm in names:
            self[nm]

    def __getitem__(self, name: str) -> Atom:
        if name not in self._atoms:
            (self._atoms[name],) = fresh_atoms(1, [name])
        return self._atoms[name]

    def __contains__(self, name: str) -> bool:
        return name in self._atoms

    def atoms(self, names: Iterable[str]) -> list[Atom]:
        return [self[nm] for nm in names]

    def items(self):
        return self._atoms.items()


class Perm:
    """A finitary permutation of A, stored as its non-trivial moves."""

    __slots__ = ("_moves", "_hash")

    def __init__(self, moves: Mapping[Atom, Atom] | None = None):
        table = {a: b for a, b in (moves or {}).items() if a != b}
        if set(table) != set(table.values()):
            raise ValueError(f"not a permutation of a finite carrier: {table}")
        self._moves = table
        self._hash = hash(frozenset(table.items()))

    @classmethod
    def identity(cls) -> Perm:
        return cls()

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[Atom]]) -> Perm:
        result = cls()
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated atom in cycle {cyc}")
            moves = {cyc[i]: cyc[(i + 1) % len(cyc)] for i in range(len(cyc))}
            result = result * cls(moves)
        return result

    @property
    def moves(self) -> Mapping[Atom, Atom]:
        return dict(self._moves)

    def moved(self) -> frozenset[Atom]:
        """The atoms not fixed by this permutation (its least support)."""
        return frozenset(self._moves)

    def __call__(self, a: Atom) -> Atom:
        return self._moves.get(a, a)

    def __mul__(self, other: Perm) -> Perm:
        # (p * q)(a) == p(q(a))
        carrier = self._moves.keys() | other._moves.keys()
        return Perm({a: self(other(a)) for a in carrier})

    def inverse(self) -> Perm:
        return Perm({b: a for a, b in self._moves.items()})

    def __pow__(self, k: int) -> Perm:
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return not self._moves

    def cycles(self) -> list[tuple[Atom, ...]]:
        seen: set[Atom] = set()
        out = []
        for start in sorted(self._moves):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            nxt = self._moves[start]
            while nxt != start:
                cyc.append(nxt)
                seen.add(nxt)
                nxt = self._moves[nxt]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self._moves == other._moves

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        if not self._moves:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles())

    def __repr__(self) -> str:
        return f"Perm{self}"


def transpose(a: Atom, b: Atom) -> Perm:
    return Perm({a: b, b: a})


def compose(p: Perm, q: Perm) -> Perm:
    """Right-to-left composition: ``compose(p, q)(a) == p(q(a))``."""
    return p * q


def inverse(p: Perm) -> Perm:
    return p.inverse()


def apply(p: Perm, a: Atom) -> Atom:
    return p(a)


def perm_order(p: Perm) -> int:
    """Least m >= 1 with p**m the identity (lcm of the cycle lengths)."""
    return p.order()


_spares: list[Atom] = []
_spares_lock = threading.Lock()


def _spare_atoms() -> list[Atom]:
    # Reserved once per process so sample_fix is reproducible for a fixed seed.
    with _spares_lock:
        if not _spares:
            _spares.extend(fresh_atoms(4, ["s0", "s1", "s2", "s3"]))
    return list(_spares)


def sample_fix(
    S: Iterable[Atom], k: int, seed: int, pool: Iterable[Atom] = ()
) -> list[Perm]:
    """Sample ``k`` permutations fixing every atom of ``S``.

    The permutations move atoms drawn from ``pool`` (minus ``S``) together
    with a few reserved spare atoms, so a pool of the atoms mentioned by the
    element under test makes the sample informative.  The first permutation
    is never the identity.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    fixed = frozenset(S)
    candidates = sorted((set(pool) | set(_spare_atoms())) - fixed)
    rng = random.Random(seed)
    out = []
    for i in range(k):
        size = rng.randint(2, len(candidates))
        chosen = rng.sample(candidates, size)
        shuffled = chosen[:]
        rng.shuffle(shuffled)
        p = Perm(dict(zip(chosen, shuffled)))
        if i == 0 and p.is_identity():
            p = transpose(chosen[0], chosen[1])
        out.append(p)
    return out


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, labels: Labels) -> Perm:
    """Parse cycle notation such as ``(a b)(c d e)``; ``()`` is the identity."""
    stripped = text.strip()
    if not re.fullmatch(r"(\s*\([^()]*\)\s*)+", stripped):
        raise ValueError(f"bad cycle notation: {text!r}")
    cycles = []
    for body in _CYCLE.findall(stripped):
        names = body.replace(",", " ").split()
        if names:
            cycles.append(labels.atoms(names))
    return Perm.from_cycles(cycles)
