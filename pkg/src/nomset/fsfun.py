"""Symbolic finitely supported functions out of A.

An S-supported function on A is determined by its values on S together
with its value at one atom outside S: the pointwise stabiliser of S acts
transitively on A minus S, so that single value fixes the behaviour on the
whole complement.  Each class below stores a table on a finite carrier and
a *tail* describing that uniform behaviour:

* ``AtomFun`` (A -> A): tail is the identity or a constant ``c`` in the
  carrier.
* ``AtomSetFun`` (A -> finite/cofinite subsets of A): tail is one of four
  shapes, ``{a} | X``, ``X``, ``A - ({a} | X)`` or ``A - X`` with ``X``
  inside the carrier.
* ``TupleFun`` (A -> A^n, or A -> injective tuples): tail is a pattern whose
  entries are carrier atoms or ``SELF``.

Equality is denotational: values compare by their normalised form, whose
carrier is the least support.
"""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .atoms import Atom, Labels, Perm
from .fscore import AtomSet

__all__ = [
    "AtomFun",
    "AtomSetFun",
    "SetTail",
    "TailKind",
    "TupleFun",
    "SELF",
    "make_atom_fun",
    "apply_fun",
    "compose_funs",
    "normalize",
    "conjugate",
    "is_injective",
    "is_surjective",
    "enumerate_atom_funs",
    "enumerate_set_funs",
    "apply_set_fun",
    "enumerate_tuple_funs",
    "enumerate_injective_tuple_funs",
    "atomsets_supported_by",
    "injective_tuples",
    "parse_fun",
]


def _ids(atoms: Iterable[Atom]) -> tuple[int, ...]:
    return tuple(sorted(a.id for a in atoms))


def _set_key(X: AtomSet) -> tuple:
    return (X.cofinite, _ids(X.atoms))


# ---------------------------------------------------------------- A -> A


@dataclass(frozen=True, eq=False)
class AtomFun:
    """A finitely supported function A -> A.

    ``tail`` is ``None`` when atoms outside the carrier are fixed, otherwise
    the constant every such atom is sent to.
    """

    carrier: frozenset[Atom]
    table: tuple[tuple[Atom, Atom], ...]
    tail: Atom | None = None

    @cached_property
    def mapping(self) -> dict[Atom, Atom]:
        return dict(self.table)

    def __call__(self, a: Atom) -> Atom:
        if a in self.carrier:
            return self.mapping[a]
        return a if self.tail is None else self.tail

    def _default(self, s: Atom) -> Atom:
        return s if self.tail is None else self.tail

    @cached_property
    def normalized(self) -> AtomFun:
        core = {s for s in self.carrier if self.mapping[s] != self._default(s)}
        if self.tail is not None:
            core.add(self.tail)
        keep = core | {self.mapping[s] for s in core}
        return AtomFun(
            frozenset(keep),
            tuple(sorted((s, self.mapping[s]) for s in keep)),
            self.tail,
        )

    def support(self) -> frozenset[Atom]:
        return self.normalized.carrier

    def act(self, p: Perm) -> AtomFun:
        return conjugate(p, self)

    @cached_property
    def _key(self) -> tuple:
        n = self.normalized
        return (
            _ids(n.carrier),
            tuple((s.id, v.id) for s, v in n.table),
            None if n.tail is None else n.tail.id,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, AtomFun) and self._key == other._key

    def __hash__(self) -> int:
        return hash(("AtomFun", self._key))

    def sort_key(self) -> tuple:
        k = self._key
        return (len(k[0]), k[0], k[1], -1 if k[2] is None else k[2])

    def __str__(self) -> str:
        rows = ", ".join(f"{s}->{v}" for s, v in self.table)
        tail = "id" if self.tail is None else f"const {self.tail}"
        return "fun{" + (rows + "; " if rows else "") + f"tail={tail}}}"

    __repr__ = __str__

    @classmethod
    def identity(cls) -> AtomFun:
        return cls(frozenset(), ())

    @classmethod
    def constant(cls, c: Atom) -> AtomFun:
        return cls(frozenset({c}), ((c, c),), c)

    @classmethod
    def from_perm(cls, p: Perm) -> AtomFun:
        moved = p.moved()
        return cls(moved, tuple(sorted((a, p(a)) for a in moved)))


def make_atom_fun(
    S: Iterable[Atom], table: Mapping[Atom, Atom], tail: Atom | None = None
) -> AtomFun:
    """Build an ``AtomFun`` after checking it is supported by ``S``.

    Raises ``ValueError`` if the table is not total on ``S``, sends an atom
    outside ``S``, or the constant tail lies outside ``S``.
    """
    carrier = frozenset(S)
    if set(table) != carrier:
        raise ValueError("table must be defined exactly on the carrier")
    bad = {v for v in table.values() if v not in carrier}
    if bad:
        raise ValueError(f"table values {sorted(bad)} fall outside the carrier")
    if tail is not None and tail not in carrier:
        raise ValueError(f"constant tail {tail} is not in the carrier")
    return AtomFun(carrier, tuple(sorted(table.items())), tail)


def apply_fun(f: AtomFun, a: Atom) -> Atom:
    return f(a)


def compose_funs(f: AtomFun, g: AtomFun) -> AtomFun:
    """``f o g``: apply ``g`` first, then ``f``."""
    carrier = f.carrier | g.carrier
    table = {s: f(g(s)) for s in carrier}
    tail = None if g.tail is None else f(g.tail)
    if g.tail is None and f.tail is not None:
        tail = f.tail
    return make_atom_fun(carrier, table, tail).normalized


# ---------------------------------------------------- A -> P_fs(A)


class TailKind(enum.Enum):
    FIN_WITH_SELF = "self+"
    FIN_CONST = "const"
    COFIN_WITHOUT_SELF = "cofin-self+"
    COFIN_CONST = "cofin-const"


@dataclass(frozen=True)
class SetTail:
    kind: TailKind
    X: frozenset[Atom] = frozenset()

    def value_at(self, a: Atom) -> AtomSet:
        k = self.kind
        if k is TailKind.FIN_WITH_SELF:
            return AtomSet.finite(self.X | {a})
        if k is TailKind.FIN_CONST:
            return AtomSet.finite(self.X)
        if k is TailKind.COFIN_WITHOUT_SELF:
            return AtomSet.cofinite_of(self.X | {a})
        return AtomSet.cofinite_of(self.X)

    def act(self, p: Perm) -> SetTail:
        return SetTail(self.kind, frozenset(p(x) for x in self.X))

    def __str__(self) -> str:
        body = "{" + ",".join(map(str, sorted(self.X))) + "}"
        return self.kind.value + body


@dataclass(frozen=True, eq=False)
class AtomSetFun:
    carrier: frozenset[Atom]
    table: tuple[tuple[Atom, AtomSet], ...]
    tail: SetTail

    def __post_init__(self):
        if {s for s, _ in self.table} != self.carrier:
            raise ValueError("table must be defined exactly on the carrier")
        for s, v in self.table:
            if not v.atoms <= self.carrier:
                raise ValueError(f"value {v} at {s} is not supported by the carrier")
        if not self.tail.X <= self.carrier:
            raise ValueError("tail parameters must lie in the carrier")

    @cached_property
    def mapping(self) -> dict[Atom, AtomSet]:
        return dict(self.table)

    def __call__(self, a: Atom) -> AtomSet:
        if a in self.carrier:
            return self.mapping[a]
        return self.tail.value_at(a)

    @cached_property
    def normalized(self) -> AtomSetFun:
        core = {s for s in self.carrier if self.mapping[s] != self.tail.value_at(s)}
        keep = set(core) | set(self.tail.X)
        for s in core:
            keep |= self.mapping[s].atoms
        return AtomSetFun(
            frozenset(keep),
            tuple(sorted(((s, self.mapping[s]) for s in keep), key=lambda r: r[0])),
            self.tail,
        )

    def support(self) -> frozenset[Atom]:
        return self.normalized.carrier

    def act(self, p: Perm) -> AtomSetFun:
        return AtomSetFun(
            frozenset(p(s) for s in self.carrier),
            tuple(sorted(((p(s), v.act(p)) for s, v in self.table), key=lambda r: r[0])),
            self.tail.act(p),
        )

    @cached_property
    def _key(self) -> tuple:
        n = self.normalized
        return (
            _ids(n.carrier),
            tuple((s.id, _set_key(v)) for s, v in n.table),
            (n.tail.kind.value, _ids(n.tail.X)),
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, AtomSetFun) and self._key == other._key

    def __hash__(self) -> int:
        return hash(("AtomSetFun", self._key))

    def sort_key(self) -> tuple:
        return (len(self._key[0]),) + self._key

    def __str__(self) -> str:
        rows = ", ".join(f"{s}->{v}" for s, v in self.table)
        return "fun{" + (rows + "; " if rows else "") + f"tail={self.tail}}}"

    __repr__ = __str__


def apply_set_fun(f: AtomSetFun, a: Atom) -> AtomSet:
    return f(a)


def atomsets_supported_by(S: Iterable[Atom]) -> list[AtomSet]:
    """All subsets of A supported by ``S``: subsets of S and their complements."""
    base = sorted(S)
    out = []
    for r in range(len(base) + 1):
        for combo in itertools.combinations(base, r):
            out.append(AtomSet.finite(combo))
            out.append(AtomSet.cofinite_of(combo))
    return sorted(out, key=_set_key)


def _subsets(base: Sequence[Atom]) -> list[frozenset[Atom]]:
    return [
        frozenset(c)
        for r in range(len(base) + 1)
        for c in itertools.combinations(base, r)
    ]


# ---------------------------------------------------- A -> A^n, A -> T_fin(A)


class _SelfMarker:
    """Pattern entry standing for the argument atom itself."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "SELF"

    def __reduce__(self):
        return (_SelfMarker, ())


SELF = _SelfMarker()


@dataclass(frozen=True, eq=False)
class TupleFun:
    """A finitely supported function from A into tuples of atoms.

    With ``injective=False`` every value has the same length (A -> A^n).
    With ``injective=True`` values are injective tuples of any length
    (A -> T_fin(A)); the pattern then holds at most one ``SELF``.
    """

    carrier: frozenset[Atom]
    table: tuple[tuple[Atom, tuple[Atom, ...]], ...]
    pattern: tuple
    injective: bool = False

    def __post_init__(self):
        if {s for s, _ in self.table} != self.carrier:
            raise ValueError("table must be defined exactly on the carrier")
        for s, row in self.table:
            if not set(row) <= self.carrier:
                raise ValueError(f"row {row} at {s} leaves the carrier")
            if not self.injective and len(row) != len(self.pattern):
                raise ValueError("all rows must have the pattern's arity")
            if self.injective and len(set(row)) != len(row):
                raise ValueError(f"row {row} is not injective")
        fixed = [x for x in self.pattern if x is not SELF]
        if not set(fixed) <= self.carrier:
            raise ValueError("pattern atoms must lie in the carrier")
        if self.injective and len(set(self.pattern)) != len(self.pattern):
            raise ValueError("pattern of an injective-tuple function must be injective")

    @property
    def arity(self) -> int | None:
        if self.injective:
            return None
        return len(self.pattern)

    @cached_property
    def mapping(self) -> dict[Atom, tuple[Atom, ...]]:
        return dict(self.table)

    def _fill(self, a: Atom) -> tuple[Atom, ...]:
        return tuple(a if x is SELF else x for x in self.pattern)

    def __call__(self, a: Atom) -> tuple[Atom, ...]:
        if a in self.carrier:
            return self.mapping[a]
        return self._fill(a)

    @cached_property
    def normalized(self) -> TupleFun:
        core = {s for s in self.carrier if self.mapping[s] != self._fill(s)}
        keep = set(core) | {x for x in self.pattern if x is not SELF}
        for s in core:
            keep |= set(self.mapping[s])
        return TupleFun(
            frozenset(keep),
            tuple(sorted(((s, self.mapping[s]) for s in keep), key=lambda r: r[0])),
            self.pattern,
            self.injective,
        )

    def support(self) -> frozenset[Atom]:
        return self.normalized.carrier

    def act(self, p: Perm) -> TupleFun:
        return TupleFun(
            frozenset(p(s) for s in self.carrier),
            tuple(
                sorted(
                    ((p(s), tuple(p(x) for x in row)) for s, row in self.table),
                    key=lambda r: r[0],
                )
            ),
            tuple(x if x is SELF else p(x) for x in self.pattern),
            self.injective,
        )

    def component(self, i: int) -> AtomFun:
        """The i-th coordinate function A -> A (fixed-arity case only)."""
        if self.injective:
            raise ValueError("components are defined for fixed arity only")
        x = self.pattern[i]
        return make_atom_fun(
            self.carrier,
            {s: row[i] for s, row in self.table},
            None if x is SELF else x,
        )

    @cached_property
    def _key(self) -> tuple:
        n = self.normalized
        return (
            _ids(n.carrier),
            tuple((s.id, tuple(x.id for x in row)) for s, row in n.table),
            tuple(-1 if x is SELF else x.id for x in n.pattern),
            n.injective,
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, TupleFun) and self._key == other._key

    def __hash__(self) -> int:
        return hash(("TupleFun", self._key))

    def sort_key(self) -> tuple:
        k = self._key
        return (len(k[0]), len(k[2])) + k

    def __str__(self) -> str:
        def tup(t):
            return "(" + ",".join("self" if x is SELF else str(x) for x in t) + ")"

        rows = ", ".join(f"{s}->{tup(r)}" for s, r in self.table)
        return "fun{" + (rows + "; " if rows else "") + f"tail={tup(self.pattern)}}}"

    __repr__ = __str__


def injective_tuples(atoms: Iterable[Atom], extra: Sequence = ()) -> list[tuple]:
    """All injective tuples (including the empty one) over ``atoms`` plus ``extra``."""
    base = sorted(atoms) + list(extra)
    out = []
    for k in range(len(base) + 1):
        out.extend(itertools.permutations(base, k))
    return out


# ---------------------------------------------------------------- generic ops


def normalize(f):
    """Return ``f`` with its carrier cut down to the least support."""
    return f.normalized


def conjugate(p: Perm, f):
    """The action on functions: ``x -> p(f(p^-1 x))``."""
    if isinstance(f, AtomFun):
        return AtomFun(
            frozenset(p(s) for s in f.carrier),
            tuple(sorted((p(s), p(v)) for s, v in f.table)),
            None if f.tail is None else p(f.tail),
        )
    return f.act(p)


def is_injective(f: AtomFun) -> bool:
    if f.tail is not None:
        # infinitely many atoms outside the carrier share the value f.tail
        return False
    values = [v for _, v in f.table]
    return len(set(values)) == len(values)


def is_surjective(f: AtomFun) -> bool:
    # Outside the carrier the image is either everything (identity tail) or
    # a single atom; the carrier's own atoms must be hit by the table.
    if f.tail is not None:
        return False
    return {v for _, v in f.table} >= f.carrier


def _canonical(funs) -> list:
    return sorted({f.normalized for f in funs}, key=lambda f: f.sort_key())


def enumerate_atom_funs(S: Iterable[Atom]) -> list[AtomFun]:
    """Every function A -> A supported by a subset of ``S``, normalised."""
    base = sorted(S)
    tails: list[Atom | None] = [None, *base]
    funs = []
    for values in itertools.product(base, repeat=len(base)):
        table = dict(zip(base, values))
        for t in tails:
            funs.append(make_atom_fun(base, table, t))
    return _canonical(funs)


def enumerate_set_funs(S: Iterable[Atom]) -> list[AtomSetFun]:
    """Every function A -> P_fs(A) supported by a subset of ``S``, normalised."""
    base = sorted(S)
    carrier = frozenset(base)
    values = atomsets_supported_by(base)
    tails = [SetTail(k, X) for k in TailKind for X in _subsets(base)]
    funs = []
    for vals in itertools.product(values, repeat=len(base)):
        table = tuple(zip(base, vals))
        for t in tails:
            funs.append(AtomSetFun(carrier, table, t))
    return _canonical(funs)


def enumerate_tuple_funs(S: Iterable[Atom], n: int) -> list[TupleFun]:
    """Every function A -> A^n supported by a subset of ``S``, normalised."""
    if n < 1:
        raise ValueError("arity must be at least 1")
    base = sorted(S)
    carrier = frozenset(base)
    rows = list(itertools.product(base, repeat=n))
    patterns = list(itertools.product([*base, SELF], repeat=n))
    funs = []
    for vals in itertools.product(rows, repeat=len(base)):
        table = tuple(zip(base, vals))
        for pat in patterns:
            funs.append(TupleFun(carrier, table, pat))
    return _canonical(funs)


def enumerate_injective_tuple_funs(S: Iterable[Atom]) -> list[TupleFun]:
    """Every function A -> T_fin(A) supported by a subset of ``S``, normalised."""
    base = sorted(S)
    carrier = frozenset(base)
    rows = injective_tuples(base)
    patterns = injective_tuples(base, extra=[SELF])
    funs = []
    for vals in itertools.product(rows, repeat=len(base)):
        table = tuple(zip(base, vals))
        for pat in patterns:
            funs.append(TupleFun(carrier, table, pat, injective=True))
    return _canonical(funs)


# ---------------------------------------------------------------- text form

_FUN = re.compile(r"fun\s*\{(.*)\}\s*", re.S)


def parse_fun(text: str, labels: Labels) -> AtomFun:
    """Parse ``fun{a->b, b->a; tail=id}`` or ``fun{a->a; tail=const a}``."""
    m = _FUN.fullmatch(text.strip())
    if not m:
        raise ValueError(f"bad function literal: {text!r}")
    body = m.group(1)
    rows_part, _, tail_part = body.rpartition(";")
    if not _:
        rows_part, tail_part = ("", body) if "tail" in body else (body, "tail=id")
    tail_part = tail_part.strip()
    tm = re.fullmatch(r"tail\s*=\s*(id|const\s+(\S+))", tail_part)
    if not tm:
        raise ValueError(f"bad tail clause: {tail_part!r}")
    tail = labels[tm.group(2)] if tm.group(2) else None
    table: dict[Atom, Atom] = {}
    for row in filter(None, (r.strip() for r in rows_part.split(","))):
        rm = re.fullmatch(r"(\S+)\s*->\s*(\S+)", row)
        if not rm:
            raise ValueError(f"bad table row: {row!r}")
        src = labels[rm.group(1)]
        table[src] = labels[rm.group(2)]
    carrier = set(table) | set(table.values())
    if tail is not None:
        carrier.add(tail)
    for a in carrier - set(table):
        # atoms mentioned only as values keep the tail's default there
        table[a] = a if tail is None else tail
    return make_atom_fun(carrier, table, tail)
