"""Finitely supported subsets of A, the permutation action, and supports.

The finitely supported subsets of A are exactly the finite and the cofinite
ones, so ``AtomSet`` has just those two variants; an infinite and coinfinite
subset of A cannot be built.

``act`` and ``supp`` work structurally on the values used throughout the
package: atoms, ``AtomSet``, tuples and pairs (componentwise), frozensets
of supported values (elementwise), plain Python scalars (the trivial
action), and any object exposing ``act(p)`` / ``support()``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from numbers import Number
from typing import Any, Callable, Iterable

from .atoms import Atom, Labels, Perm, fresh_atoms, transpose

__all__ = [
    "AtomSet",
    "EMPTY",
    "ALL",
    "SupportReport",
    "act",
    "supp",
    "act_set",
    "supp_atom",
    "supp_set",
    "supp_pair",
    "set_algebra",
    "member",
    "least_support",
    "parse_atomset",
]


@dataclass(frozen=True)
class AtomSet:
    """A finite subset of A, or the complement of one when ``cofinite``."""

    atoms: frozenset[Atom] = frozenset()
    cofinite: bool = False

    @classmethod
    def finite(cls, elements: Iterable[Atom] = ()) -> AtomSet:
        return cls(frozenset(elements), False)

    @classmethod
    def cofinite_of(cls, excluded: Iterable[Atom] = ()) -> AtomSet:
        return cls(frozenset(excluded), True)

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    def __contains__(self, a: Atom) -> bool:
        return (a in self.atoms) != self.cofinite

    def complement(self) -> AtomSet:
        return AtomSet(self.atoms, not self.cofinite)

    def __or__(self, other: AtomSet) -> AtomSet:
        x, y = self.atoms, other.atoms
        if not self.cofinite and not other.cofinite:
            return AtomSet(x | y, False)
        if self.cofinite and other.cofinite:
            return AtomSet(x & y, True)
        if self.cofinite:
            return AtomSet(x - y, True)
        return AtomSet(y - x, True)

    def __and__(self, other: AtomSet) -> AtomSet:
        return (self.complement() | other.complement()).complement()

    def __sub__(self, other: AtomSet) -> AtomSet:
        return self & other.complement()

    def __le__(self, other: AtomSet) -> bool:
        return (self - other) == EMPTY

    def __lt__(self, other: AtomSet) -> bool:
        return self <= other and self != other

    def __len__(self) -> int:
        if self.cofinite:
            raise TypeError("a cofinite subset of A has no finite length")
        return len(self.atoms)

    def __iter__(self):
        if self.cofinite:
            raise TypeError("cannot iterate a cofinite subset of A")
        return iter(sorted(self.atoms))

    def support(self) -> frozenset[Atom]:
        return self.atoms

    def act(self, p: Perm) -> AtomSet:
        return AtomSet(frozenset(p(a) for a in self.atoms), self.cofinite)

    def __str__(self) -> str:
        body = ",".join(map(str, sorted(self.atoms)))
        if not self.cofinite:
            return "{" + body + "}"
        return "A" if not self.atoms else "A\\{" + body + "}"

    __repr__ = __str__


EMPTY = AtomSet.finite()
ALL = AtomSet.cofinite_of()


def act(p: Perm, x: Any) -> Any:
    """Apply the canonical permutation action to ``x``."""
    if isinstance(x, Atom):
        return p(x)
    if isinstance(x, (bool, Number, str, bytes)) or x is None:
        return x
    if isinstance(x, tuple):
        return tuple(act(p, y) for y in x)
    if isinstance(x, frozenset):
        return frozenset(act(p, y) for y in x)
    if hasattr(x, "act"):
        return x.act(p)
    raise TypeError(f"no permutation action defined for {type(x).__name__}")


def supp(x: Any) -> frozenset[Atom]:
    """Least support of ``x``.

    For tuples this is the union of the component supports, and for finite
    sets the union of the member supports (a finite set is uniformly
    supported, so its least support is that union).
    """
    if isinstance(x, Atom):
        return frozenset({x})
    if isinstance(x, (bool, Number, str, bytes)) or x is None:
        return frozenset()
    if isinstance(x, (tuple, frozenset)):
        out: frozenset[Atom] = frozenset()
        for y in x:
            out |= supp(y)
        return out
    if hasattr(x, "support"):
        return frozenset(x.support())
    raise TypeError(f"no support defined for {type(x).__name__}")


def act_set(p: Perm, X: AtomSet) -> AtomSet:
    return X.act(p)


def supp_atom(a: Atom) -> frozenset[Atom]:
    return frozenset({a})


def supp_set(X: AtomSet) -> frozenset[Atom]:
    return X.atoms


def supp_pair(x_supp: Iterable[Atom], y_supp: Iterable[Atom]) -> frozenset[Atom]:
    return frozenset(x_supp) | frozenset(y_supp)


def set_algebra(X: AtomSet, Y: AtomSet) -> tuple[AtomSet, AtomSet, AtomSet]:
    """Return ``(X | Y, X & Y, X - Y)``."""
    return X | Y, X & Y, X - Y


def member(a: Atom, X: AtomSet) -> bool:
    return a in X


@dataclass(frozen=True)
class SupportReport:
    support: frozenset[Atom]
    witness_checks: list[tuple[Perm, bool]] = field(default_factory=list)


def least_support(
    x: Any,
    superset: Iterable[Atom],
    action: Callable[[Perm, Any], Any] = act,
) -> SupportReport:
    """Compute the least support of ``x`` from a finite set known to support it.

    An atom ``a`` of the superset belongs to the least support exactly when
    swapping it with a fresh atom changes ``x``.  Each swap is recorded as
    ``(transposition, changed)``.
    """
    sup = frozenset(superset)
    (b,) = fresh_atoms(1)
    checks = []
    keep = set()
    for a in sorted(sup):
        tau = transpose(a, b)
        changed = action(tau, x) != x
        checks.append((tau, changed))
        if changed:
            keep.add(a)
    return SupportReport(frozenset(keep), checks)


_FIN = re.compile(r"\{\s*([^{}]*)\}")


def _names(body: str) -> list[str]:
    return [nm for nm in re.split(r"[\s,]+", body.strip()) if nm]


def parse_atomset(text: str, labels: Labels) -> AtomSet:
    """Parse ``{a,b}``, ``A`` or ``A\\{a,b}``."""
    t = text.strip()
    if t == "A":
        return ALL
    m = re.fullmatch(r"A\s*\\\s*\{([^{}]*)\}", t)
    if m:
        return AtomSet.cofinite_of(labels.atoms(_names(m.group(1))))
    m = _FIN.fullmatch(t)
    if m:
        return AtomSet.finite(labels.atoms(_names(m.group(1))))
    raise ValueError(f"bad atom-set literal: {text!r}")
