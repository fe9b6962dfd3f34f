"""Monotone self-maps of the finite subsets of A and their fixed points.

Maps are built from a small combinator language whose every term denotes
an inclusion-monotone map with a computable finite support::

    id | cup{a,b} | img(fun{...}) | perm((a b)) | (M | M) | (M ; M)

``(M | N)`` is the pointwise union and ``(M ; N)`` runs ``M`` first, then
``N``.  Because every iterate of a map supported by S from the empty set is
itself supported by S, and a finite S-supported set of atoms is a subset of
S, iteration from the empty set becomes stationary within ``|S| + 1`` steps.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .atoms import Atom, Labels, Perm, fresh_atoms, parse_perm, sample_fix
from .fscore import EMPTY, AtomSet, parse_atomset
from .fsfun import AtomFun, make_atom_fun, parse_fun

__all__ = [
    "MonotoneMap",
    "Identity",
    "ConstUnion",
    "ImageUnion",
    "PermImage",
    "UnionOf",
    "ComposeOf",
    "BlackBoxMap",
    "FixpointError",
    "FixpointResult",
    "support_of_map",
    "is_progressive",
    "conjugate_map",
    "lfp_from_empty",
    "iterate_to_fix",
    "FixedPointSample",
    "FixedPointReport",
    "progressive_fixed_points_check",
    "strict_monotone_fixed_points_check",
    "parse_map",
    "random_map",
]


def _finite(Z: AtomSet) -> AtomSet:
    if not Z.is_finite:
        raise ValueError(f"maps act on finite sets of atoms, got {Z}")
    return Z


class MonotoneMap:
    """Base class; subclasses are frozen dataclasses."""

    def __call__(self, Z: AtomSet) -> AtomSet:
        raise NotImplementedError

    def support(self) -> frozenset[Atom]:
        raise NotImplementedError

    def progressive(self) -> bool:
        raise NotImplementedError

    def act(self, p: Perm) -> MonotoneMap:
        raise NotImplementedError


@dataclass(frozen=True)
class Identity(MonotoneMap):
    def __call__(self, Z):
        return _finite(Z)

    def support(self):
        return frozenset()

    def progressive(self):
        return True

    def act(self, p):
        return self

    def __str__(self):
        return "id"


@dataclass(frozen=True)
class ConstUnion(MonotoneMap):
    """Z -> Z | C for a finite set C."""

    C: AtomSet

    def __post_init__(self):
        _finite(self.C)

    def __call__(self, Z):
        return _finite(Z) | self.C

    def support(self):
        return self.C.support()

    def progressive(self):
        return True

    def act(self, p):
        return ConstUnion(self.C.act(p))

    def __str__(self):
        return f"cup{self.C}"


@dataclass(frozen=True)
class ImageUnion(MonotoneMap):
    """Z -> Z | g[Z]."""

    g: AtomFun

    def __call__(self, Z):
        return _finite(Z) | AtomSet.finite(self.g(a) for a in Z)

    def support(self):
        return self.g.support()

    def progressive(self):
        return True

    def act(self, p):
        return ImageUnion(self.g.act(p))

    def __str__(self):
        return f"img({self.g})"


@dataclass(frozen=True)
class PermImage(MonotoneMap):
    """Z -> p . Z."""

    p: Perm

    def __call__(self, Z):
        return _finite(Z).act(self.p)

    def support(self):
        return self.p.moved()

    def progressive(self):
        return self.p.is_identity()

    def act(self, q):
        return PermImage(q * self.p * q.inverse())

    def __str__(self):
        return f"perm({self.p})"


@dataclass(frozen=True)
class UnionOf(MonotoneMap):
    left: MonotoneMap
    right: MonotoneMap

    def __call__(self, Z):
        return self.left(Z) | self.right(Z)

    def support(self):
        return self.left.support() | self.right.support()

    def progressive(self):
        return self.left.progressive() or self.right.progressive()

    def act(self, p):
        return UnionOf(self.left.act(p), self.right.act(p))

    def __str__(self):
        return f"({self.left} | {self.right})"


@dataclass(frozen=True)
class ComposeOf(MonotoneMap):
    """Apply ``first``, then ``then``."""

    first: MonotoneMap
    then: MonotoneMap

    def __call__(self, Z):
        return self.then(self.first(Z))

    def support(self):
        return self.first.support() | self.then.support()

    def progressive(self):
        return self.first.progressive() and self.then.progressive()

    def act(self, p):
        return ComposeOf(self.first.act(p), self.then.act(p))

    def __str__(self):
        return f"({self.first} ; {self.then})"


@dataclass(frozen=True)
class BlackBoxMap(MonotoneMap):
    """A user-supplied map trusted only up to sampled checks of its declared support."""

    fn: Callable[[AtomSet], AtomSet] = field(compare=False)
    declared_support: frozenset[Atom] = frozenset()
    declared_progressive: bool = False
    name: str = "blackbox"

    def __call__(self, Z):
        return self.fn(_finite(Z))

    def support(self):
        return frozenset(self.declared_support)

    def progressive(self):
        return self.declared_progressive

    def act(self, p):
        q = p.inverse()
        return BlackBoxMap(lambda Z: self.fn(Z.act(q)).act(p),
                           frozenset(p(a) for a in self.declared_support),
                           self.declared_progressive, f"{self.name}^{p}")

    def spot_check(self, samples: int = 50, seed: int = 0) -> list[str]:
        """Problems found by checking ``f(p.Z) = p.f(Z)`` and monotonicity on samples."""
        rng = random.Random(seed)
        S = self.support()
        pool = sorted(S | set(_spare_pool()))
        perms = sample_fix(S, samples, seed, pool)
        problems = []
        for p in perms:
            Z = AtomSet.finite(rng.sample(pool, rng.randint(0, len(pool))))
            W = Z | AtomSet.finite(rng.sample(pool, rng.randint(0, 2)))
            fZ = self(Z)
            if self(Z.act(p)) != fZ.act(p):
                problems.append(f"not supported by declared support: moved by {p} at {Z}")
            if not fZ <= self(W):
                problems.append(f"not monotone: {Z} <= {W} but images are not")
        return problems

    def __str__(self):
        return self.name


_spares: list[Atom] = []


def _spare_pool() -> list[Atom]:
    if not _spares:
        _spares.extend(fresh_atoms(3, ["t0", "t1", "t2"]))
    return _spares


def support_of_map(M: MonotoneMap) -> frozenset[Atom]:
    return M.support()


def is_progressive(M: MonotoneMap) -> bool:
    """True when the constructors guarantee ``Z <= M(Z)`` for all Z."""
    return M.progressive()


def conjugate_map(p: Perm, M: MonotoneMap) -> MonotoneMap:
    """The map ``Z -> p . M(p^-1 . Z)``, lifted over the term structure."""
    return M.act(p)


class FixpointError(RuntimeError):
    def __init__(self, message: str, chain: list[AtomSet]):
        shown = ", ".join(map(str, chain))
        super().__init__(f"{message}; chain: {shown}")
        self.chain = chain


@dataclass(frozen=True)
class FixpointResult:
    fixpoint: AtomSet
    steps: int
    chain: tuple[AtomSet, ...]

    def to_dict(self) -> dict:
        return {"fixpoint": str(self.fixpoint), "steps": self.steps,
                "chain": [str(z) for z in self.chain]}


def _iterate(M, Z0, bound_set, max_iter, require_progressive):
    if isinstance(M, BlackBoxMap):
        problems = M.spot_check()
        if problems:
            raise FixpointError("black-box map failed spot checks: " + problems[0], [Z0])
    Z = Z0
    chain = [Z]
    for i in range(max_iter):
        nz = M(Z)
        chain.append(nz)
        if nz == Z:
            return FixpointResult(Z, i, tuple(chain))
        if require_progressive and not Z <= nz:
            raise FixpointError(f"progressivity violated at step {i + 1}", chain)
        if not Z < nz:
            raise FixpointError(f"chain not strictly ascending at step {i + 1}", chain)
        if not nz <= bound_set:
            raise FixpointError(f"iterate leaves the support bound {bound_set}", chain)
        Z = nz
    raise FixpointError(f"no fixed point within {max_iter} iterations", chain)


def lfp_from_empty(M: MonotoneMap, max_iter: int | None = None) -> FixpointResult:
    """Least fixed point of ``M`` by iteration from the empty set."""
    S = support_of_map(M)
    if max_iter is None:
        max_iter = len(S) + 2
    return _iterate(M, EMPTY, AtomSet.finite(S), max_iter, False)


def iterate_to_fix(M: MonotoneMap, Z0: AtomSet, max_iter: int | None = None) -> FixpointResult:
    """Iterate a progressive map from ``Z0`` until it is stationary."""
    _finite(Z0)
    bound = AtomSet.finite(support_of_map(M)) | Z0
    if max_iter is None:
        max_iter = len(bound) + 2
    return _iterate(M, Z0, bound, max_iter, True)


@dataclass(frozen=True)
class FixedPointSample:
    Z: AtomSet
    image: AtomSet
    status: str  # "pass", "fail" or "n/a"

    def to_dict(self) -> dict:
        return {"Z": str(self.Z), "image": str(self.image), "status": self.status}


@dataclass(frozen=True)
class FixedPointReport:
    samples: tuple[FixedPointSample, ...]

    @property
    def ok(self) -> bool:
        return all(s.status != "fail" for s in self.samples)

    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "n/a": 0}
        for s in self.samples:
            out[s.status] += 1
        return out


def _sample_sets(rng: random.Random, pool: list[Atom], samples: int) -> list[frozenset[Atom]]:
    return [frozenset(rng.sample(pool, rng.randint(0, len(pool)))) for _ in range(samples)]


def progressive_fixed_points_check(M: MonotoneMap, samples: int = 50, seed: int = 0) -> FixedPointReport:
    """Check that every sampled finite Z containing the support of ``M`` is fixed."""
    if not M.progressive():
        raise ValueError(f"{M} is not progressive")
    rng = random.Random(seed)
    S = support_of_map(M)
    extra = sorted(set(_spare_pool()) | set(fresh_atoms(2)))
    out = []
    for T in _sample_sets(rng, extra, samples):
        Z = AtomSet.finite(S | T)
        fZ = M(Z)
        out.append(FixedPointSample(Z, fZ, "pass" if fZ == Z else "fail"))
    return FixedPointReport(tuple(out))


def _strict_on(M: MonotoneMap, carrier: frozenset[Atom]) -> bool:
    # strictness on covering pairs Z < Z+{x} of the subsets of carrier
    for r in range(len(carrier) + 1):
        for Z in itertools.combinations(sorted(carrier), r):
            Zs = AtomSet.finite(Z)
            fZ = M(Zs)
            for x in carrier - set(Z):
                if not fZ < M(Zs | AtomSet.finite([x])):
                    return False
    return True


def strict_monotone_fixed_points_check(M: MonotoneMap, samples: int = 50, seed: int = 0) -> FixedPointReport:
    """Check ``M(X - S) = X - S`` on sampled X, S the support of ``M``.

    A sample is ``n/a`` when ``M`` is not strictly order-preserving on the
    subsets of ``X | S``; the claim is only made for strict maps.
    """
    rng = random.Random(seed)
    S = support_of_map(M)
    pool = sorted(S | set(_spare_pool()))
    out = []
    for X in _sample_sets(rng, pool, samples):
        Z = AtomSet.finite(X - S)
        fZ = M(Z)
        if not _strict_on(M, X | S):
            status = "n/a"
        else:
            status = "pass" if fZ == Z else "fail"
        out.append(FixedPointSample(AtomSet.finite(X), fZ, status))
    return FixedPointReport(tuple(out))


# ---------------------------------------------------------------- text form


class _MapParser:
    def __init__(self, text: str, labels: Labels):
        self.text = text
        self.i = 0
        self.labels = labels

    def ws(self):
        while self.i < len(self.text) and self.text[self.i].isspace():
            self.i += 1

    def error(self, msg: str):
        raise ValueError(f"{msg} at offset {self.i} in map {self.text!r}")

    def balanced(self, open_ch: str, close_ch: str) -> str:
        """Consume a bracketed group starting at ``open_ch``; return its inside."""
        if self.text[self.i:self.i + 1] != open_ch:
            self.error(f"expected {open_ch!r}")
        depth, start = 0, self.i
        while self.i < len(self.text):
            ch = self.text[self.i]
            depth += (ch == open_ch) - (ch == close_ch)
            self.i += 1
            if depth == 0:
                return self.text[start + 1:self.i - 1]
        self.error(f"unbalanced {open_ch!r}")

    def parse(self) -> MonotoneMap:
        m = self.term()
        self.ws()
        if self.i != len(self.text):
            self.error("trailing input")
        return m

    def term(self) -> MonotoneMap:
        self.ws()
        rest = self.text[self.i:]
        if rest.startswith("id") and not rest[2:3].isalnum():
            self.i += 2
            return Identity()
        if rest.startswith("cup"):
            self.i += 3
            self.ws()
            body = self.balanced("{", "}")
            return ConstUnion(parse_atomset("{" + body + "}", self.labels))
        if rest.startswith("img"):
            self.i += 3
            self.ws()
            body = self.balanced("(", ")")
            return ImageUnion(parse_fun(body, self.labels))
        if rest.startswith("perm"):
            self.i += 4
            self.ws()
            body = self.balanced("(", ")")
            return PermImage(parse_perm(body, self.labels))
        if rest.startswith("("):
            self.i += 1
            m = self.term()
            while True:
                self.ws()
                ch = self.text[self.i:self.i + 1]
                if ch == ")":
                    self.i += 1
                    return m
                if ch not in ("|", ";"):
                    self.error("expected '|', ';' or ')'")
                self.i += 1
                other = self.term()
                m = UnionOf(m, other) if ch == "|" else ComposeOf(m, other)
        self.error("expected a map")


def parse_map(text: str, labels: Labels | None = None) -> MonotoneMap:
    """Parse the map text form; atom names are bound through ``labels``."""
    return _MapParser(text, labels if labels is not None else Labels()).parse()


def random_map(rng: random.Random, atoms: Iterable[Atom], depth: int = 3,
               progressive: bool = False) -> MonotoneMap:
    """A random combinator term over ``atoms`` (for property tests).

    With ``progressive`` a non-progressive term M is returned as ``(id | M)``.
    """
    M = _random_term(rng, sorted(atoms), depth)
    if progressive and not M.progressive():
        M = UnionOf(Identity(), M)
    return M


def _random_term(rng: random.Random, atoms: list[Atom], depth: int) -> MonotoneMap:
    pick = rng.randrange(6 if depth > 0 else 4)
    if pick == 0:
        return Identity()
    if pick == 1:
        return ConstUnion(AtomSet.finite(rng.sample(atoms, rng.randint(0, min(2, len(atoms))))))
    if pick == 2:
        a, b = rng.choice(atoms), rng.choice(atoms)
        if rng.random() < 0.5:
            return ImageUnion(AtomFun.constant(a))
        table = {a: b, b: b} if a != b else {a: a}
        return ImageUnion(make_atom_fun(table.keys(), table).normalized)
    if pick == 3:
        cyc = rng.sample(atoms, min(len(atoms), rng.randint(2, 3)))
        return PermImage(Perm.from_cycles([cyc]))
    if pick == 4:
        return UnionOf(_random_term(rng, atoms, depth - 1), _random_term(rng, atoms, depth - 1))
    return ComposeOf(_random_term(rng, atoms, depth - 1), _random_term(rng, atoms, depth - 1))
