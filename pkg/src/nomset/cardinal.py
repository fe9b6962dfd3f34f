"""Explicit injections and surjections between finitely supported sets.

``|X| <= |Y|`` is certified by a finitely supported injection X -> Y and
``|X| <=* |Y|`` by a finitely supported surjection Y -> X.  A ``CardWitness``
bundles the map with its declared support and samplers, and
``relation_check`` tests injectivity or surjectivity and equivariance under
permutations fixing the declared support on seeded samples.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from .atoms import Atom, Perm, fresh_atoms, sample_fix, transpose
from .fscore import act, supp

__all__ = [
    "nat_pair_inject",
    "nat_bool_inject",
    "CardWitness",
    "CardReport",
    "double_inject",
    "identity_witness",
    "inclusion_witness",
    "projection_witness",
    "nat_pair_witness",
    "nat_bool_witness",
    "compose_witnesses",
    "relation_check",
    "ClashReport",
    "propagation_clash",
    "named_witness",
    "WITNESS_NAMES",
]

EXPONENT_LIMIT = 4096


def nat_pair_inject(m: int, n: int, limit: int = EXPONENT_LIMIT) -> int:
    """(m, n) -> 2^m 3^n, injective by unique factorisation."""
    if m < 0 or n < 0:
        raise ValueError("arguments must be natural numbers")
    if m > limit or n > limit:
        raise OverflowError(f"exponent above {limit}")
    return 2**m * 3**n


def nat_bool_inject(n: int, b: int) -> int:
    """(n, 0) -> 2^(n+1), (n, 1) -> 3^(n+1).

    The exponent is shifted by one so that (0, 0) and (0, 1) do not both
    land on 1.
    """
    if n < 0:
        raise ValueError("n must be a natural number")
    if b not in (0, 1):
        raise ValueError("b must be 0 or 1")
    return (2 if b == 0 else 3) ** (n + 1)


Sampler = Callable[[random.Random, Sequence[Atom]], Any]


@dataclass(frozen=True)
class CardWitness:
    """A map between two constructions together with what is needed to test it.

    ``sampler`` draws domain elements from a pool of atoms.  For
    surjections, ``target_sampler`` draws codomain elements and ``section``
    picks a preimage of each.
    """

    name: str
    kind: str  # "injection", "surjection" or "bijection"
    mapping: Callable[[Any], Any] = field(compare=False)
    declared_support: frozenset[Atom] = frozenset()
    sampler: Sampler = field(default=None, compare=False)
    target_sampler: Sampler | None = field(default=None, compare=False)
    section: Callable[[Any], Any] | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("injection", "surjection", "bijection"):
            raise ValueError(f"unknown witness kind {self.kind!r}")
        if self.kind != "injection" and (self.target_sampler is None or self.section is None):
            raise ValueError("surjection witnesses need a target sampler and a section")

    def __call__(self, x: Any) -> Any:
        return self.mapping(x)


def _atom(rng: random.Random, pool: Sequence[Atom]) -> Atom:
    return rng.choice(pool)


def _nat(rng: random.Random, pool: Sequence[Atom]) -> int:
    return rng.randint(0, 10)


def _pair(first: Sampler, second: Sampler) -> Sampler:
    return lambda rng, pool: (first(rng, pool), second(rng, pool))


def _bit(rng: random.Random, pool: Sequence[Atom]) -> int:
    return rng.randint(0, 1)


def identity_witness(sampler: Sampler = _atom, name: str = "identity") -> CardWitness:
    return CardWitness(name, "bijection", lambda x: x, frozenset(), sampler, sampler, lambda y: y)


def inclusion_witness() -> CardWitness:
    """Nat -> Nat x Nat, n -> (n, 0)."""
    return CardWitness("nat-inclusion", "injection", lambda n: (n, 0), frozenset(), _nat)


def nat_pair_witness() -> CardWitness:
    return CardWitness("nat-pair", "injection", lambda mn: nat_pair_inject(*mn), frozenset(),
                       _pair(_nat, _nat))


def nat_bool_witness() -> CardWitness:
    return CardWitness("nat-bool", "injection", lambda nb: nat_bool_inject(*nb), frozenset(),
                       _pair(_nat, _bit))


def double_inject(x1: Any, x2: Any, sampler: Sampler = _atom,
                  carrier_support: frozenset[Atom] = frozenset()) -> CardWitness:
    """X x {0,1} -> X x X, (x, 0) -> (x, x1), (x, 1) -> (x, x2)."""
    if x1 == x2:
        raise ValueError("the two fixed elements must differ")
    chosen = (x1, x2)

    def mapping(xb):
        x, b = xb
        return (x, chosen[b])

    S = frozenset(carrier_support) | supp(x1) | supp(x2)
    return CardWitness(f"double({x1},{x2})", "injection", mapping, S, _pair(sampler, _bit))


def projection_witness(sampler: Sampler = _atom) -> CardWitness:
    """X x X -> X, the first projection; a section is x -> (x, x)."""
    return CardWitness("projection", "surjection", lambda xy: xy[0], frozenset(),
                       _pair(sampler, sampler), sampler, lambda x: (x, x))


def compose_witnesses(first: CardWitness, then: CardWitness) -> CardWitness:
    """``then o first``; injective or surjective when both parts are."""
    kinds = {first.kind, then.kind}
    if kinds <= {"injection", "bijection"}:
        kind = "bijection" if kinds == {"bijection"} else "injection"
    elif kinds <= {"surjection", "bijection"}:
        kind = "surjection"
    else:
        raise ValueError("cannot compose an injection with a surjection into either kind")
    section = None
    if kind != "injection":
        section = lambda y: first.section(then.section(y))
    return CardWitness(
        f"{then.name}.{first.name}",
        kind,
        lambda x: then(first(x)),
        first.declared_support | then.declared_support,
        first.sampler,
        then.target_sampler,
        section,
    )


@dataclass
class CardReport:
    relation: str
    witness: str
    samples: int
    counterexamples: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {"relation": self.relation, "witness": self.witness, "samples": self.samples,
                "ok": self.ok, "counterexamples": list(self.counterexamples)}

    def __str__(self) -> str:
        status = "OK" if self.ok else "FAILED"
        lines = [f"{self.relation} via {self.witness}: {self.samples} samples [{status}]"]
        lines += [f"  {c}" for c in self.counterexamples]
        return "\n".join(lines)


def relation_check(relation: str, witness: CardWitness, samples: int = 50, seed: int = 0) -> CardReport:
    """Test that ``witness`` certifies ``leq`` (injection) or ``leq_star`` (surjection)."""
    if relation not in ("leq", "leq_star"):
        raise ValueError(f"unknown relation {relation!r}")
    rng = random.Random(seed)
    pool = sorted(witness.declared_support | set(fresh_atoms(max(20, samples // 2))))
    report = CardReport(relation, witness.name, samples)
    bad = report.counterexamples

    if relation == "leq":
        if witness.kind == "surjection":
            bad.append("witness is not declared injective")
        seen: dict[Any, Any] = {}
        for _ in range(samples):
            x = witness.sampler(rng, pool)
            y = witness(x)
            if y in seen and seen[y] != x:
                bad.append(f"collision: {seen[y]} and {x} both map to {y}")
            seen.setdefault(y, x)
    else:
        if witness.kind == "injection":
            bad.append("witness is not declared surjective")
        else:
            for _ in range(samples):
                y = witness.target_sampler(rng, pool)
                x = witness.section(y)
                if witness(x) != y:
                    bad.append(f"no preimage found for {y}: section gives {x} -> {witness(x)}")

    # permutations are drawn over the atoms each sample and its image mention,
    # so atoms the declared support leaves out are actually moved
    for i in range(samples):
        x = witness.sampler(rng, pool)
        local = supp(x) | supp(witness(x)) | set(rng.sample(pool, 2))
        (p,) = sample_fix(witness.declared_support, 1, seed * 100003 + i, local)
        if witness(act(p, x)) != act(p, witness(x)):
            bad.append(f"not equivariant: {p} moves the value at {x}")
            break
    return report


@dataclass(frozen=True)
class ClashReport:
    argument: Any
    first_perm: Perm
    first_value: Any
    second_perm: Perm
    second_value: Any

    @property
    def clash(self) -> bool:
        return self.first_value != self.second_value


def propagation_clash(a: Atom, b: Atom, c: Atom, i: int = 0) -> ClashReport:
    """Two forced values of one function at (i, b), given f(i, a) = (a, b).

    If f is supported by a set S avoiding a, b, c, then every permutation
    fixing S moves the graph point ((i, a), (a, b)) to another graph point.
    The swap (a b) forces f(i, b) = (b, a) and the cycle a -> b -> c -> a
    forces f(i, b) = (b, c).  The two differ, so no such f exists.
    """
    if len({a, b, c}) != 3:
        raise ValueError("need three distinct atoms")
    point, value = (i, a), (a, b)
    swap = transpose(a, b)
    cycle = Perm.from_cycles([(a, b, c)])
    assert act(swap, point) == act(cycle, point) == (i, b)
    return ClashReport((i, b), swap, act(swap, value), cycle, act(cycle, value))


def named_witness(name: str) -> tuple[str, CardWitness]:
    """A witness from the built-in catalogue with the relation it certifies."""
    if name == "nat-pair":
        return "leq", nat_pair_witness()
    if name == "nat-bool":
        return "leq", nat_bool_witness()
    if name == "nat-inclusion":
        return "leq", inclusion_witness()
    if name == "nat-transitivity":
        return "leq", compose_witnesses(inclusion_witness(), nat_pair_witness())
    if name == "identity":
        return "leq", identity_witness()
    if name == "double-atoms":
        x1, x2 = fresh_atoms(2, ["x1", "x2"])
        return "leq", double_inject(x1, x2)
    if name == "double-projection":
        x1, x2 = fresh_atoms(2, ["x1", "x2"])
        d = double_inject(x1, x2)
        # X x {0,1} -> X x X -> X, (x, b) -> x; a section is x -> (x, 0)
        w = CardWitness(f"first.{d.name}", "surjection", lambda xb: d(xb)[0],
                        d.declared_support, d.sampler, _atom, lambda x: (x, 0))
        return "leq_star", w
    raise ValueError(f"unknown witness {name!r}; choose from {', '.join(WITNESS_NAMES)}")


WITNESS_NAMES = ("nat-pair", "nat-bool", "nat-inclusion", "nat-transitivity", "identity",
                 "double-atoms", "double-projection")
