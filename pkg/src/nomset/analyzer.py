"""Decide whether a set construction contains an infinite uniformly supported subset.

Expressions are built from the grammar::

    e ::= A | Nat | Tfin | Tdelta | e x e | e + e | e ^ n
        | Pfin(e) | Pcofin(e) | Pus(e) | Pfs(e) | Fun(e, e)

``x`` (or ``×``) binds tighter than ``+``; both associate to the left.
``analyze`` evaluates rules bottom-up and returns a ``Verdict`` with a rule
trace.  A ``UniformlyInfinite`` verdict carries a ``WitnessFamily``: an
indexed family of pairwise distinct elements sharing one finite support.
Constructions no rule covers get ``Unknown``; nothing is extrapolated.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable

from .atoms import Atom, Perm, fresh_atoms, sample_fix
from .fscore import act, supp
from .fsfun import SELF, AtomFun, AtomSetFun, SetTail, TailKind, TupleFun

__all__ = [
    "SetExpr",
    "AtomsA",
    "Nat",
    "TFin",
    "TDelta",
    "Prod",
    "Sum",
    "Power",
    "PFin",
    "PCofin",
    "PUs",
    "PFs",
    "Fun",
    "ParseError",
    "parse_expr",
    "Result",
    "TraceEntry",
    "Verdict",
    "WitnessFamily",
    "WitnessCheck",
    "analyze",
    "witness",
    "check_witness",
    "supp_of_uniform_family",
    "ChainCheck",
    "check_chain",
    "SizedSubsets",
    "InjectiveTuplesOfLength",
    "show",
]


# ---------------------------------------------------------------- syntax


class SetExpr:
    """Base class of expression nodes."""


@dataclass(frozen=True)
class AtomsA(SetExpr):
    def __str__(self):
        return "A"


@dataclass(frozen=True)
class Nat(SetExpr):
    def __str__(self):
        return "Nat"


@dataclass(frozen=True)
class TFin(SetExpr):
    def __str__(self):
        return "Tfin"


@dataclass(frozen=True)
class TDelta(SetExpr):
    def __str__(self):
        return "Tdelta"


@dataclass(frozen=True)
class Prod(SetExpr):
    left: SetExpr
    right: SetExpr

    def __str__(self):
        return f"{_wrap(self.left, Sum)} x {_wrap(self.right, (Sum, Prod))}"


@dataclass(frozen=True)
class Sum(SetExpr):
    left: SetExpr
    right: SetExpr

    def __str__(self):
        return f"{self.left} + {_wrap(self.right, Sum)}"


@dataclass(frozen=True)
class Power(SetExpr):
    base: SetExpr
    n: int

    def __str__(self):
        return f"{_wrap(self.base, (Sum, Prod, Power))}^{self.n}"


@dataclass(frozen=True)
class _Unary(SetExpr):
    arg: SetExpr
    _name = ""

    def __str__(self):
        return f"{self._name}({self.arg})"


class PFin(_Unary):
    _name = "Pfin"


class PCofin(_Unary):
    _name = "Pcofin"


class PUs(_Unary):
    _name = "Pus"


class PFs(_Unary):
    _name = "Pfs"


@dataclass(frozen=True)
class Fun(SetExpr):
    domain: SetExpr
    codomain: SetExpr

    def __str__(self):
        return f"Fun({self.domain}, {self.codomain})"


def _wrap(e: SetExpr, kinds) -> str:
    return f"({e})" if isinstance(e, kinds) else str(e)


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.offset = offset


_CONSTANTS = {"A": AtomsA, "Nat": Nat, "Tfin": TFin, "Tdelta": TDelta}
_UNARY = {"Pfin": PFin, "Pcofin": PCofin, "Pus": PUs, "Pfs": PFs}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    i = 0
    while i < len(text):
        ch = text[i]
        off = len(text[:i].encode())
        if ch.isspace():
            i += 1
        elif ch.isalpha():
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            toks.append(("op" if word == "x" else "id", word, off))
            i = j
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            toks.append(("num", text[i:j], off))
            i = j
        elif ch in "()+,^":
            toks.append(("op", ch, off))
            i += 1
        elif ch == "×":
            toks.append(("op", "x", off))
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r}", off)
    toks.append(("end", "", len(text.encode())))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def take(self, value: str | None = None, kind: str | None = None):
        tok = self.peek()
        if (value is not None and tok[1] != value) or (kind is not None and tok[0] != kind):
            want = value if value is not None else kind
            got = tok[1] or "end of input"
            raise ParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.pos += 1
        return tok

    def parse(self) -> SetExpr:
        e = self.sum()
        self.take(kind="end")
        return e

    def sum(self) -> SetExpr:
        e = self.prod()
        while self.peek()[:2] == ("op", "+"):
            self.take()
            e = Sum(e, self.prod())
        return e

    def prod(self) -> SetExpr:
        e = self.power()
        while self.peek()[:2] == ("op", "x"):
            self.take()
            e = Prod(e, self.power())
        return e

    def power(self) -> SetExpr:
        e = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, num, off = self.take(kind="num")
            if int(num) < 1:
                raise ParseError("exponent must be at least 1", off)
            e = Power(e, int(num))
        return e

    def atom(self) -> SetExpr:
        kind, word, off = self.peek()
        if (kind, word) == ("op", "("):
            self.take()
            e = self.sum()
            self.take(")")
            return e
        if kind != "id":
            raise ParseError(f"unexpected {word or 'end of input'!r}", off)
        self.take()
        if word in _CONSTANTS:
            return _CONSTANTS[word]()
        if word in _UNARY:
            self.take("(")
            e = self.sum()
            self.take(")")
            return _UNARY[word](e)
        if word == "Fun":
            self.take("(")
            d = self.sum()
            self.take(",")
            c = self.sum()
            self.take(")")
            return Fun(d, c)
        raise ParseError(f"unknown identifier {word!r}", off)


def parse_expr(text: str) -> SetExpr:
    """Parse a construction; raises ``ParseError`` carrying the byte offset."""
    return _Parser(text).parse()


# ---------------------------------------------------------------- descriptors


@dataclass(frozen=True)
class SizedSubsets:
    """The set of all ``size``-element subsets of the construction ``of``."""

    size: int
    of: SetExpr

    def act(self, p: Perm) -> SizedSubsets:
        # ``of`` is built from equivariant constructions, hence so is this set
        return self

    def support(self) -> frozenset[Atom]:
        return frozenset()

    def materialize(self, universe: Iterable[Atom]) -> frozenset:
        """Trace of this set on a finite universe, as nested frozensets."""
        base = _materialize(self.of, tuple(universe))
        return frozenset(frozenset(c) for c in itertools.combinations(base, self.size))

    def __str__(self):
        return f"subsets({self.of}, size={self.size})"


@dataclass(frozen=True)
class InjectiveTuplesOfLength:
    """The set of all injective ``length``-tuples of atoms."""

    length: int

    def act(self, p: Perm) -> InjectiveTuplesOfLength:
        return self

    def support(self) -> frozenset[Atom]:
        return frozenset()

    def materialize(self, universe: Iterable[Atom]) -> frozenset:
        return frozenset(itertools.permutations(tuple(universe), self.length))

    def __str__(self):
        return f"injective-tuples(A, length={self.length})"


@dataclass(frozen=True)
class Whole:
    """The whole construction ``of``, as an element of one of its powersets."""

    of: SetExpr

    def act(self, p: Perm) -> Whole:
        return self

    def support(self) -> frozenset[Atom]:
        return frozenset()

    def __str__(self):
        return str(self.of)


@dataclass(frozen=True)
class CofiniteIn:
    """``of`` minus the finite set ``removed``."""

    of: SetExpr
    removed: frozenset

    def act(self, p: Perm) -> CofiniteIn:
        return CofiniteIn(self.of, act(p, self.removed))

    def support(self) -> frozenset[Atom]:
        return supp(self.removed)

    def __str__(self):
        return f"{self.of} \\ {show(self.removed)}"


@dataclass(frozen=True)
class ConstFun:
    """The constant function on ``domain`` with value ``value``."""

    domain: SetExpr
    value: Any

    def act(self, p: Perm) -> ConstFun:
        return ConstFun(self.domain, act(p, self.value))

    def support(self) -> frozenset[Atom]:
        return supp(self.value)

    def __str__(self):
        return f"const({show(self.value)})"


def _materialize(e: SetExpr, universe: tuple[Atom, ...]) -> list:
    if isinstance(e, AtomsA):
        return list(universe)
    if isinstance(e, (PFin, PFs)) and isinstance(e.arg, AtomsA):
        return [frozenset(c) for r in range(len(universe) + 1)
                for c in itertools.combinations(universe, r)]
    raise ValueError(f"no finite-model trace for {e}")


def show(x: Any) -> str:
    """Readable rendering of nested tuples and frozensets."""
    if isinstance(x, frozenset):
        return "{" + ", ".join(sorted(show(y) for y in x)) + "}"
    if isinstance(x, tuple):
        return "(" + ", ".join(show(y) for y in x) + ")"
    return str(x)


# ---------------------------------------------------------------- verdicts


class Result(enum.Enum):
    UNIFORMLY_INFINITE = "UniformlyInfinite"
    NON_UNIFORMLY_INFINITE = "NonUniformlyInfinite"
    UNKNOWN = "Unknown"


UI = Result.UNIFORMLY_INFINITE
NUI = Result.NON_UNIFORMLY_INFINITE
UNKNOWN = Result.UNKNOWN


@dataclass(frozen=True)
class TraceEntry:
    rule: str
    anchor: str
    expr: str
    derived: bool = False

    def to_dict(self) -> dict:
        return {"rule": self.rule, "anchor": self.anchor, "expr": self.expr,
                "derived": self.derived}


@dataclass
class WitnessFamily:
    """An infinite family ``generator(0), generator(1), ...`` with one common support."""

    common_support: frozenset[Atom]
    generator: Callable[[int], Any]
    description: str
    key: Callable[[Any], Any] = lambda x: x

    def first(self, k: int) -> list:
        return [self.generator(i) for i in range(k)]

    def to_dict(self, k: int = 5) -> dict:
        return {
            "support": sorted(str(a) for a in self.common_support),
            "description": self.description,
            "first_k": [show(x) for x in self.first(k)],
        }


@dataclass
class Verdict:
    expr: SetExpr
    result: Result
    trace: list[TraceEntry] = field(default_factory=list)
    witness: WitnessFamily | None = None
    reason: str = ""

    def to_dict(self, k: int = 5) -> dict:
        out = {
            "expr": str(self.expr),
            "result": self.result.value,
            "trace": [t.to_dict() for t in self.trace],
            "witness": None if self.witness is None else self.witness.to_dict(k),
        }
        if self.reason:
            out["reason"] = self.reason
        return out

    def report(self, k: int = 5) -> str:
        lines = [f"{self.expr}: {self.result.value}"]
        if self.reason:
            lines.append(f"  reason: {self.reason}")
        for t in self.trace:
            tag = " (derived rule)" if t.derived else ""
            lines.append(f"  {t.rule}{tag}: {t.expr} -- {t.anchor}")
        if self.witness is not None:
            w = self.witness
            sup = "{" + ",".join(sorted(map(str, w.common_support))) + "}"
            lines.append(f"  witness: {w.description}; common support {sup}")
            for i, x in enumerate(w.first(k)):
                lines.append(f"    [{i}] {show(x)}")
        return "\n".join(lines)


# Formal statement of each rule; the rule name is the stable identifier.
ANCHORS = {
    "atoms-nui": "for finite S, the atoms supported by S are exactly the elements of S",
    "pfs-atoms-nui": "for finite S, the S-supported subsets of A are the subsets of S and "
                     "their complements, at most 2^(|S|+1)",
    "tfin-nui": "an S-supported injective tuple uses only atoms of S; there are at most "
                "1 + A(|S|,1) + ... + A(|S|,|S|)",
    "fun-a-pfs-nui": "finitely many S-supported functions A -> P_fs(A): table on S plus one "
                     "of four uniform tail shapes",
    "fun-a-a-nui": "A^A_fs embeds equivariantly into P_fs(A)^A_fs",
    "fun-a-power-nui": "(A^n)^A_fs is equivariantly in bijection with (A^A_fs)^n",
    "fun-a-tfin-nui": "S-supported f: A -> T_fin(A) has constant length off S; finitely many "
                      "per length, and lengths of S|{a}-supported tuples are bounded",
    "pus-closure-nui": "X without infinite uniformly supported subsets => so is P_us(X); "
                       "supp of a uniformly supported set is the union of member supports",
    "pfin-closure-nui": "P_fin(X) is contained in P_us(X)",
    "pcofin-closure-nui": "Z -> X \\ Z is a supp(X)-supported bijection P_fin(X) -> P_cofin(X)",
    "product-nui": "supp((x, y)) = supp(x) | supp(y); an infinite uniform family of pairs "
                   "has an infinite uniform projection",
    "sum-nui": "an infinite uniform family in X + Y has infinitely many members in one summand",
    "trivial-set-ui": "every element of a non-atomic set is fixed by all permutations",
    "tdelta-ui": "(a, ..., a) of length i is supported by {a} for every i",
    "pfs-pfin-ui": "X_i = {Z subset of X : |Z| = i} is supp(X)-supported and the X_i are distinct",
    "pfs-pfs-ui": "X_i = {Z subset of X : |Z| = i} lies in P_fs(P_fs(X)) for every i",
    "pfs-tfin-ui": "Y_i = injective i-tuples over X is supp(X)-supported and the Y_i are distinct",
    "product-ui": "(x_i, y0) is supported by the family's support together with supp(y0)",
    "sum-ui": "(k, x_i) has the same support as x_i",
    "singleton-ui": "{x_i} has the same support as x_i",
    "cofinite-complement-ui": "X \\ {x_i} is supported by supp(X) | supp(x_i)",
    "pus-atoms-canonical": "a uniformly supported set of atoms lies inside its common support, "
                           "so P_us(A) = P_fin(A)",
    "pus-trivial": "every subset of a trivial set is uniformly supported by the empty set",
    "power-as-product": "e^n is the n-fold product e x ... x e",
    "no-rule": "no rule covers this construction",
}


def _entry(rule: str, e: SetExpr, derived: bool = False) -> TraceEntry:
    return TraceEntry(rule, ANCHORS[rule], str(e), derived)


# ---------------------------------------------------------------- analysis


def _is_trivial(e: SetExpr) -> bool:
    if isinstance(e, Nat):
        return True
    if isinstance(e, (Prod, Sum)):
        return _is_trivial(e.left) and _is_trivial(e.right)
    if isinstance(e, Power):
        return _is_trivial(e.base)
    if isinstance(e, _Unary):
        return _is_trivial(e.arg)
    return False


def _is_infinite(e: SetExpr) -> bool:
    # Every construction of the grammar denotes an infinite set: its leaves
    # are A, Nat or tuple sets, and the operations preserve infinitude.
    return True


def _atom_power(e: SetExpr) -> int | None:
    """n when ``e`` is A^n (or a product of n copies of A), else None."""
    if isinstance(e, AtomsA):
        return 1
    if isinstance(e, Power):
        k = _atom_power(e.base)
        return None if k is None else k * e.n
    if isinstance(e, Prod):
        l, r = _atom_power(e.left), _atom_power(e.right)
        return None if l is None or r is None else l + r
    return None


def _point(e: SetExpr) -> Any:
    """Some element of the (nonempty) set ``e``."""
    if isinstance(e, AtomsA):
        return fresh_atoms(1)[0]
    if isinstance(e, Nat):
        return 0
    if isinstance(e, (TFin, TDelta)):
        return ()
    if isinstance(e, Prod):
        return (_point(e.left), _point(e.right))
    if isinstance(e, Sum):
        return (0, _point(e.left))
    if isinstance(e, Power):
        return tuple(_point(e.base) for _ in range(e.n))
    if isinstance(e, (PFin, PUs, PFs)):
        return frozenset()
    if isinstance(e, PCofin):
        return Whole(e.arg)
    if isinstance(e, Fun):
        if isinstance(e.domain, AtomsA):
            if isinstance(e.codomain, AtomsA):
                return AtomFun.identity()
            if e.codomain == PFs(AtomsA()):
                return AtomSetFun(frozenset(), (), SetTail(TailKind.FIN_CONST))
            n = _atom_power(e.codomain)
            if n is not None:
                return TupleFun(frozenset(), (), (SELF,) * n)
            if isinstance(e.codomain, TFin):
                return TupleFun(frozenset(), (), (), injective=True)
        return ConstFun(e.domain, _point(e.codomain))
    raise TypeError(f"unknown expression node {e!r}")


def _ui(e, rule, trace, support, gen, description, derived=False) -> Verdict:
    w = WitnessFamily(frozenset(support), gen, description)
    return Verdict(e, UI, trace + [_entry(rule, e, derived)], w)


def _nui(e, rule, trace, derived=False) -> Verdict:
    return Verdict(e, NUI, trace + [_entry(rule, e, derived)])


def _unknown(e, trace, reason) -> Verdict:
    return Verdict(e, UNKNOWN, trace + [_entry("no-rule", e)], reason=reason)


def _lift_singletons(e, sub: Verdict, trace) -> Verdict:
    w = sub.witness
    return _ui(e, "singleton-ui", trace, w.common_support,
               lambda i, g=w.generator: frozenset({g(i)}),
               f"{{x_i}} for x_i in: {w.description}", derived=True)


def analyze(e: SetExpr | str) -> Verdict:
    """Classify ``e`` as uniformly infinite, non-uniformly infinite, or unknown."""
    if isinstance(e, str):
        e = parse_expr(e)

    if isinstance(e, AtomsA):
        return _nui(e, "atoms-nui", [])
    if isinstance(e, Nat):
        return _ui(e, "trivial-set-ui", [], (), lambda i: i, "n -> n")
    if isinstance(e, TFin):
        return _nui(e, "tfin-nui", [])
    if isinstance(e, TDelta):
        (a,) = fresh_atoms(1)
        return _ui(e, "tdelta-ui", [], {a}, lambda i: (a,) * i, f"i -> ({a}, ..., {a}) of length i")

    if isinstance(e, Power):
        prod = e.base
        for _ in range(e.n - 1):
            prod = Prod(prod, e.base)
        sub = analyze(prod)
        sub.expr = e
        sub.trace.append(_entry("power-as-product", e))
        return sub

    if isinstance(e, (Prod, Sum)):
        left, right = analyze(e.left), analyze(e.right)
        trace = left.trace + right.trace
        if left.result is NUI and right.result is NUI:
            return _nui(e, "product-nui" if isinstance(e, Prod) else "sum-nui", trace)
        for side, sub, other in ((0, left, e.right), (1, right, e.left)):
            if sub.result is not UI:
                continue
            w = sub.witness
            if isinstance(e, Sum):
                return _ui(e, "sum-ui", trace, w.common_support,
                           lambda i, g=w.generator, k=side: (k, g(i)),
                           f"({side}, x_i) for x_i in: {w.description}", derived=True)
            y0 = _point(other)
            if side == 0:
                gen = lambda i, g=w.generator: (g(i), y0)
            else:
                gen = lambda i, g=w.generator: (y0, g(i))
            return _ui(e, "product-ui", trace, w.common_support | supp(y0), gen,
                       f"x_i paired with fixed {show(y0)}; x_i in: {w.description}",
                       derived=True)
        return _unknown(e, trace, "a factor has no verdict")

    if isinstance(e, Fun):
        if not isinstance(e.domain, AtomsA):
            return _unknown(e, [], "only functions with domain A are classified")
        cod = e.codomain
        if isinstance(cod, AtomsA):
            return _nui(e, "fun-a-a-nui", [])
        if cod == PFs(AtomsA()):
            return _nui(e, "fun-a-pfs-nui", [])
        if isinstance(cod, TFin):
            return _nui(e, "fun-a-tfin-nui", [])
        if _atom_power(cod) is not None:
            return _nui(e, "fun-a-power-nui", [])
        return _unknown(e, [], f"no classification for functions A -> {cod}")

    if isinstance(e, PUs) and isinstance(e.arg, AtomsA):
        sub = analyze(PFin(AtomsA()))
        return Verdict(e, sub.result, sub.trace + [_entry("pus-atoms-canonical", e)], sub.witness)

    if isinstance(e, (PFin, PCofin, PUs)):
        sub = analyze(e.arg)
        trace = list(sub.trace)
        if isinstance(e, PUs) and _is_trivial(e.arg):
            trace.append(_entry("pus-trivial", e))
        if sub.result is NUI:
            rule = {PFin: "pfin-closure-nui", PCofin: "pcofin-closure-nui",
                    PUs: "pus-closure-nui"}[type(e)]
            return _nui(e, rule, trace, derived=isinstance(e, PCofin) and e.arg != AtomsA())
        if sub.result is UI:
            if isinstance(e, PCofin):
                w = sub.witness
                return _ui(e, "cofinite-complement-ui", trace, w.common_support,
                           lambda i, g=w.generator, x=e.arg: CofiniteIn(x, frozenset({g(i)})),
                           f"X \\ {{x_i}} for x_i in: {w.description}", derived=True)
            return _lift_singletons(e, sub, trace)
        return _unknown(e, trace, "argument has no verdict")

    if isinstance(e, PFs):
        x = e.arg
        if isinstance(x, AtomsA):
            return _nui(e, "pfs-atoms-nui", [])
        if isinstance(x, (PFin, PFs)) and _is_infinite(x.arg):
            rule = "pfs-pfin-ui" if isinstance(x, PFin) else "pfs-pfs-ui"
            return _ui(e, rule, [], (), lambda i, base=x.arg: SizedSubsets(i, base),
                       f"i -> all i-element subsets of {x.arg}")
        if isinstance(x, TFin):
            return _ui(e, "pfs-tfin-ui", [], (), InjectiveTuplesOfLength,
                       "i -> all injective i-tuples of atoms")
        sub = analyze(x)
        if sub.result is UI:
            return _lift_singletons(e, sub, list(sub.trace))
        return _unknown(e, list(sub.trace), f"no rule for finitely supported subsets of {x}")

    raise TypeError(f"unknown expression node {e!r}")


def witness(e: SetExpr | str) -> WitnessFamily:
    """The witness family of a uniformly infinite construction."""
    v = analyze(e)
    if v.result is not UI:
        raise ValueError(f"{v.expr} is not shown uniformly infinite ({v.result.value})")
    return v.witness


@dataclass(frozen=True)
class WitnessCheck:
    distinct: bool
    supported: bool
    invariant: bool

    @property
    def ok(self) -> bool:
        return self.distinct and self.supported and self.invariant


def check_witness(w: WitnessFamily, k: int = 20, samples: int = 50, seed: int = 0) -> WitnessCheck:
    """Check the first ``k`` members: distinct, supported, and fixed by sampled stabiliser elements."""
    members = w.first(k)
    keys = [w.key(x) for x in members]
    distinct = len(set(keys)) == len(keys)
    supported = all(supp(x) <= w.common_support for x in members)
    pool = set(w.common_support).union(*(supp(x) for x in members)) | set(fresh_atoms(3))
    perms = sample_fix(w.common_support, samples, seed, pool)
    invariant = all(act(p, x) == x for p in perms for x in members)
    return WitnessCheck(distinct, supported, invariant)


def supp_of_uniform_family(family: Iterable[Any]) -> frozenset[Atom]:
    """Least support of a finite uniformly supported set: the union of member supports."""
    out: frozenset[Atom] = frozenset()
    for x in family:
        out |= supp(x)
    return out


@dataclass(frozen=True)
class ChainCheck:
    common_support: frozenset[Atom]
    verified: bool


def check_chain(
    members: Iterable[Any],
    less: Callable[[Any, Any], bool],
    order_support: Iterable[Atom] = (),
    samples: int = 50,
    seed: int = 0,
) -> ChainCheck:
    """Check that a finite totally ordered family is uniformly supported.

    Raises ``ValueError`` if ``less`` is not a strict total order on
    ``members``.  The common support is the order's declared support
    together with the support of the member set.
    """
    members = list(members)
    for x, y in itertools.combinations(members, 2):
        if less(x, y) == less(y, x):
            raise ValueError(f"order is not total on members: {show(x)} vs {show(y)}")
    for x in members:
        if less(x, x):
            raise ValueError(f"order is not irreflexive at {show(x)}")
    common = frozenset(order_support) | supp_of_uniform_family(members)
    pool = set(common) | set(fresh_atoms(3))
    perms = sample_fix(common, samples, seed, pool)
    verified = all(act(p, x) == x for p in perms for x in members)
    return ChainCheck(common, verified)
