"""Computing with finitely supported sets over an infinite set of atoms."""
from .atoms import Atom, Labels, Perm, fresh_atoms, transpose
from .fscore import ALL, EMPTY, AtomSet, act, least_support, supp
from .fsfun import AtomFun, AtomSetFun, TupleFun
from .analyzer import analyze, parse_expr
from .counting import count_supported, cross_check
from .fixpoint import iterate_to_fix, lfp_from_empty, parse_map

__all__ = [
    "Atom", "Labels", "Perm", "fresh_atoms", "transpose",
    "ALL", "EMPTY", "AtomSet", "act", "least_support", "supp",
    "AtomFun", "AtomSetFun", "TupleFun",
    "analyze", "parse_expr", "count_supported", "cross_check",
    "iterate_to_fix", "lfp_from_empty", "parse_map",
]
