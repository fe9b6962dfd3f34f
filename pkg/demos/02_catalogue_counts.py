"""How many elements does a fixed finite S support?

Closed-form counts are compared with a symbolic enumeration and with brute
force in a finite universe of atoms.
"""
from nomset.atoms import fresh_atoms
from nomset.counting import FORMULAS, count_supported, cross_check
from nomset.oracle import min_universe

print(f"{'kind':<11}" + "".join(f"{s:>18}" for s in range(5)))
for kind in FORMULAS:
    arity = 2 if kind == "funATuple" else None
    row = [count_supported(kind, s, arity) for s in range(5)]
    print(f"{kind:<11}" + "".join(f"{n:>18}" for n in row), " ", FORMULAS[kind].text)

print()
S = fresh_atoms(2, "ab")
for kind in ("subsets", "funAA", "funATfin"):
    N = max(2 * len(S) + 2, min_universe(kind, len(S)))
    print(cross_check(kind, S, N))
