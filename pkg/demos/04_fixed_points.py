"""Least fixed points of finitely supported monotone maps on finite sets of atoms.

Iterating from the empty set stays inside the support of the map, so the
chain stops within |supp| + 1 steps.
"""
from nomset.atoms import Labels
from nomset.fixpoint import (
    iterate_to_fix, lfp_from_empty, parse_map, progressive_fixed_points_check,
    strict_monotone_fixed_points_check, support_of_map,
)
from nomset.fscore import parse_atomset

L = Labels()
for text in ["(cup{a} | perm((a b)))", "(cup{a} ; perm((a b c)))", "img(fun{a->b, b->c, c->c; tail=id})"]:
    M = parse_map(text, L)
    r = lfp_from_empty(M)
    print(f"{M}: support {sorted(map(str, support_of_map(M)))}")
    print("   chain", " -> ".join(map(str, r.chain)), f"({r.steps} steps)")

M = parse_map("img(fun{a->b, b->c, c->c; tail=id})", L)
print("from {a}:", " -> ".join(map(str, iterate_to_fix(M, parse_atomset("{a}", L)).chain)))
print("progressive check:", progressive_fixed_points_check(M, 20).counts())
print("strict-monotone check on perm((a b)):",
      strict_monotone_fixed_points_check(parse_map("perm((a b))", L), 20).counts())
