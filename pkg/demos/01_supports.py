"""Supports of atoms, sets and functions.

A finite set of atoms S supports x when every permutation fixing S pointwise
fixes x.  The least support is computed structurally and confirmed by
swapping each candidate atom with a fresh one.
"""
from nomset import AtomFun, AtomSet, Labels, act, least_support, supp, transpose
from nomset.fsfun import make_atom_fun

L = Labels("abcd")
a, b, c, d = L.atoms("abcd")

cofinite = AtomSet.cofinite_of([a, b])
print("X =", cofinite, " supp(X) =", sorted(supp(cofinite)))
print("(a c).X =", act(transpose(a, c), cofinite))

# a table that looks like it needs {a, b, c} but agrees with the identity at c
f = make_atom_fun([a, b, c], {a: b, b: b, c: c})
print("f =", f, " normal form", f.normalized, " supp", sorted(f.support()))
rep = least_support(f, [a, b, c, d])
for tau, changed in rep.witness_checks:
    print(f"  swap {tau}: {'moves f' if changed else 'fixes f'}")

const = AtomFun.constant(d)
print("constant map", const, "has support", sorted(const.support()))
