"""Finitely supported injections and surjections, tested on samples."""
from nomset.atoms import fresh_atoms
from nomset.cardinal import (
    WITNESS_NAMES, nat_bool_inject, nat_pair_inject, named_witness, propagation_clash,
    relation_check,
)

print("h(1,2) =", nat_pair_inject(1, 2), " h'(0,0), h'(0,1) =", nat_bool_inject(0, 0), nat_bool_inject(0, 1))
for name in WITNESS_NAMES:
    print(relation_check(*named_witness(name), samples=100, seed=7))

r = propagation_clash(*fresh_atoms(3, "abc"))
print(f"f(0,a) = (a,b) forces f{r.argument} = {r.first_value} via {r.first_perm}"
      f" and = {r.second_value} via {r.second_perm}; clash: {r.clash}")
