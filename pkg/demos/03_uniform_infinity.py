"""Which constructions contain an infinite uniformly supported subset?

The analyzer answers by rules, keeps a trace and, for positive answers,
produces a witness family whose members share one finite support.
"""
from nomset.analyzer import analyze, check_witness

for text in ["A", "Pfs(A)", "Fun(A, Tfin)", "Pfs(Pfin(A))", "Tdelta x Pfs(A)", "Pfs(A x A)"]:
    v = analyze(text)
    print(v.report(k=3))
    if v.witness is not None:
        print("  witness check:", check_witness(v.witness))
    print()
