"""
One-cocycle polynomials
=======================

Degree 0 counts triples of one type with their signs.  Higher degrees weight
each triple by x to a signed count of arrow configurations around it.
"""

from braidcocycles import BraidWord, eval_gamma0, eval_gamma1_nm2, eval_gamma_d, generate_rot, vanishing_bound

log = generate_rot(BraidWord(4, (1, -2, -3)))
for a, b, t in [(1, 2, "-"), (2, 3, "+"), (2, 1, "-"), (3, 2, "+")]:
    print(f"Gamma_({a},{b}){t} =", eval_gamma0(log, a, b, t))

beta = BraidWord(3, (1, 1, 1, 2, 2, 1, 2, 1))
log = generate_rot(beta)
for fam in ["degd-l:1", "degd-l:2", "degd-l:4", "degd-h:2", "degd-h:4", "degd-l:1:mirror"]:
    print(f"{fam:16}", eval_gamma_d(log, fam))

# dropping triples with no configuration reproduces hand calculations that
# skip them, but that variant is not an invariant
print("degd-l:2 matched only:", eval_gamma_d(log, "degd-l:2", count_unmatched=False))

# for n > 3 there is a degree-1 cocycle of type (n-2,1)-
print("Gamma^1_(2,1)- of 3 2 3 1 2:", eval_gamma1_nm2(generate_rot(BraidWord(4, (3, 2, 3, 1, 2)))))

# every cocycle of Gauss degree at least this bound vanishes
print("vanishing bound for c=8, n=3:", vanishing_bound(8, 3))
