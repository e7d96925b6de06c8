"""
Paired matrices P_a D_chi of a finite abelian group
===================================================

P_a permutes the basis of the group algebra, D_chi scales it by a character.
Their products are the building blocks of every fixed-point certificate.
"""
from charcert.groupfix import (AbelianGroupSpec, basis_check, pairs, sn_fixed_point_certificate,
                               equal_sigma_product_certificate)
from charcert.matrices import char_poly

group = AbelianGroupSpec.parse("2x3")
print("group", group, "order", group.order, "exponent", group.exponent)

# each pair has charpoly (t^c - eps)^(n/c)
for pe in list(pairs(group))[:8]:
    print(f"{pe.label():22s} c={pe.c} eps={pe.epsilon}  sigma=[{', '.join(map(str, char_poly(pe.matrix())))}]")

print("\nthe 36 matrices form a basis:", basis_check(group).status)

rep = equal_sigma_product_certificate(group, m=6, i=6, j=1)
print("\nequal-sigma/product system on Z/2 x Z/3:", rep.status)
print("\n".join(rep.to_text().splitlines()[-4:]))

# the two-block trace system: verified, then a case with fixed points
for params in ((2, 4, 1, 2), (2, 2, 1, 3)):
    r = sn_fixed_point_certificate(*params)
    print(f"\ntwo-block trace system {params}:", r.status)
    for s in r.steps:
        if s.kind == "witness":
            print("  witness:", s.description)
