"""
Octonions from Cayley-Dickson doubling
======================================

The algebra with parameters (a, b, c) is built by doubling twice; the
multiplication table is generated, never typed in.
"""
from charcert.octonion import (BASIS, Octonion, OctonionSpec, basis_characters,
                               multiplication_table, octonion_sign_system_certificate,
                               quadratic_identity_check)
from charcert.report import canon

spec = OctonionSpec()
table = multiplication_table(spec)
print("      " + "".join(f"{b:>10s}" for b in BASIS))
for name, row in zip(BASIS, table):
    print(f"{name:>6s}" + "".join(f"{str(x):>10s}" for x in row))

x = Octonion.generic(spec)
print("\nquadratic identity for", x, ":", quadratic_identity_check(spec, x).status)

print("\nsigns of tau_1, tau_2, tau_3 on each basis line:")
for name, ch in zip(BASIS, basis_characters()):
    print(f"  {name:>3s}  {ch}")

for m, s, expr in ((2, 1, "x1*x2"), (2, 2, "x1*x1 + x2*x2")):
    rep = octonion_sign_system_certificate(m, s, expr)
    print(f"\nm={m} s={s} Q={expr}: {rep.status}")
    for step in rep.steps:
        if step.kind == "witness":
            print("  ", step.description, canon(step.values))
