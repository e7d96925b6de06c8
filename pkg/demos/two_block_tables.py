"""
When can two characteristic coefficients vanish together?
=========================================================

For a degree-n extension, sigma^(m1)(x) = sigma^(m2)(x) = 0 has a nonzero
solution only if a finite fixed-point problem does.  For a split into two
blocks of sizes n1 + n2 = n this reduces to two binary forms in (a, b).
"""
from charcert.matrices import resultant
from charcert.polynomials import MultiPoly
from charcert.symfun import TwoBlockSystem, decide_two_block, specialize_two_block
from charcert.tables import table_deg

# s_i evaluated at n1 copies of a and n2 copies of b
for i in (1, 2, 3, 4):
    print(f"s_{i}(a, b, b, b, b) =", specialize_two_block(i, 1, 4))

# The pair (2, 3) in degree 5: dehomogenize at b = 1 and take a resultant.
sy = TwoBlockSystem(2, 3, 2, 3, "sigma")
f1, f2 = sy.forms()
t = MultiPoly.var("t")
u1 = f1.substitute({"b": 1, "a": t})
u2 = f2.substitute({"b": 1, "a": t})
print("\nforms:", f1, "|", f2)
print("resultant in t = a/b:", resultant(u1, u2, "t"))
print("decision:", decide_two_block(sy).outcome)

# A trace system with a common zero: 2a + 2b = 0 and 2a^3 + 2b^3 = 0
dec = decide_two_block(TwoBlockSystem(2, 2, 1, 3, "trace"))
print("\ntrace system (2,2,1,3):", dec.outcome, "witness (a, b) =", tuple(map(str, dec.witness)))

# The full degree-5 and degree-6 tables
for n in (5, 6):
    print()
    print(table_deg(n).to_text())
