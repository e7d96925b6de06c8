"""
sigma^(i) inside symbol algebras
================================

(z, w)_r is modelled by r x r matrices X = u*diag(1, zeta, ...), Y = v*shift,
with z = u^r and w = v^r.  Characteristic coefficients of any element only
depend on u^r and v^r, so they can be rewritten in z and w.
"""
import numpy as np

from charcert.algebras import (TensorSpec, evidence_search, general_ext_sigma, parse_element,
                               random_element, sigma_all, symbol_matrix_model, ud_sigma)

quat = TensorSpec.single(2)
X, Y = symbol_matrix_model(quat.factors[0])
print("X =", X, "\nY =", Y)

q = parse_element(quat, "2 + 3*x - y + 5*x*y")
print("\nsigma of", q, "=", [str(s) for s in sigma_all(quat, q)])  # (-trace, reduced norm)

rng = np.random.default_rng(1)
e = random_element(TensorSpec.single(3), rng, degree_bound=1)
print("\nrandom element of (z, w)_3:", e)
for i, s in enumerate(sigma_all(TensorSpec.single(3), e), 1):
    print(f"  sigma^({i}) =", s)

print("\ngeneric 2x2 matrices: sigma^(2)(XY) =", ud_sigma(2, "X*Y", 2))
print("general extension of degree 3: sigma^(1)(x^2) =", general_ext_sigma(3, "x^2", 1))

# seeded search for trace 0 and norm 1 elements: never a proof, only evidence
rep = evidence_search(quat, "trace0-norm1", trials=200, seed=42, degree_bound=2)
print("\n" + rep.to_text())
