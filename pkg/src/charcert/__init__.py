"""Exact characteristic-polynomial coefficients and fixed-point certificates."""
from .scalars import CycloNum, cyclo_make, cyclo_arith, cyclo_pow, root_of_unity_order
from .polynomials import MultiPoly, RatFunc, parse_poly
from .matrices import PolyMatrix, char_poly, determinant, resultant
from .report import VerificationReport, emit
from .symfun import (TwoBlockSystem, decide_two_block, elem_sym, high_powers_check,
                     newton_convert, power_sum, specialize_two_block)
from .groupfix import (AbelianGroupSpec, Character, basis_check, character_decomposition_check,
                       commutation_check, cyclic_counterexample_check, diag_matrix,
                       paired_charpoly_check, perm_matrix, sn_fixed_point_certificate,
                       equal_sigma_product_certificate, root_of_unity_condition_check)
from .algebras import (AlgebraElement, SymbolSpec, TensorSpec, evidence_search,
                       ext_to_generic_consistency, general_ext_sigma, inverse_identity_check,
                       sigma_in_algebra, symbol_matrix_model, tensor_model, ud_sigma)
from .octonion import (Octonion, OctonionSpec, automorphism_check, character_table_check,
                       composition_check, oct_conj, oct_mul, oct_norm, oct_trace,
                       octonion_sign_system_certificate, quadratic_identity_check, tau_action)
from .tables import table_deg
