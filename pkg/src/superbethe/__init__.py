"""Exact-rational Bethe vectors, highest coefficients and scalar products for gl(m|n)."""
from .bethe import (Route, Side, apply_t1j_action, build_bethe_vector, build_dual_bethe_vector, main_term,
                    scalar_product_oracle, verify_coproduct)
from .errors import (ColoringMismatchError, DegenerateModelError, EmptyColorError, IdentifiabilityError,
                     NotEigenvectorError, PoleError)
from .fock import (ChainModel, SparseCoState, SparseState, build_r_matrix, check_rtt, color_charge,
                   monodromy_entry, split_model, transfer_apply, vacuum_data)
from .hc import HcRoute, hc, hc_conjugate, hc_symmetry_check
from .kernels import KernelKind, KernelSpec, eval_kernel, set_product
from .partitions import BetheFamily, enumerate_balanced_splits, enumerate_single_splits
from .scalar import extract_w, model_alpha, sum_formula, w_coefficient
from .signature import AlgebraSignature, koszul_sign, parity

__all__ = ["Route", "Side", "apply_t1j_action", "build_bethe_vector", "build_dual_bethe_vector", "main_term",
           "scalar_product_oracle", "verify_coproduct", "ColoringMismatchError", "DegenerateModelError",
           "EmptyColorError", "IdentifiabilityError", "NotEigenvectorError", "PoleError", "ChainModel",
           "SparseCoState", "SparseState", "build_r_matrix", "check_rtt", "color_charge", "monodromy_entry",
           "split_model", "transfer_apply", "vacuum_data", "HcRoute", "hc", "hc_conjugate",
           "hc_symmetry_check", "KernelKind", "KernelSpec", "eval_kernel", "set_product", "BetheFamily",
           "enumerate_balanced_splits", "enumerate_single_splits", "extract_w", "model_alpha", "sum_formula",
           "w_coefficient", "AlgebraSignature", "koszul_sign", "parity"]
