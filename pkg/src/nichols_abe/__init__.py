"""Exact symmetrizer ranks, Nichols dimensions and permutation statistics for V_abe."""

from .braiding import (BraidingParams, MonomialTerm, apply_c, diagonal_basis_braiding,
                       normalize_to_e1, phi_apply, ybe_check)
from .closed_forms import (HypothesisViolation, cf_bminus1_tilde, cf_dimension, cf_E,
                           cf_orbit_size, cf_tilde_fk)
from .linalg import UnsupportedMode, bareiss_rank
from .scalars import (A, B, E, CyclotomicNumber, MultiPoly, ParamPoint, parse_scalar,
                      q_factorial, q_int)
from .symaction import (CapExceeded, act, ek_table, fset, orbit, orbit_partition,
                        reduced_word, sl, tl)
from .symmetrizer import (BlockMatrix, GradedProfile, graded_dim, nichols_dimension, rank,
                          symmetrizer_block, tilde_f, tilde_f_bruteforce, tilde_f_k)
from .verify import ClosedFormReport, verify_all

__version__ = "0.1.0"
