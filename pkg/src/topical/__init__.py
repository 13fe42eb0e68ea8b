"""Exact max-plus calculus on K-bar = K with a top element adjoined.

Scalars, residuation on K^n, topical and anti-topical functions,
Fenchel-Moreau conjugates, polars, support sets, and an exhaustive oracle
over the Boolean semifield.
"""
from .errors import DimensionError, InternalConsistencyError, ParseError, PreconditionError, TopicalError
from .scalar import EPS, TOP, E, Semifield, finite, invert, otimes, otimes_dot, residual_scalar, scalar
from .semimodule import bottom, is_bottom, residuate, scale, vector
from .functions import (
    Const, FinGen, InverseOf, Pointwise, ProbeSet, Table, check_anti_topical, check_topical, s_yd, sbar_yd,
)
from .conjugation import (
    Estimate, biconjugate_phi, conjugate_phi, conjugate_psi, conjugate_reflected, lower_conjugate_phi,
    lower_conjugate_psi,
)
from .polars import FiniteSet, bipolar_membership, polar_membership, support_function
from .support import canonical_witness, supp_at_point_X, supp_at_point_XK, supp_membership, supp_reconstruct
from .oracle import TheoremId, census, verify, verify_all

__version__ = "0.1.0"
