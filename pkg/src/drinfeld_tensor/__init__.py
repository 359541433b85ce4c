"""Exact arithmetic for Drinfeld modules, their tensor, symmetric and
alternating squares, the convolution L-series built from Schur-polynomial
arithmetic functions, and rank 2 logarithms and regulators."""

from .fields import GF, FiniteField, FqElem
from .poly import PolyA, PolyRing, parse_poly, enumerate_monic_irreducibles, factor
from .ratfunc import RatK
from .laurent import Laurent
from .tmodules import (DrinfeldModule, TModule, drinfeld_as_tmodule, build_tensor, build_sym2, build_alt2,
                       exp_log_coeffs, module_order_oracle)
from .frobenius import frob_charpoly, FrobCharPoly, chi
from .lseries import MuTable, SeriesSpec, zeta_spec, dirichlet_sum, euler_product, special_value_report
from .regulators import BmSequence, LogFamily, reg_closed_form, reg_via_basis

__version__ = "0.1.0"
