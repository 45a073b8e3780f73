"""qdisc: exact deformation of the quantum disc algebra.

The package computes, over the exact coefficient field Q(s) with q = s^2,
the normal-ordered product of the quantum disc, its first-order calculus,
the bidifferential expansion coefficients of the deformed product, the
operator realization on weighted holomorphic polynomials that certifies
those coefficients, the symbol transform with its asymptotic expansion,
and the quantized sl2 symmetry of the whole structure.  Every identity is
checked by exact equality; see the ``verify`` suites and the CLI.
"""

from .scalar import ONE, Q, QScalar, S, TSeries, ZERO, eval_numeric, qpochhammer
from .qpoly import (
    NCPoly,
    TensorPoly,
    WindowError,
    WindowedSeries,
    Z,
    ZS,
    involution,
    nc_mul,
    nc_mul_left_z_power,
    nc_mul_right_zstar_power,
    tensor_mul,
)
from .qcalc import box, box_tilde, d_partial, m0
from .star import PkPolynomial, StarSeries, ck, m_series, pk, series_involution, star
from .fockrep import (
    CovariantSymbolError,
    FockOp,
    InsufficientCutoffError,
    ValidityError,
    berezin,
    berezin_expansion,
    covariant_symbol,
    i_op,
    i_op_poly,
    q_map,
    zhat,
    zhat_star,
)
from .uqsl2 import (
    E,
    F,
    GENERATORS,
    K,
    KINV,
    act,
    act_series,
    act_word,
    check_box_equivariance,
    check_involution_compat,
    check_module_algebra,
    check_star_equivariance,
)
from .expr import EvalError, ParseError, parse, parse_ncpoly, parse_scalar, to_ncpoly

__version__ = "0.1.0"

__all__ = [
    "QScalar",
    "TSeries",
    "ZERO",
    "ONE",
    "S",
    "Q",
    "qpochhammer",
    "eval_numeric",
    "NCPoly",
    "TensorPoly",
    "WindowedSeries",
    "WindowError",
    "Z",
    "ZS",
    "nc_mul",
    "involution",
    "nc_mul_left_z_power",
    "nc_mul_right_zstar_power",
    "tensor_mul",
    "d_partial",
    "box",
    "box_tilde",
    "m0",
    "PkPolynomial",
    "pk",
    "ck",
    "star",
    "StarSeries",
    "m_series",
    "series_involution",
    "FockOp",
    "i_op",
    "i_op_poly",
    "zhat",
    "zhat_star",
    "q_map",
    "covariant_symbol",
    "berezin",
    "berezin_expansion",
    "ValidityError",
    "InsufficientCutoffError",
    "CovariantSymbolError",
    "E",
    "F",
    "K",
    "KINV",
    "GENERATORS",
    "act",
    "act_word",
    "act_series",
    "check_module_algebra",
    "check_star_equivariance",
    "check_box_equivariance",
    "check_involution_compat",
    "parse",
    "to_ncpoly",
    "parse_ncpoly",
    "parse_scalar",
    "ParseError",
    "EvalError",
    "__version__",
]
