"""Core functionality for trigbase."""

from .errors import (
    CheckFailed,
    ConjectureViolation,
    Mismatch,
    NetworkError,
    NotAvailableOffline,
    ParseError,
    TrigBaseError,
)
from .numbers import GaussianRational, QuadInt
from .polynomial import IntPoly, RatPoly, poly_exact_div, poly_sqrt
from .laurent import LaurentPoly, laurent_constant_term
from .series import PolySeries, TruncSeries
from .report import CheckReport, CheckStatus
from .chebyshev import chebyshev_t, chebyshev_u, p_poly, v_poly
from .riordan import NamedArray, RiordanArray, named_array
from .basechange import TransitionKind, TrigBasis, power_reduce, transition_matrix
from .fourier import super_catalan, super_catalan_matrix, trig_integral
from .spread import spread_poly, zpread_poly, zpread_values
from .factor import FactorTable, factor_table, golden_fixed_points, run_conjecture_battery
from .oeis import OeisClient, SequenceFixture, crosscheck, fetch_sequence
from .config import Settings, load_config

__all__ = [
    # errors
    'TrigBaseError', 'CheckFailed', 'ConjectureViolation', 'Mismatch',
    'NetworkError', 'NotAvailableOffline', 'ParseError',
    # exact arithmetic
    'GaussianRational', 'QuadInt', 'IntPoly', 'RatPoly', 'poly_exact_div', 'poly_sqrt',
    'LaurentPoly', 'laurent_constant_term', 'PolySeries', 'TruncSeries',
    'CheckReport', 'CheckStatus',
    # families and base changes
    'chebyshev_t', 'chebyshev_u', 'p_poly', 'v_poly',
    'NamedArray', 'RiordanArray', 'named_array',
    'TransitionKind', 'TrigBasis', 'power_reduce', 'transition_matrix',
    'super_catalan', 'super_catalan_matrix', 'trig_integral',
    'spread_poly', 'zpread_poly', 'zpread_values',
    # factor battery and OEIS
    'FactorTable', 'factor_table', 'golden_fixed_points', 'run_conjecture_battery',
    'OeisClient', 'SequenceFixture', 'crosscheck', 'fetch_sequence',
    'Settings', 'load_config',
]
