"""detfsing: exact-arithmetic workbench for Frobenius splittings of
determinantal ideals over small prime fields."""

from .errors import (
    BudgetExceeded,
    ImproperIdeal,
    IterationCapExceeded,
    KernelError,
    ParseError,
    PreconditionViolated,
    RingMismatch,
    SeedIncompatible,
    UndeclaredVariable,
    UsageError,
)
from .groebner import Budget, GBStats
from .ideals import Ideal, poly_divexact
from .matrix import PolyMatrix, poly_det
from .poly import Polynomial, poly_parse, poly_print, trace_apply
from .ring import RingContext, Var

__version__ = "0.1.0"

__all__ = [
    "Budget",
    "BudgetExceeded",
    "GBStats",
    "Ideal",
    "ImproperIdeal",
    "IterationCapExceeded",
    "KernelError",
    "ParseError",
    "PolyMatrix",
    "Polynomial",
    "PreconditionViolated",
    "RingContext",
    "RingMismatch",
    "SeedIncompatible",
    "UndeclaredVariable",
    "UsageError",
    "Var",
    "poly_det",
    "poly_divexact",
    "poly_parse",
    "poly_print",
    "trace_apply",
]
