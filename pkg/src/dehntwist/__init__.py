"""Exact computations around the order of the Dehn twist on T*S^n."""

from .classification import Category, KervaireStatus, explain_twist_order, twist_order
from .errors import OrderSearchExhausted, PreconditionError
from .lattice import (
    AbelianGroup,
    Ambiguous,
    Bounded,
    Finite,
    Infinite,
    IntMatrix,
    OrderResult,
    coker_ker,
    matrix_order,
    matrix_pow,
    snf,
)

__all__ = [
    "AbelianGroup",
    "Ambiguous",
    "Bounded",
    "Category",
    "Finite",
    "Infinite",
    "IntMatrix",
    "KervaireStatus",
    "OrderResult",
    "OrderSearchExhausted",
    "PreconditionError",
    "coker_ker",
    "explain_twist_order",
    "matrix_order",
    "matrix_pow",
    "snf",
    "twist_order",
]

__version__ = "0.1.0"
