from .field import Frac, KField, PolyField, QQ, QTField
from .lattice import (LatticePoly, alternating_sum, bar, constant_term,
                      evaluate_at_qpower, orbitsum, qdim, weyl_character,
                      weyl_denominator)

__all__ = [
    "Frac", "KField", "PolyField", "QQ", "QTField",
    "LatticePoly", "alternating_sum", "bar", "constant_term",
    "evaluate_at_qpower", "orbitsum", "qdim", "weyl_character",
    "weyl_denominator",
]
