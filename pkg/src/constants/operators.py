"""
The box operator A -> YAF - FAY and the sequence T_1 = [Y, X], T_{i+1} = box(T_i).
"""

from ncalg.ncpoly import T1, Y, NCPoly


def box(A: NCPoly, F: NCPoly) -> NCPoly:
    """YAF - FAY. Commutes with the derivation X -> 0, Y -> F."""
    return Y * A * F - F * A * Y


def t_sequence(i: int, F: NCPoly) -> NCPoly:
    """T_i with T_1 = YX - XY and T_{i+1} = box(T_i, F)."""
    if i < 1:
        raise ValueError(f"T-sequence index must be positive, got {i}")
    value = T1
    for _ in range(i - 1):
        value = box(value, F)
    return value
