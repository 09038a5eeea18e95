"""Dominant-weight arithmetic: dimensions, dominance order, duality, indicators.

All computations are exact.  The Weyl dimension is evaluated as a product
of rational factors over the positive coroots and asserted to be integral;
dominance comparison solves the Cartan system over exact rationals.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

import numpy as np

from .root_data import LieType, RootDatum, diagram_automorphism

__all__ = [
    "weyl_dimension",
    "dominance_compare",
    "is_q_restricted",
    "minus_w0",
    "is_self_dual",
    "fs_indicator",
]

# Cap keeps the int64 pairing mat-vec exact; far above any realistic weight.
_COEFF_LIMIT = 1 << 40

Weight = tuple[int, ...]


def as_weight(weight: Sequence[int], rank: int) -> Weight:
    """Validate and normalize a dominant weight given in fundamental coordinates."""
    w = tuple(int(a) for a in weight)
    if len(w) != rank:
        raise ValueError(f"weight length {len(w)} does not match rank {rank}")
    if any(a < 0 for a in w):
        raise ValueError(f"weight {w} has a negative coefficient; dominance requires >= 0")
    if any(a > _COEFF_LIMIT for a in w):
        raise ValueError("weight coefficient too large for exact evaluation")
    return w


def _balanced_prod(values: list[int]) -> int:
    """Product with balanced pairing; keeps big-integer multiplies cheap."""
    if not values:
        return 1
    while len(values) > 1:
        nxt = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def dim_from_pairings(heights: np.ndarray, pairings: np.ndarray) -> int:
    """Exact dimension from <rho, a^vee> and <lambda, a^vee> over positive coroots.

    Coroots pairing to zero with lambda contribute a factor 1 and are
    skipped; the final division is checked to be exact.
    """
    nz = np.nonzero(pairings)[0]
    if nz.size == 0:
        return 1
    hs = heights[nz].tolist()
    ss = pairings[nz].tolist()
    numer = _balanced_prod([h + s for h, s in zip(hs, ss)])
    denom = _balanced_prod(hs)
    dim, rem = divmod(numer, denom)
    if rem:
        raise ArithmeticError("Weyl dimension product is not integral; root data corrupt")
    return dim


def weyl_dimension(datum: RootDatum, weight: Sequence[int]) -> int:
    """Dimension of the highest-weight module with the given dominant weight."""
    w = as_weight(weight, datum.rank)
    pair = datum.positive_coroots @ np.asarray(w, dtype=np.int64)
    return dim_from_pairings(datum.rho_pairings, pair)


def _solve_cartan(cartan: np.ndarray, rhs: Sequence[int]) -> list[Fraction]:
    """Exact solution of cartan . x = rhs by fraction-free Gaussian elimination."""
    m = cartan.shape[0]
    aug = [[Fraction(int(cartan[i, j])) for j in range(m)] + [Fraction(int(rhs[i]))] for i in range(m)]
    for col in range(m):
        piv = next(r for r in range(col, m) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(m):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [aug[i][m] for i in range(m)]


def dominance_compare(datum: RootDatum, weight: Sequence[int], other: Sequence[int]) -> str:
    """Compare two dominant weights in the dominance order.

    Returns "less", "greater", "equal" or "incomparable".  "less" means the
    first weight precedes the second, i.e. the difference is a non-negative
    integer combination of simple roots.
    """
    a = as_weight(weight, datum.rank)
    b = as_weight(other, datum.rank)
    if a == b:
        return "equal"
    diff = [bb - aa for aa, bb in zip(a, b)]
    x = _solve_cartan(datum.cartan, diff)
    if any(v.denominator != 1 for v in x):
        return "incomparable"
    if all(v >= 0 for v in x):
        return "less"
    if all(v <= 0 for v in x):
        return "greater"
    return "incomparable"


def is_q_restricted(weight: Sequence[int], q: int) -> bool:
    """True iff every coefficient lies in 0..q-1."""
    if q < 2:
        raise ValueError(f"q must be at least 2, got {q}")
    return all(0 <= int(a) <= q - 1 for a in weight)


def minus_w0(type_id: LieType, weight: Sequence[int]) -> Weight:
    """Highest weight of the dual module: the diagram symmetry applied to lambda."""
    w = as_weight(weight, type_id.rank)
    perm = diagram_automorphism(type_id)
    return tuple(w[perm[i]] for i in range(type_id.rank))


def is_self_dual(type_id: LieType, weight: Sequence[int]) -> bool:
    w = as_weight(weight, type_id.rank)
    return minus_w0(type_id, w) == w


def fs_indicator(datum: RootDatum, weight: Sequence[int]) -> int:
    """Frobenius-Schur indicator of a self-dual module: +1 orthogonal, -1 symplectic.

    Decided by the parity of <lambda, 2 rho^vee>; callers must gate on
    is_self_dual first (the indicator-0 case is rejected here).
    """
    w = as_weight(weight, datum.rank)
    if not is_self_dual(datum.type_id, w):
        raise ValueError(
            f"{datum.type_id} weight {w} is not self-dual; the indicator is defined "
            "only for self-dual modules"
        )
    parity = sum(int(c) * int(a) for c, a in zip(datum.two_rho_check, w)) % 2
    return -1 if parity else 1
