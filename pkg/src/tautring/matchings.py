"""Gram matrices of perfect-matching monomials and their kernels.

The degree-m monomials b_{i1,j1}...b_{im,jm} on 2m indices pair into a
square matrix of size (2m-1)!!.  Its only nonzero eigenvalue is
(-1)^m (m+1)! with multiplicity (2m)!/(m!(m+1)!), the hook-length
dimension of the rectangular partition (2,...,2); the kernel is spanned by
three-term sums R_{ijkl} times matchings of the complementary indices.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import factorial

from .curve import CurveMonomial, curve_socle_eval, perfect_matchings
from .exact import QQ
from .linalg import RationalMatrix


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def hook_length_dimension(partition: tuple[int, ...]) -> int:
    """Number of standard Young tableaux of the given shape."""
    rows = list(partition)
    if any(rows[i] < rows[i + 1] for i in range(len(rows) - 1)):
        raise ValueError("partition rows must be weakly decreasing")
    n = sum(rows)
    cols = [sum(1 for r in rows if r > c) for c in range(rows[0])] if rows else []
    hooks = 1
    for i, r in enumerate(rows):
        for j in range(r):
            hooks *= (r - j) + (cols[j] - i) - 1
    return factorial(n) // hooks


@dataclass
class TabloidSpace:
    """Perfect matchings on {1..2m} together with the dimension data of the
    two-column rectangular representation."""

    m: int
    matchings: list[tuple[tuple[int, int], ...]] = field(init=False)

    def __post_init__(self):
        self.matchings = list(perfect_matchings(tuple(range(1, 2 * self.m + 1))))

    @property
    def count(self) -> int:
        return len(self.matchings)

    @property
    def rectangle_dimension(self) -> int:
        """Hook-length dimension of the partition (2,...,2) with m rows."""
        return hook_length_dimension((2,) * self.m)

    def index(self) -> dict:
        return {mm: i for i, mm in enumerate(self.matchings)}


def t_matrix(m: int) -> RationalMatrix:
    """Gram matrix of degree-m matching monomials in 2m variables."""
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 2 * m
    space = TabloidSpace(m)
    elems = [CurveMonomial((), mm).to_element(n) for mm in space.matchings]
    size = space.count
    out = RationalMatrix(size, size)
    for i in range(size):
        for j in range(i, size):
            val = curve_socle_eval(elems[i] * elems[j], n)
            if val:
                out.rows[i][j] = val
                if i != j:
                    out.rows[j][i] = val
    return out


def t_matrix_scale(m: int) -> int:
    """The scalar c with T^2 = c T, namely (-1)^m (m+1)!."""
    return (-1) ** m * factorial(m + 1)


def t_matrix_rank_expected(m: int) -> int:
    return factorial(2 * m) // (factorial(m) * factorial(m + 1))


def three_term_kernel(m: int) -> list[list]:
    """Kernel generators of t_matrix(m) in matching coordinates.

    Each vector is R_{ijkl} times a perfect matching of the remaining
    2m - 4 indices, expanded in the matching basis (three entries 1).
    """
    if m < 2:
        return []
    space = TabloidSpace(m)
    idx = space.index()
    vectors = []
    universe = tuple(range(1, 2 * m + 1))
    for quad in combinations(universe, 4):
        i, j, k, l = quad
        triples = (
            ((i, j), (k, l)),
            ((i, k), (j, l)),
            ((i, l), (j, k)),
        )
        rest = tuple(x for x in universe if x not in quad)
        for mu in perfect_matchings(rest):
            vec = [QQ(0)] * space.count
            for two in triples:
                full = tuple(sorted(two + mu))
                vec[idx[full]] += QQ(1)
            vectors.append(vec)
    return vectors
