"""Degree-one generators for the rings handled by this package.

A generator is a small hashable tuple tagged by kind:

    ("a", i)        class of {x_i = O}
    ("b", j, k)     b_{j,k} = d_{j,k} - a_j - a_k, stored with j < k
    ("d", j, k)     diagonal {x_j = x_k}, stored with j < k
    ("E", I)        exceptional divisor over the center indexed by I
                    (I a sorted tuple, possibly empty)
    ("D", I)        boundary divisor with marking set I on the rational tail

Index bounds are always checked against an ambient number of markings n:
a/b/d indices live in 1..n-1, exceptional index sets satisfy I <= {1..n}
with |I| <= n-3, boundary index sets satisfy I <= {1..n} with |I| >= 2.
"""
from __future__ import annotations

from typing import Iterable

Gen = tuple

_KIND_RANK = {"a": 0, "b": 1, "d": 2, "E": 3, "D": 4}


class GeneratorRangeError(ValueError):
    """An index of a generator is outside the ambient bounds."""


def a_gen(i: int) -> Gen:
    return ("a", i)


def b_gen(j: int, k: int) -> Gen:
    if j == k:
        raise GeneratorRangeError(f"b_{{{j},{k}}} needs distinct indices")
    return ("b", min(j, k), max(j, k))


def d_gen(j: int, k: int) -> Gen:
    if j == k:
        raise GeneratorRangeError(f"d_{{{j},{k}}} needs distinct indices")
    return ("d", min(j, k), max(j, k))


def e_gen(indices: Iterable[int]) -> Gen:
    return ("E", tuple(sorted(set(indices))))


def bd_gen(indices: Iterable[int]) -> Gen:
    return ("D", tuple(sorted(set(indices))))


def gen_kind(g: Gen) -> str:
    return g[0]


def gen_key(g: Gen):
    """Total order on generators: a_1 < ... < b pairs lex < d pairs lex <
    E_I by (|I|, I) < D_I likewise."""
    kind = g[0]
    rank = _KIND_RANK[kind]
    if kind in ("E", "D"):
        return (rank, len(g[1]), g[1])
    return (rank,) + g[1:]


def gen_str(g: Gen) -> str:
    kind = g[0]
    if kind == "a":
        return f"a_{g[1]}"
    if kind in ("b", "d"):
        return f"{kind}_{{{g[1]},{g[2]}}}"
    if kind == "E":
        if not g[1]:
            return "E0"
        return "E_{" + ",".join(str(i) for i in g[1]) + "}"
    if kind == "D":
        return "D_{" + ",".join(str(i) for i in g[1]) + "}"
    raise ValueError(f"unknown generator {g!r}")


def validate_gen(g: Gen, n: int) -> None:
    """Check index bounds against the ambient n, raising GeneratorRangeError."""
    kind = g[0]
    if kind == "a":
        if not 1 <= g[1] <= n - 1:
            raise GeneratorRangeError(
                f"index out of range in {gen_str(g)}: need 1..{n - 1} for ambient n={n}"
            )
    elif kind in ("b", "d"):
        j, k = g[1], g[2]
        if not (1 <= j < k <= n - 1):
            raise GeneratorRangeError(
                f"index out of range in {gen_str(g)}: need 1 <= j < k <= {n - 1} for ambient n={n}"
            )
    elif kind == "E":
        I = g[1]
        if any(not 1 <= i <= n for i in I):
            raise GeneratorRangeError(
                f"index out of range in {gen_str(g)}: indices must lie in 1..{n}"
            )
        if len(I) > n - 3:
            raise GeneratorRangeError(
                f"inadmissible index set in {gen_str(g)}: |I| <= {n - 3} required for ambient n={n}"
            )
    elif kind == "D":
        I = g[1]
        if any(not 1 <= i <= n for i in I):
            raise GeneratorRangeError(
                f"index out of range in {gen_str(g)}: indices must lie in 1..{n}"
            )
        if len(I) < 2:
            raise GeneratorRangeError(
                f"{gen_str(g)} needs at least two markings"
            )
    else:
        raise GeneratorRangeError(f"unknown generator kind {kind!r}")
