"""Index-set combinatorics of the blow-up centers and their forests.

Exceptional divisors are indexed by subsets I of {1..n} with |I| <= n-3.
Two may multiply to something nonzero only under the star condition:
I <= J, J <= I, or I u J = {1..n}.  The index sets of a monomial form a
forest under the minimal-strict-superset relation; its roots, closures and
out-degrees drive the standard-monomial bounds.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

IndexSet = tuple  # sorted tuple[int, ...]


def as_index_set(indices) -> IndexSet:
    return tuple(sorted(set(indices)))


def subset_key(I: IndexSet):
    return (len(I), I)


def subset_less(I, J) -> bool:
    """Size first; on equal size, smaller minimum of the difference wins."""
    I, J = as_index_set(I), as_index_set(J)
    if len(I) != len(J):
        return len(I) < len(J)
    return I < J


def is_admissible(I: IndexSet, n: int) -> bool:
    return len(I) <= n - 3 and all(1 <= i <= n for i in I)


@lru_cache(maxsize=None)
def admissible_sets(n: int) -> tuple[IndexSet, ...]:
    """All exceptional index sets for ambient n, ascending in subset order."""
    from itertools import combinations

    out = []
    for size in range(0, max(n - 3, -1) + 1):
        for I in combinations(range(1, n + 1), size):
            out.append(I)
    return tuple(out)


def star_compatible(I, J, n: int) -> bool:
    si, sj = set(I), set(J)
    if si <= sj or sj <= si:
        return True
    return si | sj == set(range(1, n + 1))


class StarError(ValueError):
    """A pair of index sets violates the star condition."""


@dataclass
class Forest:
    """Forest of index sets: vertices ascending in subset order, edges to
    minimal strict supersets."""

    n: int
    vertices: tuple[IndexSet, ...]
    children: dict  # vertex -> tuple of minimal strict supersets
    roots: tuple[IndexSet, ...]

    def degree(self, I: IndexSet) -> int:
        return len(self.children[I])

    def closure(self, I: IndexSet) -> tuple[IndexSet, ...]:
        si = set(I)
        return tuple(J for J in self.vertices if si <= set(J))

    def strict_supersets(self, I: IndexSet) -> tuple[IndexSet, ...]:
        si = set(I)
        return tuple(J for J in self.vertices if si < set(J))

    def is_external(self, I: IndexSet) -> bool:
        return not self.children[I]

    def is_internal(self, I: IndexSet) -> bool:
        return bool(self.children[I])

    def intersection_all(self) -> frozenset:
        """Intersection of all vertex sets ({1..n} for the empty forest)."""
        acc = set(range(1, self.n + 1))
        for v in self.vertices:
            acc &= set(v)
        return frozenset(acc)

    def root_without_n(self) -> IndexSet | None:
        hits = [r for r in self.roots if self.n not in r]
        if not hits:
            return None
        if len(hits) > 1:
            raise StarError("several roots avoid n; star condition violated")
        return hits[0]


def build_forest(indices, n: int) -> Forest:
    """Forest of a collection of distinct, pairwise star-compatible sets."""
    verts = [as_index_set(I) for I in indices]
    if len(set(verts)) != len(verts):
        raise ValueError("repeated index sets")
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            if not star_compatible(verts[i], verts[j], n):
                raise StarError(f"{verts[i]} and {verts[j]} violate the star condition")
    verts.sort(key=subset_key)
    children = {}
    roots = []
    for I in verts:
        si = set(I)
        supers = [J for J in verts if si < set(J)]
        minimal = tuple(
            J for J in supers if not any(set(K) < set(J) for K in supers if K != J)
        )
        children[I] = minimal
        if not any(set(J) < si for J in verts):
            roots.append(I)
    return Forest(n=n, vertices=tuple(verts), children=children, roots=tuple(roots))


def s_set(e_sets, n: int) -> tuple[int, ...]:
    """Variable set of the curve factor attached to an exceptional part.

    The empty collection (no exceptional factors) yields all of {1..n-1}.
    """
    sets = [as_index_set(I) for I in e_sets]
    if not sets:
        return tuple(range(1, n))
    forest = build_forest(sets, n)
    inter = forest.intersection_all()
    j_of = {
        r: min(set(range(1, n + 1)) - set(r)) for r in forest.roots if n in r
    }
    if n in inter:
        out = set(j_of.values()) | (inter - {n})
    else:
        forest.root_without_n()  # raises when star is violated
        out = set(j_of.values()) | inter
    return tuple(sorted(out))
