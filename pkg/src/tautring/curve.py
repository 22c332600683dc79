"""The tautological ring of the n-th power of a pointed elliptic curve.

Degree-one generators are the point classes a_i and the translated
diagonals b_{j,k} = d_{j,k} - a_j - a_k.  The relations

    a_i^2 = 0,   a_i b_{i,j} = 0,   b_{i,j}^2 = -2 a_i a_j,
    b_{i,j} b_{i,k} = a_i b_{j,k},
    b_{i,j}b_{k,l} + b_{i,k}b_{j,l} + b_{i,l}b_{j,k} = 0

span all relations.  The first four are oriented as rewrite rules; the
three-term relation is never rewritten (standard monomials span but are
not a basis) and enters only through rank computations.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .elements import Element, Mono, make_mono, mono_degree
from .exact import QQ
from .gens import Gen, a_gen, b_gen, gen_key
from .linalg import RationalMatrix


class ReductionError(RuntimeError):
    """The rewriting engine failed to reach a fixpoint within its cap."""


_MAX_PASSES = 10_000


def expand_diagonals(e: Element) -> Element:
    """Substitute d_{j,k} -> b_{j,k} + a_j + a_k everywhere."""
    out = Element(e.n)
    for mono, c in e.items():
        pieces = Element.scalar(e.n, c)
        plain = []
        for g, exp in mono:
            if g[0] == "d":
                _, j, k = g
                repl = Element.from_terms(
                    e.n,
                    [
                        (make_mono([(b_gen(j, k), 1)]), QQ(1)),
                        (make_mono([(a_gen(j), 1)]), QQ(1)),
                        (make_mono([(a_gen(k), 1)]), QQ(1)),
                    ],
                )
                for _ in range(exp):
                    pieces = pieces * repl
            else:
                plain.append((g, exp))
        rest = Element(e.n, {make_mono(plain): QQ(1)})
        out = out + pieces * rest
    return out


def ab_rewrite(ab: dict, getzler: bool = True):
    """One rewrite step on an a/b exponent dict.

    Returns None when irreducible, [] when the monomial dies, or a list of
    (coefficient, new exponent dict) replacements.
    """
    a_idx = sorted(g[1] for g in ab if g[0] == "a")
    b_gens = sorted((g for g in ab if g[0] == "b"), key=gen_key)
    for i in a_idx:
        if ab[("a", i)] >= 2:
            return []
    a_set = set(a_idx)
    for g in b_gens:
        if g[1] in a_set or g[2] in a_set:
            return []
    for g in b_gens:
        if ab[g] >= 2:
            out = dict(ab)
            if out[g] == 2:
                del out[g]
            else:
                out[g] -= 2
            for i in (g[1], g[2]):
                out[a_gen(i)] = out.get(a_gen(i), 0) + 1
            return [(QQ(-2), out)]
    if getzler:
        for gi in range(len(b_gens)):
            for gj in range(gi + 1, len(b_gens)):
                g1, g2 = b_gens[gi], b_gens[gj]
                shared = {g1[1], g1[2]} & {g2[1], g2[2]}
                if shared:
                    i = min(shared)
                    j, k = sorted(({g1[1], g1[2]} | {g2[1], g2[2]}) - {i})
                    out = dict(ab)
                    for g in (g1, g2):
                        if out[g] == 1:
                            del out[g]
                        else:
                            out[g] -= 1
                    out[a_gen(i)] = out.get(a_gen(i), 0) + 1
                    out[b_gen(j, k)] = out.get(b_gen(j, k), 0) + 1
                    return [(QQ(1), out)]
    return None


def _check_curve_gens(e: Element, n: int) -> None:
    for mono, _ in e.items():
        for g, _exp in mono:
            if g[0] not in ("a", "b", "d"):
                raise ValueError(f"non-curve generator {g} in element")
            idx = g[1:] if g[0] == "a" else g[1:3]
            if any(not 1 <= i <= n for i in idx):
                raise ValueError(f"generator {g} out of range for C^{n}")


def curve_normal_form(e: Element, n: int, getzler: bool = True) -> Element:
    """Rewrite to a combination of standard monomials (fixpoint of the
    oriented rules; the three-term relation is left alone)."""
    _check_curve_gens(e, n)
    cur = expand_diagonals(e)
    for _ in range(_MAX_PASSES):
        nxt = Element(e.n)
        changed = False
        for mono, c in sorted(cur.terms.items()):
            ab = dict(mono)
            repl = ab_rewrite(ab, getzler=getzler)
            if repl is None:
                nxt._add(mono, c)
            else:
                changed = True
                for cc, newab in repl:
                    nxt._add(make_mono(newab.items()), c * cc)
        cur = nxt
        if not changed:
            return cur
    raise ReductionError("curve normal form did not stabilize")


@dataclass(frozen=True)
class CurveMonomial:
    """Standard monomial a(v) b(v): disjoint index set and perfect matching."""

    a_set: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def degree(self) -> int:
        return len(self.a_set) + len(self.pairs)

    def support(self) -> frozenset:
        return frozenset(self.a_set) | frozenset(i for p in self.pairs for i in p)

    def to_mono(self) -> Mono:
        return make_mono(
            [(a_gen(i), 1) for i in self.a_set] + [(b_gen(j, k), 1) for j, k in self.pairs]
        )

    def to_element(self, n: int) -> Element:
        return Element(n, {self.to_mono(): QQ(1)})

    def sort_key(self):
        return tuple((gen_key(g), e) for g, e in self.to_mono())


def monomial_to_curve(mono: Mono) -> CurveMonomial:
    a_set = []
    pairs = []
    for g, e in mono:
        if e != 1:
            raise ValueError(f"not multilinear: {mono}")
        if g[0] == "a":
            a_set.append(g[1])
        elif g[0] == "b":
            pairs.append((g[1], g[2]))
        else:
            raise ValueError(f"non a/b generator in {mono}")
    cm = CurveMonomial(tuple(sorted(a_set)), tuple(sorted(pairs)))
    if not is_curve_standard(cm):
        raise ValueError(f"monomial {mono} is not standard")
    return cm


def is_curve_standard(v: CurveMonomial) -> bool:
    seen = set(v.a_set)
    if len(seen) != len(v.a_set):
        return False
    for j, k in v.pairs:
        if j >= k or j in seen or k in seen:
            return False
        seen.update((j, k))
    return True


def perfect_matchings(items: tuple[int, ...]):
    """All perfect matchings of ``items`` in first-element recursion order."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        head = (first, other)
        for tail in perfect_matchings(rest[:i] + rest[i + 1 :]):
            yield (head,) + tail


def enumerate_standard_over(indices: tuple[int, ...], d: int) -> list[CurveMonomial]:
    """Standard monomials of degree d in the variables ``indices``."""
    indices = tuple(sorted(indices))
    out: list[CurveMonomial] = []
    if d < 0 or d > len(indices):
        return out
    for npairs in range(0, d + 1):
        na = d - npairs
        if na + 2 * npairs > len(indices):
            continue
        for b_support in combinations(indices, 2 * npairs):
            remaining = tuple(i for i in indices if i not in b_support)
            for a_set in combinations(remaining, na):
                for pairs in perfect_matchings(b_support):
                    out.append(CurveMonomial(tuple(a_set), tuple(sorted(pairs))))
    out.sort(key=CurveMonomial.sort_key)
    return out


def enumerate_standard_curve(n: int, d: int) -> list[CurveMonomial]:
    return enumerate_standard_over(tuple(range(1, n + 1)), d)


def curve_dual(v: CurveMonomial, n: int) -> CurveMonomial:
    """Complementary-degree partner: all a_i off the support of v, same b(v)."""
    used = set(v.a_set) | {i for p in v.pairs for i in p}
    a_star = tuple(i for i in range(1, n + 1) if i not in used)
    return CurveMonomial(a_star, v.pairs)


def curve_socle_eval(e: Element, n: int):
    """Evaluate a degree-n element against the point class a_1...a_n -> 1."""
    if not e.is_homogeneous(n):
        raise ValueError(f"element is not homogeneous of degree {n}")
    nf = curve_normal_form(e, n)
    if nf.is_zero():
        return QQ(0)
    point = make_mono([(a_gen(i), 1) for i in range(1, n + 1)])
    extra = [m for m in nf.terms if m != point]
    if extra:
        raise ValueError(f"unexpected monomials of top degree: {extra[:3]}")
    return nf.terms[point]


def curve_pairing_matrix(n: int, d: int) -> RationalMatrix:
    """Gram matrix of the degree pairing on standard monomials."""
    rows = enumerate_standard_curve(n, d)
    cols = enumerate_standard_curve(n, n - d)
    m = RationalMatrix(len(rows), len(cols))
    col_elts = [w.to_element(n) for w in cols]
    for i, v in enumerate(rows):
        ve = v.to_element(n)
        for j, we in enumerate(col_elts):
            val = curve_socle_eval(ve * we, n)
            if val:
                m.rows[i][j] = val
    return m


@lru_cache(maxsize=None)
def curve_dim(n: int, d: int) -> int:
    """dim R^d(C^n), realized as the exact rank of the pairing matrix."""
    if d < 0 or d > n:
        return 0
    if n == 0:
        return 1 if d == 0 else 0
    return curve_pairing_matrix(n, d).rank()
