"""Sparse ring elements: Q-linear combinations of monomials in the generators.

A monomial is a sorted tuple of (generator, exponent) pairs with positive
exponents; every generator has degree one, so the degree of a monomial is
the sum of its exponents.  Elements are sparse dictionaries monomial ->
rational coefficient with no stored zeros, tied to an ambient n.
"""
from __future__ import annotations

from typing import Iterable, Iterator

from .exact import QQ, format_rational
from .gens import Gen, gen_key, gen_str, validate_gen

Mono = tuple  # tuple[tuple[Gen, int], ...]

ONE_MONO: Mono = ()


class AmbientMismatchError(ValueError):
    """Two elements over different ambient n were combined."""


def make_mono(pairs: Iterable[tuple[Gen, int]]) -> Mono:
    """Canonical monomial from (generator, exponent) pairs; merges repeats."""
    acc: dict[Gen, int] = {}
    for g, e in pairs:
        if e:
            acc[g] = acc.get(g, 0) + e
    return tuple(sorted(((g, e) for g, e in acc.items() if e), key=lambda p: gen_key(p[0])))


def mono_mul(m1: Mono, m2: Mono) -> Mono:
    if not m1:
        return m2
    if not m2:
        return m1
    acc = dict(m1)
    for g, e in m2:
        acc[g] = acc.get(g, 0) + e
    return tuple(sorted(acc.items(), key=lambda p: gen_key(p[0])))


def mono_degree(m: Mono) -> int:
    return sum(e for _, e in m)


def mono_str(m: Mono) -> str:
    if not m:
        return "1"
    parts = []
    for g, e in m:
        s = gen_str(g)
        parts.append(s if e == 1 else f"{s}^{e}")
    return "*".join(parts)


def mono_sort_key(m: Mono):
    return (mono_degree(m), tuple((gen_key(g), e) for g, e in m))


class Element:
    """Sparse exact-rational linear combination of monomials, ambient-n tagged."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict[Mono, object] | None = None):
        self.n = n
        self.terms: dict[Mono, object] = {}
        if terms:
            for m, c in terms.items():
                c = QQ(c)
                if c:
                    self.terms[m] = c

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "Element":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "Element":
        return cls(n, {ONE_MONO: QQ(1)})

    @classmethod
    def scalar(cls, n: int, c) -> "Element":
        return cls(n, {ONE_MONO: QQ(c)})

    @classmethod
    def from_gen(cls, n: int, g: Gen, coeff=1) -> "Element":
        validate_gen(g, n)
        return cls(n, {make_mono([(g, 1)]): QQ(coeff)})

    @classmethod
    def from_terms(cls, n: int, items: Iterable[tuple[Mono, object]]) -> "Element":
        e = cls(n)
        for m, c in items:
            e._add(m, c)
        return e

    # -- basic structure ----------------------------------------------

    def copy(self) -> "Element":
        out = Element(self.n)
        out.terms = dict(self.terms)
        return out

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def items(self) -> Iterator[tuple[Mono, object]]:
        return iter(self.terms.items())

    def coefficient(self, m: Mono):
        return self.terms.get(m, QQ(0))

    def degree(self) -> int | None:
        """Common degree of all monomials, or None if inhomogeneous/zero."""
        degs = {mono_degree(m) for m in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self, d: int | None = None) -> bool:
        if not self.terms:
            return True
        deg = self.degree()
        if deg is None:
            return False
        return d is None or deg == d

    def generator_kinds(self) -> set[str]:
        return {g[0] for m in self.terms for g, _ in m}

    # -- arithmetic ----------------------------------------------------

    def _add(self, m: Mono, c) -> None:
        c = QQ(c)
        if not c:
            return
        cur = self.terms.get(m)
        if cur is None:
            self.terms[m] = c
        else:
            s = cur + c
            if s:
                self.terms[m] = s
            else:
                del self.terms[m]

    def _check_ambient(self, other: "Element") -> None:
        if self.n != other.n:
            raise AmbientMismatchError(
                f"ambient mismatch: n={self.n} vs n={other.n}"
            )

    def __add__(self, other: "Element") -> "Element":
        self._check_ambient(other)
        out = self.copy()
        for m, c in other.terms.items():
            out._add(m, c)
        return out

    def __sub__(self, other: "Element") -> "Element":
        self._check_ambient(other)
        out = self.copy()
        for m, c in other.terms.items():
            out._add(m, -c)
        return out

    def __neg__(self) -> "Element":
        return Element(self.n, {m: -c for m, c in self.terms.items()})

    def scale(self, c) -> "Element":
        c = QQ(c)
        if not c:
            return Element(self.n)
        return Element(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_ambient(other)
            out = Element(self.n)
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    out._add(mono_mul(m1, m2), c1 * c2)
            return out
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            raise ValueError("negative exponent")
        out = Element.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    # -- comparison / display -------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=mono_sort_key):
            c = self.terms[m]
            cs = format_rational(c if c > 0 else -c)
            if m == ONE_MONO:
                body = cs
            elif cs == "1":
                body = mono_str(m)
            else:
                body = f"{cs}*{mono_str(m)}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Element(n={self.n}, {self})"


def multiply(x: Element, y: Element) -> Element:
    """Free commutative product; ring-specific reduction lives elsewhere."""
    return x * y
