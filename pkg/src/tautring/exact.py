"""Exact rational arithmetic: a single QQ constructor used everywhere.

All coefficients in this package are arbitrary-precision rationals.  gmpy2
is used when available (noticeably faster on big eliminations); the stdlib
Fraction is a drop-in fallback.  No floating point enters any computation.
"""
from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as QQ  # type: ignore[import-untyped]

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    QQ = Fraction
    HAVE_GMPY2 = False

ZERO = QQ(0)
ONE = QQ(1)


def format_rational(x) -> str:
    """Render a rational as ``p`` or ``p/q`` (canonical, no spaces)."""
    n, d = x.numerator, x.denominator
    return str(n) if d == 1 else f"{n}/{d}"
