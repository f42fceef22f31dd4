"""Exact rational arithmetic backend.

All probability and linear-constraint arithmetic in this package is exact;
no floats ever enter the semantics.  gmpy2.mpq is used when available
(roughly 4x faster), with fractions.Fraction as the portable fallback.
Both expose .numerator/.denominator and interoperate with ints, which is
all the rest of the code relies on.
"""

from fractions import Fraction

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover
    Q = Fraction

ZERO = Q(0)
ONE = Q(1)


def parse_rational(text):
    """Parse 'num/den' or a bare integer string into an exact rational."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Q(int(num), int(den))
    return Q(int(text))


def format_rational(value):
    """Serialize as 'num/den' (denominator kept even when 1)."""
    return "%d/%d" % (value.numerator, value.denominator)
