"""Exact Gaussian rationals and small helpers shared by every module.

Exact states hold ``int``, ``Fraction`` or ``GaussianRational`` coefficients.
The float backend uses plain ``complex`` and is compared with a relative
tolerance; it never enters the exact identity checks.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

REL_TOL = 1e-9


class GaussianRational:
    """a + b·i with a, b arbitrary-precision rationals."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re, re.im + Fraction(im)
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Rational)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, GaussianRational):
            return GaussianRational(self.re * other, self.im * other)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational((self.re * o.re + self.im * o.im) / d, (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return GaussianRational(1) / (self ** (-k))
        result = GaussianRational(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, complex):
                return complex(self) == other
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else '-'}{abs(self.im)}i)"


I = GaussianRational(0, 1)


def is_exact(x) -> bool:
    return isinstance(x, (int, Rational, GaussianRational)) and not isinstance(x, bool)


def gauss(x) -> GaussianRational:
    """Coerce an exact value (or a "p/q" string) to GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, str):
        return GaussianRational(Fraction(x))
    if isinstance(x, (int, Rational)):
        return GaussianRational(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def conj(x):
    if isinstance(x, (GaussianRational, complex)):
        return x.conjugate()
    return x


def re_im(x) -> tuple:
    """Real and imaginary parts, as Fractions for exact input and floats otherwise."""
    if isinstance(x, GaussianRational):
        return x.re, x.im
    if isinstance(x, complex):
        return x.real, x.imag
    if isinstance(x, float):
        return x, 0.0
    return Fraction(x), Fraction(0)


def simplify(x):
    """Drop a vanishing imaginary part so results compare cleanly with rationals."""
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    return x


def close(a, b, rel: float = REL_TOL) -> bool:
    """Equality for the float backend; exact equality when both sides are exact."""
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = complex(a), complex(b)
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) <= rel * scale


def rational_str(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s: str) -> Fraction:
    """Parse "p/q" (or a bare integer); raises ValueError on anything else."""
    if not isinstance(s, str):
        raise ValueError(f"rational must be a string, got {s!r}")
    text = s.strip()
    num, sep, den = text.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {s!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {s!r}")
    return Fraction(p, q)
