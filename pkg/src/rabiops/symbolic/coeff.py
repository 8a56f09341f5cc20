"""Exact scalar coefficients: Laurent polynomials in omega, omega0, g over Q(i)."""
from __future__ import annotations

from fractions import Fraction

SYMBOLS = ("omega", "omega0", "g")

Exponents = tuple[int, int, int]
Gauss = tuple[Fraction, Fraction]

_ZERO_EXP: Exponents = (0, 0, 0)


def _gmul(x: Gauss, y: Gauss) -> Gauss:
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


class Coeff:
    """Immutable Laurent polynomial with Gaussian-rational coefficients.

    Stored as a mapping from exponent vectors ``(e_omega, e_omega0, e_g)`` to
    ``(re, im)`` pairs of :class:`~fractions.Fraction`; zero entries are never
    stored, so structural equality is mathematical equality.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict | None = None):
        clean = {}
        for exp, (re, im) in (terms or {}).items():
            re, im = Fraction(re), Fraction(im)
            if re or im:
                clean[tuple(exp)] = (re, im)
        self._terms = dict(sorted(clean.items()))
        self._hash = None

    # constructors
    @classmethod
    def const(cls, re=0, im=0) -> "Coeff":
        return cls({_ZERO_EXP: (Fraction(re), Fraction(im))})

    @classmethod
    def symbol(cls, name: str, power: int = 1) -> "Coeff":
        exp = [0, 0, 0]
        exp[SYMBOLS.index(name)] = power
        return cls({tuple(exp): (Fraction(1), Fraction(0))})

    @classmethod
    def coerce(cls, value) -> "Coeff":
        if isinstance(value, Coeff):
            return value
        if isinstance(value, complex):
            raise TypeError("inexact complex scalars are not allowed in exact coefficients")
        return cls.const(Fraction(value))

    # queries
    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(exp == _ZERO_EXP for exp in self._terms)

    def constant(self) -> Gauss:
        return self._terms.get(_ZERO_EXP, (Fraction(0), Fraction(0)))

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    # arithmetic
    def __add__(self, other) -> "Coeff":
        other = Coeff.coerce(other)
        out = dict(self._terms)
        for exp, (re, im) in other._terms.items():
            r0, i0 = out.get(exp, (Fraction(0), Fraction(0)))
            out[exp] = (r0 + re, i0 + im)
        return Coeff(out)

    __radd__ = __add__

    def __neg__(self) -> "Coeff":
        return Coeff({e: (-re, -im) for e, (re, im) in self._terms.items()})

    def __sub__(self, other) -> "Coeff":
        return self + (-Coeff.coerce(other))

    def __rsub__(self, other) -> "Coeff":
        return Coeff.coerce(other) - self

    def __mul__(self, other) -> "Coeff":
        other = Coeff.coerce(other)
        out: dict = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exp = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                re, im = _gmul(c1, c2)
                r0, i0 = out.get(exp, (Fraction(0), Fraction(0)))
                out[exp] = (r0 + re, i0 + im)
        return Coeff(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Coeff":
        if k < 0:
            return self.inverse() ** (-k)
        out = Coeff.const(1)
        for _ in range(k):
            out = out * self
        return out

    def inverse(self) -> "Coeff":
        """Inverse of a monomial; other Laurent polynomials are not units."""
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self.format()} is not invertible in the Laurent ring")
        (exp, (re, im)), = self._terms.items()
        norm = re * re + im * im
        return Coeff({tuple(-e for e in exp): (re / norm, -im / norm)})

    def conj(self) -> "Coeff":
        return Coeff({e: (re, -im) for e, (re, im) in self._terms.items()})

    def evaluate(self, omega: float, omega0: float, g: float) -> complex:
        total = 0j
        for (e1, e2, e3), (re, im) in self._terms.items():
            total += complex(float(re), float(im)) * omega**e1 * omega0**e2 * g**e3
        return total

    def __eq__(self, other) -> bool:
        try:
            other = Coeff.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Coeff({self.format()!r})"

    # printing, in the expression grammar's own syntax
    def format(self) -> str:
        if not self._terms:
            return "0"
        parts = [_format_monomial(exp, c) for exp, c in reversed(list(self._terms.items()))]
        return _join(parts)


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _format_number(re: Fraction, im: Fraction) -> tuple[str, bool]:
    """Return (text, is_one) for a Gaussian rational; text carries its own sign."""
    if im == 0:
        return _format_rational(re), re == 1
    if re == 0:
        if im == 1:
            return "i", False
        if im == -1:
            return "-i", False
        return f"{_format_rational(im)}*i", False
    sign = "-" if im < 0 else "+"
    mag = abs(im)
    imag = "i" if mag == 1 else f"{_format_rational(mag)}*i"
    return f"({_format_rational(re)} {sign} {imag})", False


def _format_monomial(exp: Exponents, c: Gauss) -> str:
    syms = []
    for name, e in zip(SYMBOLS, exp):
        if e == 1:
            syms.append(name)
        elif e != 0:
            syms.append(f"{name}^{e}")
    num, is_one = _format_number(*c)
    if not syms:
        return num
    if is_one:
        return "*".join(syms)
    if num == "-1":
        return "-" + "*".join(syms)
    return "*".join([num] + syms)


def _join(parts: list[str]) -> str:
    out = parts[0]
    for p in parts[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out
