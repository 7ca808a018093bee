"""Exact integer Laurent polynomials in the bracket variable A.

Exponents may be any integers; coefficients are arbitrary-precision ints.
The zero polynomial stores no terms, and no zero coefficient is ever kept.
"""

from __future__ import annotations

from fractions import Fraction
import re


class LaurentPolynomial:
    """Laurent polynomial with integer coefficients, immutable.

    Internally a mapping exponent -> coefficient with all coefficients
    nonzero.  Supports ring arithmetic, exact division, and the canonical
    text form used by the diagram file formats (terms ascending by
    exponent, e.g. ``-A^-6 - A^-4 + A^-10``).
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=None):
        data = {}
        if terms:
            for exp, coeff in dict(terms).items():
                if coeff:
                    data[int(exp)] = int(coeff)
        self._terms = data

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def variable(cls):
        """The polynomial A."""
        return cls({1: 1})

    # -- basic queries ---------------------------------------------------

    def items(self):
        """Terms as (exponent, coefficient) pairs, ascending by exponent."""
        return sorted(self._terms.items())

    def coefficient(self, exp):
        return self._terms.get(exp, 0)

    def is_zero(self):
        return not self._terms

    def min_exponent(self):
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self._terms)

    def max_exponent(self):
        if not self._terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self._terms)

    def exponents(self):
        return sorted(self._terms)

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        terms = dict(self._terms)
        for e, c in other._terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPolynomial(terms)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if len(self._terms) != 1:
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self._terms.items()
            if c not in (1, -1):
                raise ValueError("negative power needs a unit coefficient")
            return LaurentPolynomial({e * n: 1 if (c == 1 or n % 2 == 0) else -1})
        out = LaurentPolynomial.one()
        base = self
        k = n
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def shifted(self, delta):
        """Multiply by A^delta."""
        return LaurentPolynomial({e + delta: c for e, c in self._terms.items()})

    def divide_exact(self, other):
        """Exact division; raises ValueError when the division has a remainder."""
        other = _coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = dict(self._terms)
        out = {}
        div_top = other.max_exponent()
        div_lead = other._terms[div_top]
        while rem:
            top = max(rem)
            lead = rem[top]
            if lead % div_lead:
                raise ValueError("not exactly divisible")
            q_exp = top - div_top
            q_coeff = lead // div_lead
            out[q_exp] = out.get(q_exp, 0) + q_coeff
            for e, c in other._terms.items():
                e2 = e + q_exp
                v = rem.get(e2, 0) - c * q_coeff
                if v:
                    rem[e2] = v
                else:
                    rem.pop(e2, None)
        return LaurentPolynomial(out)

    def __eq__(self, other):
        if isinstance(other, (int, LaurentPolynomial)):
            return self._terms == _coerce(other)._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __call__(self, value):
        """Evaluate at a numeric value (exact for Fraction/int inputs)."""
        total = 0
        for e, c in self._terms.items():
            if e >= 0:
                total += c * value ** e
            else:
                total += c * Fraction(1, 1) * Fraction(value) ** e
        return total

    # -- text form ---------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "A^%d" % e if e != 1 else "A"
                body = var if mag == 1 else "%d%s" % (mag, var)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def __repr__(self):
        return "LaurentPolynomial(%r)" % (dict(self.items()),)

    @classmethod
    def parse(cls, text):
        """Inverse of str() for canonical and near-canonical forms."""
        s = text.strip().replace(" ", "")
        if s in ("", "0"):
            return cls.zero()
        terms = {}
        token = re.compile(r"([+-]?)(\d*)(?:(A)(?:\^(-?\d+))?)?")
        pos = 0
        while pos < len(s):
            m = token.match(s, pos)
            if not m or m.end() == pos:
                raise ValueError("bad polynomial syntax at %r" % s[pos:])
            sign, digits, var, exp = m.groups()
            if not digits and not var:
                raise ValueError("bad polynomial syntax at %r" % s[pos:])
            coeff = int(digits) if digits else 1
            if sign == "-":
                coeff = -coeff
            e = 0
            if var:
                e = int(exp) if exp is not None else 1
            terms[e] = terms.get(e, 0) + coeff
            pos = m.end()
        return cls(terms)

    def jones_form(self):
        """Terms in the Jones variable t under A = t^(-1/4).

        Returns (t_exponent, coefficient) pairs with Fraction exponents,
        ascending; exponents are quarter-integers.
        """
        out = [(Fraction(-e, 4), c) for e, c in self._terms.items()]
        return sorted(out)

    def jones_str(self):
        pairs = self.jones_form()
        if not pairs:
            return "0"
        parts = []
        for e, c in pairs:
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                if e.denominator == 1:
                    var = "t" if e == 1 else "t^%d" % e
                else:
                    var = "t^(%s)" % e
                body = var if mag == 1 else "%d%s" % (mag, var)
            if not parts:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)


def _coerce(value):
    if isinstance(value, LaurentPolynomial):
        return value
    if isinstance(value, int):
        return LaurentPolynomial({0: value})
    raise TypeError("cannot coerce %r to LaurentPolynomial" % (value,))


A = LaurentPolynomial.variable()
LOOP_VALUE = LaurentPolynomial({2: -1, -2: -1})  # delta = -A^2 - A^-2
