"""
Exact algebra for classes in the Grothendieck ring: integer-coefficient
Laurent polynomials in the Tate symbol L, and exact rationals.

Only the subring generated by L and L^-1 is represented. Coefficients are
Python ints (unbounded); exponents are plain ints.
"""

import functools
import numbers

import sympy

from wild_mckay.errors import DomainError, ParseError

SYMBOL = sympy.Symbol('L')


@functools.total_ordering
class _NegInfinity(object):
    """
    Degree of the zero polynomial. Orders below every integer and absorbs
    addition, so degree(a * b) = degree(a) + degree(b) holds with zero too.
    """
    __slots__ = ()

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return other is not self

    def __hash__(self):
        return hash('-inf')

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __reduce__(self):
        # Unpickles to the module singleton, so worker results keep identity.
        return 'NEG_INFINITY'

    def __repr__(self):
        return 'NEG_INFINITY'

    def __str__(self):
        return '-inf'

NEG_INFINITY = _NegInfinity()


def degree_to_json(value):
    """
    :return: the integer, or the string '-inf' for NEG_INFINITY
    """
    return str(value) if value is NEG_INFINITY else value


def degree_from_json(value):
    if value == '-inf':
        return NEG_INFINITY
    return int(value)


class LaurentPoly(object):
    """
    An immutable Laurent polynomial in L with integer coefficients.

    The coefficient map never stores zeros, so two polynomials are equal
    exactly when their maps are equal.
    """
    __slots__ = ('__coeffs', '__hash')

    def __init__(self, coefficients=None):
        """
        :param coefficients: a mapping (or iterable of pairs) exponent -> coefficient
        """
        coeffs = {}
        if coefficients:
            items = coefficients.items() if hasattr(coefficients, 'items') else coefficients
            for exponent, coefficient in items:
                if not isinstance(exponent, numbers.Integral) or not isinstance(coefficient, numbers.Integral):
                    raise DomainError("Exponents and coefficients must be integers, got {!r}: {!r}".format(exponent, coefficient))
                exponent = int(exponent)
                coefficient = int(coefficient)
                if coefficient:
                    coeffs[exponent] = coeffs.get(exponent, 0) + coefficient
                    if not coeffs[exponent]:
                        del coeffs[exponent]
        self.__coeffs = coeffs
        self.__hash = None

    @classmethod
    def monomial(cls, exponent, coefficient=1):
        return cls({exponent: coefficient})

    @classmethod
    def constant(cls, value):
        return cls({0: value})

    ########
    # PROPERTIES
    ########

    @property
    def degree(self):
        return max(self.__coeffs) if self.__coeffs else NEG_INFINITY

    @property
    def valuation(self):
        return min(self.__coeffs) if self.__coeffs else None

    @property
    def leading_coefficient(self):
        return self.__coeffs[self.degree] if self.__coeffs else 0

    def coefficient(self, exponent):
        return self.__coeffs.get(exponent, 0)

    def terms(self):
        """
        :return: (exponent, coefficient) pairs by descending exponent
        """
        return sorted(self.__coeffs.items(), reverse=True)

    def is_zero(self):
        return not self.__coeffs

    ########
    # ARITHMETIC
    ########

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        merged = dict(self.__coeffs)
        for exponent, coefficient in other.__coeffs.items():
            merged[exponent] = merged.get(exponent, 0) + coefficient
        return LaurentPoly(merged)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.__coeffs.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        product = {}
        for e1, c1 in self.__coeffs.items():
            for e2, c2 in other.__coeffs.items():
                product[e1 + e2] = product.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(product)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("Only non-negative integer powers are supported, got {!r}".format(k))
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """
        :return: this polynomial multiplied by L^k
        """
        return LaurentPoly({e + k: c for e, c in self.__coeffs.items()})

    ########
    # COMPARISON / DISPLAY
    ########

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.__coeffs == other.__coeffs

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        if self.__hash is None:
            self.__hash = hash(frozenset(self.__coeffs.items()))
        return self.__hash

    def __repr__(self):
        return "LaurentPoly({})".format(dict(self.terms()))

    def __str__(self):
        if not self.__coeffs:
            return '0'
        pieces = []
        for exponent, coefficient in self.terms():
            magnitude = abs(coefficient)
            if exponent == 0:
                body = str(magnitude)
            else:
                power = 'L' if exponent == 1 else 'L^{}'.format(exponent)
                body = power if magnitude == 1 else '{}*{}'.format(magnitude, power)
            if not pieces:
                pieces.append(body if coefficient > 0 else '-' + body)
            else:
                pieces.append(('+ ' if coefficient > 0 else '- ') + body)
        return ' '.join(pieces)


def _coerce(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, int):
        return LaurentPoly.constant(value)
    return NotImplemented


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)
L = LaurentPoly.monomial(1)
L_MINUS_ONE = L - ONE


#-------------------------------------------------------------------------------
# Functional interface
#-------------------------------------------------------------------------------

def poly_add(a, b):
    return a + b


def poly_sub(a, b):
    return a - b


def poly_neg(a):
    return -a


def poly_mul(a, b):
    return a * b


def poly_pow(a, k):
    return a ** k


def poly_shift(a, k):
    return a.shift(k)


def poly_degree(a):
    """
    :return: the largest exponent with a nonzero coefficient, or NEG_INFINITY
             for the zero polynomial
    """
    return a.degree


def poly_valuation(a):
    return a.valuation


def leading_coefficient(a):
    return a.leading_coefficient


def poly_sum(polys):
    """
    Adds up an iterable of polynomials with a single coefficient map instead
    of building an intermediate polynomial per term.
    """
    total = {}
    for poly in polys:
        for exponent, coefficient in poly.terms():
            total[exponent] = total.get(exponent, 0) + coefficient
    return LaurentPoly(total)


def as_expr(a):
    """
    :return: the polynomial as a sympy expression in the symbol L
    """
    return sympy.Add(*[sympy.Integer(c) * SYMBOL ** e for e, c in a.terms()])


def from_expr(expr):
    """
    Reads a sympy expression in L (a Laurent polynomial with integer
    coefficients) back into a LaurentPoly.
    """
    expr = sympy.expand(expr)
    coeffs = {}
    for term in sympy.Add.make_args(expr):
        coefficient, power = term.as_coeff_exponent(SYMBOL)
        if not coefficient.is_integer or not power.is_integer:
            raise ParseError("Not an integral Laurent polynomial in L: {}".format(expr))
        coeffs[int(power)] = coeffs.get(int(power), 0) + int(coefficient)
    return LaurentPoly(coeffs)


def poly_to_json(a):
    """
    :return: [[exponent, "coefficient"], ...] by descending exponent
    """
    return [[exponent, str(coefficient)] for exponent, coefficient in a.terms()]


def poly_from_json(data):
    try:
        return LaurentPoly((int(exponent), int(coefficient)) for exponent, coefficient in data)
    except (TypeError, ValueError):
        raise ParseError("Malformed polynomial JSON: {!r}".format(data))


#-------------------------------------------------------------------------------
# Rationals
#-------------------------------------------------------------------------------

def rational(numerator, denominator=1):
    """
    :return: the exact rational numerator/denominator in lowest terms
    """
    if denominator == 0:
        raise ZeroDivisionError("Rational with zero denominator")
    return sympy.Rational(numerator, denominator)


def sign(r):
    """
    :return: -1, 0 or 1
    """
    return int(sympy.sign(r))


def format_rational(r):
    """
    :return: the "num/den" string of r (integers get denominator 1)
    """
    r = sympy.Rational(r)
    return "{}/{}".format(r.p, r.q)


def parse_rational(text):
    try:
        numerator, _, denominator = str(text).strip().partition('/')
        return rational(int(numerator), int(denominator) if denominator else 1)
    except (ValueError, ZeroDivisionError):
        raise ParseError("Malformed rational: {!r}".format(text))
