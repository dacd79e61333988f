"""Truncated formal power series with exact rational coefficients.

A TruncatedSeries stores finitely many terms c_e * v^e with Fraction
coefficients together with a truncation order t: the terms with e < t are
exactly the terms of the represented series below t, and nothing is known
from t on.  Arithmetic propagates the truncation honestly -- a sum is known
up to the smaller of the operand orders, a product up to

    min(t_f + ord(g), t_g + ord(f)),

and a quotient up to min(t_f, t_g) - ord(g) -- so a computed term is always
a true term of the exact result.  Constants are exact; they carry the
sentinel order EXACT, which behaves as "known to every order".

SeriesTuple bundles d components, one per branch of a curve, and is the
element type of the branch-ring algebra computations.
"""

import re
from fractions import Fraction

from .errors import DomainError, InputError, TruncationError

# Truncation order of exactly known series (constants).  Large enough that
# it never constrains a computation; small enough that sums of a few of
# them stay exact integers.
EXACT = 10 ** 9


class TruncatedSeries:
    """Finitely many exact terms of a power series, known below `truncation`."""

    __slots__ = ("coefficients", "truncation")

    def __init__(self, coefficients, truncation):
        truncation = int(truncation)
        if truncation <= 0:
            raise TruncationError("truncation order must be positive, got %d" % truncation)
        terms = {}
        for exponent, coefficient in dict(coefficients).items():
            exponent = int(exponent)
            if exponent < 0:
                raise DomainError("negative exponent %d in a power series" % exponent)
            coefficient = Fraction(coefficient)
            # terms at or beyond the truncation carry no information
            if coefficient != 0 and exponent < truncation:
                terms[exponent] = coefficient
        self.coefficients = terms
        self.truncation = truncation

    @classmethod
    def constant(cls, value):
        return cls({0: Fraction(value)}, EXACT)

    @classmethod
    def zero(cls, truncation=EXACT):
        return cls({}, truncation)

    def is_zero(self):
        """True when no term is known; the tail beyond truncation may differ."""
        return not self.coefficients

    def order(self):
        """Exponent of the lowest known term, or None when none is known."""
        return min(self.coefficients) if self.coefficients else None

    def order_lower_bound(self):
        return min(self.coefficients) if self.coefficients else self.truncation

    def constant_term(self):
        return self.coefficients.get(0, Fraction(0))

    def __add__(self, other):
        truncation = min(self.truncation, other.truncation)
        terms = dict(self.coefficients)
        for exponent, coefficient in other.coefficients.items():
            terms[exponent] = terms.get(exponent, 0) + coefficient
        return TruncatedSeries(terms, truncation)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, value):
        value = Fraction(value)
        return TruncatedSeries(
            {e: c * value for e, c in self.coefficients.items()}, self.truncation
        )

    def __mul__(self, other):
        truncation = min(
            self.truncation + other.order_lower_bound(),
            other.truncation + self.order_lower_bound(),
        )
        truncation = min(truncation, EXACT)
        terms = {}
        for e1, c1 in self.coefficients.items():
            for e2, c2 in other.coefficients.items():
                e = e1 + e2
                if e < truncation:
                    terms[e] = terms.get(e, 0) + c1 * c2
        return TruncatedSeries(terms, truncation)

    def __truediv__(self, other):
        """Series division; the dividend's order must not fall below the divisor's."""
        v = other.order()
        if v is None:
            raise DomainError("division by a series with no known terms")
        if self.coefficients and min(self.coefficients) < v:
            raise DomainError(
                "series division needs dividend order >= divisor order (%d < %d)"
                % (min(self.coefficients), v)
            )
        truncation = min(self.truncation, other.truncation) - v
        if truncation <= 0:
            raise TruncationError(
                "truncation exhausted in series division; rerun with a larger truncation order"
            )
        divisor = {e - v: c for e, c in other.coefficients.items() if e - v < truncation}
        lead = divisor.pop(0)
        remainder = {e - v: c for e, c in self.coefficients.items() if e - v < truncation}
        quotient = {}
        for e in range(truncation):
            c = remainder.get(e)
            if not c:
                continue
            c = c / lead
            quotient[e] = c
            for de, dc in divisor.items():
                if e + de < truncation:
                    remainder[e + de] = remainder.get(e + de, 0) - c * dc
        return TruncatedSeries(quotient, truncation)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.coefficients == other.coefficients and self.truncation == other.truncation

    def __hash__(self):
        return hash((frozenset(self.coefficients.items()), self.truncation))

    def __repr__(self):
        return "TruncatedSeries(%r, truncation=%d)" % (self.coefficients, self.truncation)

    def to_string(self, variable):
        """Render as a sum of `c*v^e` terms in increasing exponent order."""
        if not self.coefficients:
            return "0"
        parts = []
        for exponent in sorted(self.coefficients):
            coefficient = self.coefficients[exponent]
            if exponent == 0:
                term = str(coefficient)
            else:
                power = variable if exponent == 1 else "%s^%d" % (variable, exponent)
                if coefficient == 1:
                    term = power
                elif coefficient == -1:
                    term = "-" + power
                else:
                    term = "%s*%s" % (coefficient, power)
            if parts and not term.startswith("-"):
                parts.append("+")
            parts.append(term)
        return "".join(parts)


class SeriesTuple:
    """One truncated series per branch; arithmetic is componentwise."""

    __slots__ = ("components",)

    def __init__(self, components):
        components = tuple(components)
        if not components:
            raise DomainError("a series tuple needs at least one component")
        for component in components:
            if not isinstance(component, TruncatedSeries):
                raise DomainError("series tuple components must be TruncatedSeries")
        self.components = components

    @property
    def d(self):
        return len(self.components)

    @classmethod
    def constant(cls, value, d):
        return cls([TruncatedSeries.constant(value)] * d)

    def is_zero(self):
        return all(component.is_zero() for component in self.components)

    def constant_vector(self):
        return tuple(component.constant_term() for component in self.components)

    def __add__(self, other):
        self._check(other)
        return SeriesTuple([a + b for a, b in zip(self.components, other.components)])

    def __sub__(self, other):
        self._check(other)
        return SeriesTuple([a - b for a, b in zip(self.components, other.components)])

    def __mul__(self, other):
        self._check(other)
        return SeriesTuple([a * b for a, b in zip(self.components, other.components)])

    def __truediv__(self, other):
        self._check(other)
        return SeriesTuple([a / b for a, b in zip(self.components, other.components)])

    def scale(self, value):
        return SeriesTuple([component.scale(value) for component in self.components])

    def _check(self, other):
        if not isinstance(other, SeriesTuple) or other.d != self.d:
            raise DomainError("series tuples must have the same number of components")

    def __eq__(self, other):
        if not isinstance(other, SeriesTuple):
            return NotImplemented
        return self.components == other.components

    def __hash__(self):
        return hash(self.components)

    def __repr__(self):
        return "SeriesTuple(%r)" % (list(self.components),)


def valuation(element):
    """Componentwise order of a SeriesTuple.

    A component with no known term is either identically zero or zero up to
    its truncation; in both cases the order cannot be decided, so the call
    fails rather than guess.
    """
    orders = []
    for index, component in enumerate(element.components):
        order = component.order()
        if order is None:
            raise TruncationError(
                "valuation undecidable at this truncation (component %d is zero up to order %d)"
                % (index + 1, component.truncation)
            )
        orders.append(order)
    return tuple(orders)


_TOKEN = re.compile(r"(\d+/\d+|\d+|[A-Za-z_][A-Za-z_0-9]*|\^|\*|\+|-)")


def _tokenize(text):
    tokens = []
    position = 0
    while position < len(text):
        if text[position].isspace():
            position += 1
            continue
        match = _TOKEN.match(text, position)
        if match is None:
            raise InputError("unexpected character %r" % text[position], position + 1)
        tokens.append((match.group(1), position + 1))
        position = match.end()
    return tokens


def parse_series(text, variable, truncation):
    """Parse a sum of `c`, `c*v^k`, `v^k`, `v` terms into a TruncatedSeries.

    Coefficients are integers or p/q fractions; `*` may be omitted.  The
    only admissible variable is `variable`; anything else, and any negative
    exponent, is reported with its 1-based position in the text.
    """
    tokens = _tokenize(text)
    if not tokens:
        raise InputError("empty series expression", 1)
    terms = {}
    index = 0

    def peek():
        return tokens[index][0] if index < len(tokens) else None

    def take():
        nonlocal index
        token = tokens[index]
        index += 1
        return token

    def parse_term(sign):
        token, position = take()
        coefficient = Fraction(sign)
        if re.fullmatch(r"\d+/\d+|\d+", token):
            coefficient *= Fraction(token)
            if peek() == "*":
                _, star_position = take()
                if peek() is None:
                    raise InputError("expected a variable after '*'", star_position)
                token, position = take()
            elif peek() is not None and re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", peek()):
                token, position = take()
            else:
                terms[0] = terms.get(0, Fraction(0)) + coefficient
                return
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", token):
            raise InputError("expected a variable name, got %r" % token, position)
        if token != variable:
            raise InputError("unknown variable %r (expected %r)" % (token, variable), position)
        exponent = 1
        if peek() == "^":
            take()
            negative = False
            if peek() == "-":
                _, minus_position = take()
                negative = True
            if peek() is None or not re.fullmatch(r"\d+", peek()):
                raise InputError(
                    "expected an exponent after '^'",
                    tokens[index][1] if index < len(tokens) else position,
                )
            digits, digits_position = take()
            if negative:
                raise InputError("negative exponents are not allowed", minus_position)
            exponent = int(digits)
        if exponent >= truncation:
            raise InputError(
                "exponent %d is not below the truncation order %d" % (exponent, truncation),
                position,
            )
        terms[exponent] = terms.get(exponent, Fraction(0)) + coefficient

    sign = 1
    if peek() in ("+", "-"):
        token, _ = take()
        sign = -1 if token == "-" else 1
    parse_term(sign)
    while index < len(tokens):
        token, position = take()
        if token not in ("+", "-"):
            raise InputError("expected '+' or '-' between terms, got %r" % token, position)
        if index >= len(tokens):
            raise InputError("dangling %r at the end of the series" % token, position)
        parse_term(-1 if token == "-" else 1)
    return TruncatedSeries(terms, truncation)
