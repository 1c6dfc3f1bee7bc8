"""
Sparse multivariate rational functions over QQ.

Numerator and denominator are sympy PolyElements of a shared polynomial ring.
No gcd normalization is applied automatically; equality is decided by
cross-multiplication.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, NamedTuple, Sequence

import mpmath
from sympy import QQ, QQ_I
from sympy.polys.domains.gaussiandomains import GaussianElement
from sympy.polys.rings import PolyElement, PolyRing, ring

from utils.errors import PoleError


def rational_function_field(names: Sequence[str] | str):
    """
    Creates a polynomial ring over QQ and its generators as RationalFunctions.

    Args:
        names: Variable names, either a sequence or a comma separated string.

    Returns:
        (PolyRing, list of RationalFunction generators)
    """
    if not isinstance(names, str):
        names = ",".join(names)
    R, *gens = ring(names, QQ)
    return R, [RationalFunction(g, R.one) for g in gens]


def variable_names(R: PolyRing) -> list:
    return [str(s) for s in R.symbols]


def _to_qq(value):
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    if isinstance(value, int):
        return QQ(value)
    return QQ.convert(value)


def _qq_to_fraction(c) -> Fraction:
    return Fraction(int(c.numerator), int(c.denominator))


@dataclass(frozen=True, eq=False)
class RationalFunction:
    num: PolyElement
    den: PolyElement

    def __post_init__(self):
        if not self.den:
            raise PoleError("rational function with zero denominator")

    @property
    def ring(self) -> PolyRing:
        return self.num.ring

    @classmethod
    def constant(cls, R: PolyRing, value) -> RationalFunction:
        return cls(R(_to_qq(value)), R.one)

    def _coerce(self, other) -> RationalFunction:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, PolyElement):
            return RationalFunction(other, self.ring.one)
        if isinstance(other, (int, Fraction)):
            return RationalFunction.constant(self.ring, other)
        raise TypeError(f"cannot combine RationalFunction with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == other.den:
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not other.num:
            raise PoleError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            if not self.num:
                raise PoleError("negative power of zero")
            return RationalFunction(self.den ** -exponent, self.num ** -exponent)
        return RationalFunction(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.num

    def reduced(self) -> RationalFunction:
        """Cancels the common factor of numerator and denominator."""
        num, den = self.num.cancel(self.den)
        return RationalFunction(num, den)

    def substitute(self, mapping: Dict[str, object], target: PolyRing = None) -> RationalFunction:
        """
        Replaces variables by rational functions or rational numbers.

        Variables missing from the mapping are sent to the generator of the
        same name in the target ring.

        Args:
            mapping: Variable name to RationalFunction (in the target ring),
                int or Fraction.
            target: Ring of the result; defaults to this function's ring.
        """
        target = target or self.ring
        frac_field = target.to_field()
        target_gens = dict(zip(variable_names(target), target.gens))
        values = []
        for name in variable_names(self.ring):
            if name in mapping:
                value = mapping[name]
                if not isinstance(value, RationalFunction):
                    value = RationalFunction.constant(target, value)
            elif name in target_gens:
                value = RationalFunction(target_gens[name], target.one)
            else:
                raise KeyError(f"no value for variable '{name}'")
            values.append(frac_field((value.num, value.den)))
        domain = frac_field.to_domain()
        num = _evaluate_exact(self.num, domain, values)
        den = _evaluate_exact(self.den, domain, values)
        return RationalFunction(num.numer, num.denom) / RationalFunction(den.numer, den.denom)

    def as_expr(self):
        return self.num.as_expr() / self.den.as_expr()

    def __str__(self) -> str:
        if self.den == self.ring.one:
            return str(self.num.as_expr())
        return f"({self.num.as_expr()})/({self.den.as_expr()})"


def _evaluate_exact(poly: PolyElement, domain, values):
    """Evaluates every variable of poly, with coefficients lifted into domain."""
    lifted = poly.ring.clone(domain=domain)
    return poly.set_ring(lifted).evaluate(list(zip(lifted.gens, values)))


def _abs_coefficients(poly: PolyElement) -> PolyElement:
    return poly.ring.from_dict({monom: abs(coeff) for monom, coeff in poly.items()})


def _power(value, exp: int):
    result = value
    for _ in range(exp - 1):
        result = result * value
    return result


def _evaluate_terms(poly: PolyElement, values, zero, convert):
    total = zero
    for monom, coeff in poly.terms():
        term = convert(coeff)
        for value, exp in zip(values, monom):
            if exp:
                term = term * _power(value, exp)
        total = total + term
    return total


class Evaluation(NamedTuple):
    value: object
    error: float
    magnitude: object
    exact: bool


def _point_kind(values) -> str:
    if all(isinstance(v, (int, Fraction)) for v in values):
        return 'rational'
    if all(isinstance(v, (int, Fraction, GaussianElement)) for v in values):
        return 'gaussian'
    return 'float'


def _to_gaussian(value):
    if isinstance(value, GaussianElement):
        return value
    return QQ_I(_to_qq(value), QQ(0))


def _gaussian_is_zero(value) -> bool:
    return value.x == 0 and value.y == 0


def _ordered_values(f: RationalFunction, point: Dict[str, object]) -> list:
    missing = [name for name in variable_names(f.ring) if name not in point]
    if missing:
        raise KeyError(f"point has no value for {', '.join(missing)}")
    return [point[name] for name in variable_names(f.ring)]


def ratfun_eval(f: RationalFunction, point: Dict[str, object], prec: int = None) -> Evaluation:
    """
    Evaluates f at a point.

    Rational points give an exact Fraction and Gaussian-rational points an
    exact QQ_I element. Any other value (mpmath numbers, floats) switches to
    mpmath at `prec` bits; the reported error compares against a second pass
    at doubled precision.

    Raises:
        PoleError: when the denominator vanishes at the point.
    """
    values = _ordered_values(f, point)
    kind = _point_kind(values)

    if kind == 'rational':
        values = [_to_qq(v) for v in values]
        num = _evaluate_exact(f.num, QQ, values)
        den = _evaluate_exact(f.den, QQ, values)
        if not den:
            raise PoleError(f"denominator vanishes at {point}")
        magnitude = _evaluate_exact(_abs_coefficients(f.num), QQ, [abs(v) for v in values])
        return Evaluation(_qq_to_fraction(num) / _qq_to_fraction(den), 0.0, _qq_to_fraction(magnitude), True)

    if kind == 'gaussian':
        values = [_to_gaussian(v) for v in values]
        num = _evaluate_exact(f.num, QQ_I, values)
        den = _evaluate_exact(f.den, QQ_I, values)
        if _gaussian_is_zero(den):
            raise PoleError(f"denominator vanishes at {point}")
        return Evaluation(num / den, 0.0, None, True)

    from utils.settings import get_settings
    prec = prec or get_settings().float_prec

    def _float_pass(bits):
        with mpmath.workprec(bits):
            mp_values = [v if not isinstance(v, Fraction) else mpmath.mpf(v.numerator) / v.denominator
                         for v in values]
            convert = lambda c: mpmath.mpf(int(c.numerator)) / int(c.denominator)
            num = _evaluate_terms(f.num, mp_values, mpmath.mpf(0), convert)
            den = _evaluate_terms(f.den, mp_values, mpmath.mpf(0), convert)
            abs_values = [abs(v) for v in mp_values]
            magnitude = _evaluate_terms(f.num, abs_values, mpmath.mpf(0), lambda c: abs(convert(c)))
            den_scale = _evaluate_terms(f.den, abs_values, mpmath.mpf(0), lambda c: abs(convert(c)))
            return num, den, magnitude, den_scale

    num, den, magnitude, den_scale = _float_pass(prec)
    with mpmath.workprec(prec):
        if abs(den) <= den_scale * mpmath.mpf(2) ** (8 - prec):
            raise PoleError(f"denominator vanishes at {point} within working precision")
        value = num / den
    num2, den2, _, _ = _float_pass(2 * prec)
    with mpmath.workprec(2 * prec):
        error = abs(num2 / den2 - value)
    return Evaluation(value, float(error), magnitude, False)
