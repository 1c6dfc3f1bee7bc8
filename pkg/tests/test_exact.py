from fractions import Fraction

import mpmath
import pytest
from sympy import QQ_I

from utils.errors import PoleError
from wzw.exact.phases import RationalPhase, phase_combine
from wzw.exact.ratfun import rational_function_field, ratfun_eval


class TestRationalPhase:
    def test_reduces_mod_one(self):
        assert RationalPhase(5, 4) == RationalPhase(1, 4)
        assert RationalPhase(-1, 3) == RationalPhase(2, 3)
        assert RationalPhase(2, 6).order() == 3

    def test_arithmetic(self):
        assert RationalPhase(3, 4) + RationalPhase(1, 2) == RationalPhase(1, 4)
        assert -RationalPhase(1, 3) == RationalPhase(2, 3)
        assert RationalPhase(1, 6) * 3 == RationalPhase(1, 2)
        assert RationalPhase(1, 4) - Fraction(1, 2) == RationalPhase(3, 4)

    def test_parse_and_str(self):
        phase = RationalPhase.parse("3/8")
        assert phase == RationalPhase(3, 8)
        assert str(RationalPhase.of(Fraction(11, 8))) == "3/8"
        assert RationalPhase.parse("0").is_zero()

    def test_ordering(self):
        assert RationalPhase(1, 8) < RationalPhase(3, 8) < RationalPhase(7, 8)
        assert RationalPhase(9, 8) < RationalPhase(1, 4)
        assert sorted([RationalPhase(2, 3), RationalPhase(0), RationalPhase(1, 3)]) == \
            [RationalPhase(0), RationalPhase(1, 3), RationalPhase(2, 3)]

    def test_combine(self):
        assert phase_combine([(RationalPhase(1, 3), 2), (RationalPhase(1, 6), 1)]) == RationalPhase(5, 6)

    def test_to_complex(self):
        value = RationalPhase(1, 4).to_complex()
        assert abs(value - mpmath.mpc(0, 1)) < mpmath.mpf('1e-30')


class TestRationalFunction:
    def setup_method(self):
        self.R, (self.x, self.y) = rational_function_field(['x', 'y'])

    def test_cancellation(self):
        f = (self.x ** 2 - self.y ** 2) / (self.x - self.y)
        assert f == self.x + self.y
        assert f.reduced().den == self.R.one

    def test_substitute(self):
        f = (self.x ** 2 - self.y ** 2) / (self.x - self.y)
        assert f.substitute({'x': 2}) == 2 + self.y

    def test_substitute_into_another_ring(self):
        S, (t,) = rational_function_field(['t'])
        f = self.x * self.y / (self.x + self.y)
        result = f.substitute({'x': t, 'y': 1 / t}, S)
        assert result.ring == S
        assert result == t / (t ** 2 + 1)
        with pytest.raises(PoleError):
            f.substitute({'x': t, 'y': -t}, S)

    def test_exact_evaluation(self):
        f = (self.x ** 2 - self.y ** 2) / (self.x - self.y)
        result = ratfun_eval(f, {'x': Fraction(1, 2), 'y': 3})
        assert result.exact
        assert result.value == Fraction(7, 2)
        assert result.magnitude == Fraction(37, 4)

    def test_gaussian_evaluation(self):
        result = ratfun_eval(self.x ** 2 + 2 * self.y, {'x': QQ_I(0, 1), 'y': 1})
        assert result.exact
        assert result.value == QQ_I(1, 0)

    def test_pole(self):
        with pytest.raises(PoleError):
            ratfun_eval(1 / (self.x - self.y), {'x': 1, 'y': 1})
        with pytest.raises(PoleError):
            self.x / (self.y - self.y)

    def test_float_evaluation(self):
        result = ratfun_eval(self.x * self.y, {'x': mpmath.mpf(2), 'y': Fraction(1, 4)}, prec=128)
        assert not result.exact
        assert abs(result.value - mpmath.mpf('0.5')) < mpmath.mpf('1e-30')

    def test_missing_variable(self):
        with pytest.raises(KeyError):
            ratfun_eval(self.x + self.y, {'x': 1})
