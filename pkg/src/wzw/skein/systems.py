"""
Automorphism equation systems of the P^H, BMW and G2 planar algebras.

Each equation is stored as lhs - rhs over a rational function field whose
variables are the unknown coefficients and the algebra parameters. Solution
families are assignments of the unknowns, possibly involving square roots.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Dict, List, Optional, Tuple

from wzw.exact.ratfun import RationalFunction, rational_function_field

SIGNS = (1, -1)


@dataclass(frozen=True, eq=False)
class Equation:
    label: str
    expr: RationalFunction
    displayed: bool = True

    @property
    def cleared(self):
        """Numerator after cancelling common factors."""
        return self.expr.reduced().num

    @property
    def denominator(self):
        return self.expr.reduced().den


@dataclass(frozen=True, eq=False)
class EquationSystem:
    name: str
    field: object = field(repr=False)
    unknowns: Tuple[str, ...]
    parameters: Tuple[str, ...]
    equations: Tuple[Equation, ...]
    locus_variables: Tuple[str, ...] = ()

    def generators(self) -> Dict[str, RationalFunction]:
        names = self.unknowns + self.parameters
        return {name: RationalFunction(g, self.field.one) for name, g in zip(names, self.field.gens)}


@dataclass(frozen=True)
class SolutionFamily:
    """
    A named assignment of the unknowns.

    kind is 'exact' (constants or rational functions of the parameters),
    'parametric' (exact after reparametrizing, see `parametrize`) or
    'radical' (needs square roots; checked at sample points).
    """
    system: str
    name: str
    kind: str
    signs: Tuple[int, ...] = ()
    assignment: Optional[Callable] = None
    parametrize: Optional[Callable] = None
    valid_when: str = "always"


def _ph_forms(v: Dict[str, RationalFunction]):
    delta, gamma = v['delta'], v['gamma']
    D = delta ** 2 - 1
    b_tt = (delta ** 2 - 2) / delta
    b_ss = gamma * (delta ** 3 - 2 * delta) / D
    cubic = [
        ((delta ** 2 - 3) / delta, RationalFunction.constant(delta.ring, 0)),
        (RationalFunction.constant(delta.ring, 0), -1 / delta),
        (-gamma * delta / D, gamma - 1),
        (gamma * (gamma - 1) * delta ** 2 / D,
         (delta ** 4 * gamma + delta ** 2 * (-2 * gamma ** 2 + gamma - 2) + 2 * (gamma - 1) ** 2) / (delta * D)),
    ]
    return b_tt, b_ss, cubic


def ph_system() -> EquationSystem:
    """
    phi(T) = c1 T + c2 S, phi(S) = c3 T + c4 S must preserve the pairing and
    the cubic product of 3-boxes.

    The first seven equations are the pairing and the TTT, TTS products; the
    TSS and SSS products are the remaining relations that separate the signs.
    """
    R, gens = rational_function_field(['c1', 'c2', 'c3', 'c4', 'delta', 'gamma'])
    c1, c2, c3, c4, delta, gamma = gens
    v = {'delta': delta, 'gamma': gamma}
    b_tt, b_ss, cubic = _ph_forms(v)
    images = {'T': (c1, c2), 'S': (c3, c4)}

    equations = [
        Equation('TT', b_tt - (c1 ** 2 * b_tt + c2 ** 2 * b_ss)),
        Equation('TS', -(c1 * c3 * b_tt + c2 * c4 * b_ss)),
        Equation('SS', b_ss - (c3 ** 2 * b_tt + c4 ** 2 * b_ss)),
    ]
    for word in ('TTT', 'TTS', 'TSS', 'SSS'):
        s_count = word.count('S')
        value_t, value_s = cubic[s_count]
        lhs_t = value_t * c1 + value_s * c3
        lhs_s = value_t * c2 + value_s * c4
        rhs_t = RationalFunction.constant(R, 0)
        rhs_s = RationalFunction.constant(R, 0)
        for choice in product((0, 1), repeat=3):
            coefficient = RationalFunction.constant(R, 1)
            for letter, index in zip(word, choice):
                coefficient = coefficient * images[letter][index]
            term_t, term_s = cubic[sum(choice)]
            rhs_t = rhs_t + coefficient * term_t
            rhs_s = rhs_s + coefficient * term_s
        displayed = word in ('TTT', 'TTS')
        equations.append(Equation(f'{word}.T', lhs_t - rhs_t, displayed))
        equations.append(Equation(f'{word}.S', lhs_s - rhs_s, displayed))
    return EquationSystem('PH', R, ('c1', 'c2', 'c3', 'c4'), ('delta', 'gamma'), tuple(equations), ('gamma',))


def bmw_system() -> EquationSystem:
    """
    phi(X) = alpha E' + beta E + gamma X for the crossing X.

    'skein' and the three 'R2' equations come from the crossing relations;
    'kink' is the twist relation.
    """
    R, gens = rational_function_field(['alpha', 'beta', 'gamma', 'q', 'r'])
    alpha, beta, gamma, q, r = gens
    s = q - 1 / q
    d = (r - 1 / r) / s + 1
    equations = (
        Equation('skein', beta - alpha - (gamma - 1) * s),
        Equation('R2.1', alpha * beta + gamma ** 2 - alpha * gamma * s - 1),
        Equation('R2.2', alpha ** 2 + beta ** 2 + alpha * beta * d + alpha * gamma / r + gamma * beta * r
                 + gamma * alpha * s),
        Equation('R2.3', gamma * (alpha + beta)),
        Equation('kink', alpha * d + beta + gamma * r - r, displayed=False),
    )
    return EquationSystem('BMW', R, ('alpha', 'beta', 'gamma'), ('q', 'r'), equations, ('r',))


def g2_system() -> EquationSystem:
    """phi scales the trivalent vertex by alpha; each relation balances powers of alpha."""
    R, gens = rational_function_field(['alpha', 'q'])
    alpha, q = gens
    bigon = -(q ** 6 + q ** 4 + q ** 2 + q ** -2 + q ** -4 + q ** -6)
    triangle = q ** 4 + 1 + q ** -4
    equations = (
        Equation('bigon', bigon * (alpha ** 2 - 1)),
        Equation('triangle', triangle * (alpha ** 3 - alpha)),
        Equation('square.H', (q ** 2 + q ** -2) * (alpha ** 4 - alpha ** 2)),
        Equation('square.I', (q ** 2 + 1 + q ** -2) * (alpha ** 4 - 1)),
        Equation('pentagon', alpha ** 5 - alpha ** 3),
    )
    return EquationSystem('G2', R, ('alpha',), ('q',), equations)


SYSTEMS = {'PH': ph_system, 'BMW': bmw_system, 'G2': g2_system}


def _phi1(signs):
    e1, e2 = signs
    return lambda v: {'c1': e1, 'c2': 0, 'c3': 0, 'c4': e2}


def phi2_values(delta, gamma, signs, sqrt):
    """
    The square-root family at numeric delta, gamma; sqrt is the square root to use.

    c3 carries the product e1 * e2, so negating every coefficient maps the
    (e1, e2) family to (-e1, -e2).
    """
    e1, e2 = signs
    big = delta ** 4 * gamma + delta ** 2 * gamma ** 2 - 2 * delta ** 2 * gamma + delta ** 2 - gamma ** 2 + 2 * gamma - 1
    c1 = e1 * sqrt(delta ** 2 - 1) * (gamma - 1) / sqrt(big)
    c2 = c1 * delta / (gamma - 1)
    c3 = e1 * e2 * (1 - c1 ** 2) / c2
    c4 = c1 * c2 * c3 / (c1 ** 2 - 1)
    return {'c1': c1, 'c2': c2, 'c3': c3, 'c4': c4}


def _phi3_parametrization(signs):
    """delta = (t + 1/t)/2 makes sqrt(delta^2 - 1)/delta = (t^2 - 1)/(t^2 + 1)."""
    e1, e2 = signs

    def build():
        R, (t, gamma) = rational_function_field(['t', 'gamma'])
        c2 = e1 * (t ** 2 - 1) / (t ** 2 + 1)
        return R, {'c1': 0, 'c2': c2, 'c3': e2 / c2, 'c4': 0, 'delta': (t + 1 / t) / 2, 'gamma': gamma}
    return build


def solution_families(system: str) -> List[SolutionFamily]:
    families = []
    if system == 'PH':
        for signs in product(SIGNS, repeat=2):
            tag = ''.join('+' if s > 0 else '-' for s in signs)
            same = signs[0] == signs[1]
            families.append(SolutionFamily('PH', f'phi1{tag}', 'exact', signs, _phi1(signs),
                                           valid_when='always' if same else 'gamma = 1'))
            families.append(SolutionFamily('PH', f'phi2{tag}', 'radical', signs,
                                           valid_when='gamma != 1' if same else 'never'))
            families.append(SolutionFamily('PH', f'phi3{tag}', 'parametric', signs,
                                           parametrize=_phi3_parametrization(signs), valid_when='gamma = 1'))
    elif system == 'BMW':
        families.append(SolutionFamily('BMW', 'identity', 'exact',
                                       assignment=lambda v: {'alpha': 0, 'beta': 0, 'gamma': 1}))
        families.append(SolutionFamily('BMW', 'negative-crossing', 'exact',
                                       assignment=lambda v: {'alpha': v['q'] - 1 / v['q'],
                                                             'beta': 1 / v['q'] - v['q'], 'gamma': -1},
                                       valid_when='r^2 + 1 = 0'))
    elif system == 'G2':
        for value in (1, -1):
            families.append(SolutionFamily('G2', f'alpha={value}', 'exact',
                                           assignment=lambda v, value=value: {'alpha': value}))
        families.append(SolutionFamily('G2', 'alpha=2', 'exact', assignment=lambda v: {'alpha': 2},
                                       valid_when='never'))
    else:
        raise KeyError(f"unknown system '{system}'")
    return families
