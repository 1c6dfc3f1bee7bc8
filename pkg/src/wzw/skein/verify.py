"""
Plug-in verification of the skein automorphism systems.

Exact and parametric families are substituted symbolically. Families with
square roots are evaluated at random rational points with mpmath and must
vanish to a relative residual below RADICAL_TOLERANCE.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

import mpmath
import sympy
from tqdm import tqdm

from utils.errors import InvalidSpecError, PoleError
from utils.settings import get_settings
from wzw.exact.phases import RationalPhase
from wzw.exact.ratfun import RationalFunction, ratfun_eval
from wzw.skein.systems import SYSTEMS, EquationSystem, SolutionFamily, phi2_values, solution_families

RADICAL_TOLERANCE = mpmath.mpf('1e-25')
LOCUS_TOLERANCE = mpmath.mpf('1e-25')
MAX_RESAMPLES = 50


@dataclass(frozen=True)
class EquationResidual:
    label: str
    displayed: bool
    zero: bool
    residual: str


@dataclass(frozen=True)
class SolutionReport:
    system: str
    family: str
    kind: str
    valid_when: str
    residuals: List[EquationResidual] = field(default_factory=list)
    samples: int = 0
    worst: float = 0.0

    @property
    def passed(self) -> bool:
        return all(r.zero for r in self.residuals)

    @property
    def displayed_passed(self) -> bool:
        return all(r.zero for r in self.residuals if r.displayed)

    def failing(self) -> List[str]:
        return [r.label for r in self.residuals if not r.zero]


def _substituted(system: EquationSystem, assignment: Dict[str, object], target=None) -> List[RationalFunction]:
    return [eq.expr.substitute(assignment, target).reduced() for eq in system.equations]


def verify_solution(system: EquationSystem, assignment: Dict[str, object], family: str = 'custom',
                    target=None) -> SolutionReport:
    """
    Substitutes an exact assignment into every equation.

    Args:
        system: The equation system.
        assignment: Unknown name to int, Fraction or RationalFunction. Names
            left out stay symbolic.
        target: Ring of the assignment's RationalFunctions when it differs
            from the system's.
    """
    residuals = []
    for eq, value in zip(system.equations, _substituted(system, assignment, target)):
        residuals.append(EquationResidual(eq.label, eq.displayed, value.is_zero(), str(value)))
    return SolutionReport(system.name, family, 'exact', 'always', residuals)


def _rational_sample(rng: random.Random, height: int) -> Fraction:
    return Fraction(rng.randint(-height, height), rng.randint(1, height))


def _phi2_point(rng: random.Random, signs, height: int, prec: int) -> Optional[dict]:
    delta = _rational_sample(rng, height)
    gamma = _rational_sample(rng, height)
    if delta in (0, 1, -1) or gamma in (0, 1):
        return None
    with mpmath.workprec(prec):
        d, g = mpmath.mpf(delta.numerator) / delta.denominator, mpmath.mpf(gamma.numerator) / gamma.denominator
        try:
            values = phi2_values(d, g, signs, mpmath.sqrt)
        except ZeroDivisionError:
            return None
        if any(abs(v) < mpmath.mpf(2) ** (16 - prec) for v in (values['c1'], values['c2'])):
            return None
        if abs(values['c1'] ** 2 - 1) < mpmath.mpf(2) ** (16 - prec):
            return None
    return {**values, 'delta': delta, 'gamma': gamma}


def verify_radical_family(system: EquationSystem, family: SolutionFamily, samples: int = None,
                          prec: int = None, height: int = None, seed: int = None,
                          progress: bool = False) -> SolutionReport:
    """
    Probabilistic identity test of a square-root family.

    Each cleared numerator must vanish to RADICAL_TOLERANCE relative to its
    term magnitude at every sample; each cleared denominator must not.
    """
    settings = get_settings()
    samples = samples or settings.skein_samples
    prec = prec or settings.skein_prec
    height = height or settings.skein_height
    rng = random.Random(settings.seed if seed is None else seed)

    numerators = [RationalFunction(eq.cleared, system.field.one) for eq in system.equations]
    denominators = [RationalFunction(eq.denominator, system.field.one) for eq in system.equations]
    worst = [mpmath.mpf(0)] * len(numerators)
    done = 0
    for _ in tqdm(range(samples), desc=f"{family.name} samples", disable=not progress, leave=False):
        for _attempt in range(MAX_RESAMPLES):
            point = _phi2_point(rng, family.signs, height, prec)
            if point is None:
                continue
            try:
                for den in denominators:
                    value = ratfun_eval(den, point, prec).value
                    if abs(value) == 0:
                        raise PoleError("cleared denominator vanishes")
                evaluations = [ratfun_eval(num, point, prec) for num in numerators]
            except PoleError:
                continue
            break
        else:
            raise PoleError(f"no usable sample point for {family.name} after {MAX_RESAMPLES} attempts")
        for i, ev in enumerate(evaluations):
            with mpmath.workprec(prec):
                scale = ev.magnitude if ev.magnitude else mpmath.mpf(1)
                worst[i] = max(worst[i], abs(ev.value) / scale)
        done += 1

    residuals = [EquationResidual(eq.label, eq.displayed, w < RADICAL_TOLERANCE, mpmath.nstr(w, 5))
                 for eq, w in zip(system.equations, worst)]
    return SolutionReport(system.name, family.name, family.kind, family.valid_when, residuals, done,
                          float(max(worst)) if worst else 0.0)


def _family_residuals(system: EquationSystem, family: SolutionFamily):
    """Exact residuals and the ring they live in."""
    if family.kind == 'parametric':
        target, assignment = family.parametrize()
        return _substituted(system, assignment, target), target
    assignment = family.assignment(system.generators())
    return _substituted(system, assignment), system.field


def locus_condition(system: EquationSystem, family: SolutionFamily):
    """
    The polynomial in the locus variables on which the family solves the system.

    Returns:
        A sympy expression: 1 when the family holds identically, 0 when no
        factor involves a locus variable, None for square-root families.
    """
    if family.kind == 'radical':
        return None
    residuals, ring = _family_residuals(system, family)
    nonzero = [r.num for r in residuals if not r.is_zero()]
    if not nonzero:
        return sympy.Integer(1)
    common = nonzero[0]
    for num in nonzero[1:]:
        common = common.gcd(num)
    symbols = [s for s in ring.symbols if str(s) in system.locus_variables]
    _, factors = sympy.factor_list(common.as_expr())
    locus = sympy.Integer(1)
    for factor, multiplicity in factors:
        if factor.free_symbols & set(symbols):
            locus *= factor
    if locus == 1:
        return sympy.Integer(0)
    return sympy.expand(locus)


def _on_locus(system: EquationSystem, family: SolutionFamily) -> SolutionReport:
    """Exact check with the parametrized family restricted to gamma = 1."""
    target, assignment = family.parametrize()
    gamma = RationalFunction.constant(target, 1)
    assignment = {**assignment, 'gamma': gamma}
    report = verify_solution(system, assignment, family.name, target)
    return SolutionReport(system.name, family.name, family.kind, family.valid_when, report.residuals)


def verify_family(system: EquationSystem, family: SolutionFamily, progress: bool = False) -> SolutionReport:
    """
    Checks a named family where it is claimed to hold.

    Exact families are checked identically, parametric ones on their locus
    gamma = 1 and square-root families at sample points.
    """
    if family.kind == 'radical':
        return verify_radical_family(system, family, progress=progress)
    if family.kind == 'parametric':
        return _on_locus(system, family)
    report = verify_solution(system, family.assignment(system.generators()), family.name)
    return SolutionReport(system.name, family.name, family.kind, family.valid_when, report.residuals)


def family_table(system_name: str, progress: bool = False) -> List[dict]:
    """One row per family with its verdict, locus and agreement with its claim."""
    system = SYSTEMS[system_name]()
    rows = []
    for family in solution_families(system_name):
        report = verify_family(system, family, progress)
        locus = locus_condition(system, family)
        if family.valid_when == 'never':
            expected = False
        else:
            expected = family.kind != 'exact' or family.valid_when == 'always'
        rows.append({
            'system': system_name,
            'family': family.name,
            'kind': family.kind,
            'valid_when': family.valid_when,
            'passed': report.passed,
            'displayed_passed': report.displayed_passed,
            'failing': ",".join(report.failing()),
            'locus': '' if locus is None else str(locus),
            'samples': report.samples,
            'consistent': report.passed == expected,
        })
    return rows


@dataclass(frozen=True)
class CategoryParameters:
    """
    Planar algebra parameters of C(g, k) as high-precision complex numbers.

    on_locus reports whether the exceptional automorphism exists there
    (gamma = 1 for PH, r^2 = -1 for BMW); exact_on_locus is the same test
    carried out on exact phases when the parameter is a root of unity.
    """
    family: str
    rank: int
    level: int
    system: str
    values: Dict[str, object]
    on_locus: bool
    exact_on_locus: Optional[bool]
    locus_residual: object


def _root(num: int, den: int, prec: int):
    return RationalPhase(num, den).to_complex(prec)


def specialize_to_category(family: str, r: int, k: int, prec: int = None) -> CategoryParameters:
    """
    Raises:
        InvalidSpecError: family outside A, B, C, G2, or type A of rank 1.
    """
    prec = prec or get_settings().skein_prec
    with mpmath.workprec(prec):
        if family == 'A':
            if r < 2:
                raise InvalidSpecError(f"the PH parameters need rank >= 2, got {r}", flag='--rank')
            n, ell = r + 1, r + 1 + k
            x = _root(1, 2 * ell, prec)
            delta = (x ** n - x ** -n) / (x - 1 / x)
            gamma = ((x ** 2 - x ** (6 + 2 * n) + x ** (4 + 4 * n) - x ** (2 * n))
                     / (x ** 4 - x ** (6 + 2 * n) + x ** (2 + 4 * n) - x ** (2 * n)))
            residual = abs(gamma - 1)
            return CategoryParameters(family, r, k, 'PH', {'delta': delta, 'gamma': gamma},
                                      residual < LOCUS_TOLERANCE, None, residual)
        if family == 'B':
            den = 4 * (2 * r - 1 + k)
            phase = RationalPhase(4 * r, den)
            q, big_r = _root(2, den, prec), phase.to_complex(prec)
        elif family == 'C':
            den = 4 * (r + k + 1)
            phase = RationalPhase(2 * r + 1, den) + RationalPhase(1, 2)
            q, big_r = _root(1, den, prec), phase.to_complex(prec)
        elif family == 'G2':
            q = _root(1, 6 * (4 + k), prec)
            return CategoryParameters(family, r, k, 'G2', {'q': q}, False, False, mpmath.mpf(1))
        else:
            raise InvalidSpecError(f"no planar algebra parameters for family '{family}'", flag='--family')
        residual = abs(big_r ** 2 + 1)
        exact = phase * 2 == RationalPhase(1, 2)
        return CategoryParameters(family, r, k, 'BMW', {'q': q, 'r': big_r},
                                  residual < LOCUS_TOLERANCE, exact, residual)


def locus_scan(max_rank: int = 8, max_level: int = 8) -> List[dict]:
    """Levels where the exceptional automorphism's locus is met, per family and rank."""
    rows = []
    for family in ('A', 'B', 'C'):
        for r in range(2 if family == 'A' else 1, max_rank + 1):
            for k in range(1, max_level + 1):
                params = specialize_to_category(family, r, k)
                if params.on_locus or params.exact_on_locus:
                    rows.append({'family': family, 'rank': r, 'level': k, 'system': params.system,
                                 'exact': params.exact_on_locus,
                                 'residual': mpmath.nstr(params.locus_residual, 5)})
    return rows
