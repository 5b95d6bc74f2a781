"""Scalar functions with analytic derivatives for spectral calculus.

Each function tag knows its own derivatives so that divided differences can
fall back to exact confluent limits instead of numeric differentiation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from .errors import DomainError


@dataclass(frozen=True)
class Power:
    """x ** exponent, with the continuity convention 0 ** r = 0 for r > 0."""

    exponent: float

    def __call__(self, x: float) -> float:
        r = self.exponent
        if x == 0.0:
            if r > 0.0:
                return 0.0
            if r == 0.0:
                return 1.0
            raise DomainError("power %g undefined at 0" % r)
        if x < 0.0 and r != round(r):
            raise DomainError("fractional power %g undefined at %g" % (r, x))
        return float(x) ** r

    def deriv(self, x: float, order: int = 1) -> float:
        r = self.exponent
        coef = 1.0
        for k in range(order):
            coef *= r - k
        if coef == 0.0:
            return 0.0
        return coef * Power(r - order)(x)


@dataclass(frozen=True)
class Log:
    """Natural logarithm on (0, inf)."""

    def __call__(self, x: float) -> float:
        if x <= 0.0:
            raise DomainError("log undefined at %g" % x)
        return math.log(x)

    def deriv(self, x: float, order: int = 1) -> float:
        if x <= 0.0:
            raise DomainError("log derivative undefined at %g" % x)
        return (-1.0) ** (order - 1) * math.factorial(order - 1) / x**order


@dataclass(frozen=True)
class Exp:
    """Exponential, entire."""

    def __call__(self, x: float) -> float:
        return math.exp(x)

    def deriv(self, x: float, order: int = 1) -> float:
        return math.exp(x)


LOG = Log()
EXP = Exp()

ScalarFunction = Union[Power, Log, Exp]
