"""Trace records produced by the conversion procedures.

Each step type stores enough to re-check its own arithmetic, see
:func:`check_step`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import TYPE_CHECKING, Union

if TYPE_CHECKING:
    from .routing import Leg, Route


@dataclass(frozen=True)
class Division:
    """One rung of the repeated-division ladder."""

    dividend: int
    divisor: int
    quotient: int
    remainder: int


@dataclass(frozen=True)
class Multiplication:
    """One rung of the repeated-multiplication ladder for fractions."""

    fraction_in: Fraction
    radix: int
    product: Fraction
    digit: int


@dataclass(frozen=True)
class Weight:
    """A digit under its positional weight; zero digits are crossed out."""

    index: int
    radix: int
    digit: int
    weight: Fraction
    contribution: Fraction
    crossed_out: bool


@dataclass(frozen=True)
class RepetendSeries:
    """Closed-form contribution of a repetend that starts after ``offset``
    fraction digits."""

    radix: int
    offset: int
    digits: tuple[int, ...]
    contribution: Fraction


@dataclass(frozen=True)
class Grouping:
    """A block of bits and the single octal/hex digit it stands for.

    ``direction`` is ``"group"`` for bits -> digit and ``"ungroup"`` for
    digit -> bits. ``part`` is ``"int"``, ``"frac"`` or ``"rep"``.
    """

    bits: tuple[int, ...]
    padded: int
    digit: int
    width: int
    part: str
    direction: str


TraceStep = Union[Division, Multiplication, Weight, RepetendSeries, Grouping]


@dataclass(frozen=True)
class LegTrace:
    leg: Leg
    steps: tuple[TraceStep, ...]


@dataclass(frozen=True)
class Trace:
    route: Route
    legs: tuple[LegTrace, ...] = ()

    @property
    def steps(self) -> tuple[TraceStep, ...]:
        return tuple(s for leg in self.legs for s in leg.steps)


def check_step(step: TraceStep) -> bool:
    """True when the step's recorded arithmetic is internally consistent."""
    if isinstance(step, Division):
        return (
            step.dividend == step.divisor * step.quotient + step.remainder
            and 0 <= step.remainder < step.divisor
        )
    if isinstance(step, Multiplication):
        return (
            step.product == step.fraction_in * step.radix
            and step.digit == floor(step.product)
            and 0 <= step.fraction_in < 1
        )
    if isinstance(step, Weight):
        return (
            step.weight == Fraction(step.radix) ** step.index
            and step.contribution == step.digit * step.weight
            and step.crossed_out == (step.digit == 0)
        )
    if isinstance(step, RepetendSeries):
        q = len(step.digits)
        v = 0
        for d in step.digits:
            v = v * step.radix + d
        return step.contribution == Fraction(v, step.radix**step.offset * (step.radix**q - 1))
    if isinstance(step, Grouping):
        v = 0
        for b in step.bits:
            v = 2 * v + b
        return len(step.bits) == step.width and 0 <= step.padded < step.width and v == step.digit
    raise TypeError(f"not a trace step: {step!r}")
