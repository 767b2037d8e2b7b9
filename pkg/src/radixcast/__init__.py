"""Exact conversion of positional numerals between radices 2 to 36."""

from .exact import (
    EXACT,
    CycleCapExceeded,
    FractionDigits,
    FractionPolicy,
    Rational,
    frac_to_digits,
    from_rational,
    int_to_digits,
    to_rational,
    weighted_sum,
)
from .explain import equivalence_table, render_trace, table_text
from .numeral import Numeral, NumeralError, format_numeral, lsd, msd, parse
from .routing import Leg, Route, RouteKind, convert, group_binary, plan_route, ungroup_binary
from .steps import Division, Grouping, Multiplication, RepetendSeries, Trace, Weight

__all__ = [
    "EXACT",
    "CycleCapExceeded",
    "Division",
    "FractionDigits",
    "FractionPolicy",
    "Grouping",
    "Leg",
    "Multiplication",
    "Numeral",
    "NumeralError",
    "Rational",
    "RepetendSeries",
    "Route",
    "RouteKind",
    "Trace",
    "Weight",
    "convert",
    "equivalence_table",
    "format_numeral",
    "frac_to_digits",
    "from_rational",
    "group_binary",
    "int_to_digits",
    "lsd",
    "msd",
    "parse",
    "plan_route",
    "render_trace",
    "table_text",
    "to_rational",
    "ungroup_binary",
    "weighted_sum",
]
