"""The three-step conversion scheme.

1. Anything to or from decimal: weighted sum in, repeated division and
   multiplication out.
2. Binary to octal or hexadecimal by grouping bits in threes or fours,
   and back by writing each digit as 3 or 4 bits.
3. Octal and hexadecimal have no direct mapping and go through binary.

Radices outside {2, 8, 10, 16} are converted through their exact
rational value in a single hop.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import lcm

from .exact import EXACT, FractionPolicy, from_rational, weighted_sum
from .numeral import Numeral, check_radix
from .steps import Grouping, LegTrace, Trace

QUARTET = (2, 8, 10, 16)
GROUP_WIDTHS = {8: 3, 16: 4}


class RouteKind(str, Enum):
    IDENTITY = "identity"
    WEIGHTED_TO_DECIMAL = "weighted_to_decimal"
    DIVISION_FROM_DECIMAL = "division_from_decimal"
    GROUP_BINARY_UP = "group_binary_up"
    UNGROUP_TO_BINARY = "ungroup_to_binary"
    BINARY_BRIDGE = "binary_bridge"
    RATIONAL_FALLBACK = "rational_fallback"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class Leg:
    source: int
    target: int
    method: str  # weighted | division | group | ungroup | rational

    def __str__(self) -> str:
        return f"{self.source} -> {self.target} {self.method}"


@dataclass(frozen=True)
class Route:
    kind: RouteKind
    legs: tuple[Leg, ...] = ()

    @property
    def step(self) -> int | None:
        """Which of the three tabulated steps covers this route, if any."""
        return {
            RouteKind.WEIGHTED_TO_DECIMAL: 1,
            RouteKind.DIVISION_FROM_DECIMAL: 1,
            RouteKind.GROUP_BINARY_UP: 2,
            RouteKind.UNGROUP_TO_BINARY: 2,
            RouteKind.BINARY_BRIDGE: 3,
        }.get(self.kind)


def plan_route(source: int, target: int) -> Route:
    check_radix(source)
    check_radix(target)
    if source == target:
        return Route(RouteKind.IDENTITY)
    if source not in QUARTET or target not in QUARTET:
        return Route(RouteKind.RATIONAL_FALLBACK, (Leg(source, target, "rational"),))
    if target == 10:
        return Route(RouteKind.WEIGHTED_TO_DECIMAL, (Leg(source, 10, "weighted"),))
    if source == 10:
        return Route(RouteKind.DIVISION_FROM_DECIMAL, (Leg(10, target, "division"),))
    if source == 2:
        return Route(RouteKind.GROUP_BINARY_UP, (Leg(2, target, "group"),))
    if target == 2:
        return Route(RouteKind.UNGROUP_TO_BINARY, (Leg(source, 2, "ungroup"),))
    return Route(
        RouteKind.BINARY_BRIDGE,
        (Leg(source, 2, "ungroup"), Leg(2, target, "group")),
    )


def _bits_value(bits) -> int:
    v = 0
    for b in bits:
        v = 2 * v + b
    return v


def group_binary(n: Numeral, width: int) -> tuple[Numeral, tuple[Grouping, ...]]:
    """Replace runs of ``width`` bits (3 -> octal, 4 -> hex) by single digits.

    Groups are measured outward from the radix point: the integer part
    is padded with leading zeros, a finite fraction with trailing zeros.
    A repetend is first rotated into the pre-period until the pre-period
    fills whole groups, then unrolled to ``lcm(period, width)`` bits.
    """
    if n.radix != 2:
        raise ValueError(f"group_binary needs a radix-2 numeral, got radix {n.radix}")
    if width not in (3, 4):
        raise ValueError("group width must be 3 (octal) or 4 (hexadecimal)")
    steps: list[Grouping] = []

    def emit(bits, part, padded=0):
        d = _bits_value(bits)
        steps.append(Grouping(tuple(bits), padded, d, width, part, "group"))
        return d

    lead = -len(n.int_digits) % width
    ints = [0] * lead + list(n.int_digits)
    int_out = [emit(ints[i:i + width], "int", lead if i == 0 else 0) for i in range(0, len(ints), width)]

    pre = list(n.frac_digits)
    rep = list(n.repetend)
    trail = 0
    if rep:
        while len(pre) % width:
            pre.append(rep[0])
            rep = rep[1:] + rep[:1]
        rep = rep * (lcm(len(rep), width) // len(rep))
    else:
        trail = -len(pre) % width
        pre += [0] * trail
    last = len(pre) - width
    frac_out = [emit(pre[i:i + width], "frac", trail if i == last else 0) for i in range(0, len(pre), width)]
    rep_out = [emit(rep[i:i + width], "rep") for i in range(0, len(rep), width)]

    out = Numeral.build(2**width, int_out, frac_out, rep_out, n.negative)
    return out, tuple(steps)


def ungroup_binary(n: Numeral) -> tuple[Numeral, tuple[Grouping, ...]]:
    """Write every octal or hex digit as its fixed-width binary code."""
    width = GROUP_WIDTHS.get(n.radix)
    if width is None:
        raise ValueError(f"ungroup_binary needs a radix-8 or radix-16 numeral, got radix {n.radix}")
    steps: list[Grouping] = []

    def expand(digits, part):
        bits: list[int] = []
        for d in digits:
            code = [(d >> k) & 1 for k in range(width - 1, -1, -1)]
            steps.append(Grouping(tuple(code), 0, d, width, part, "ungroup"))
            bits += code
        return bits

    out = Numeral.build(
        2,
        expand(n.int_digits, "int"),
        expand(n.frac_digits, "frac"),
        expand(n.repetend, "rep"),
        n.negative,
    )
    return out, tuple(steps)


def _run_leg(n: Numeral, leg: Leg, policy: FractionPolicy, trace: bool) -> tuple[Numeral, tuple]:
    if leg.method == "group":
        return group_binary(n, GROUP_WIDTHS[leg.target])
    if leg.method == "ungroup":
        return ungroup_binary(n)
    if leg.method == "weighted":
        value, wsteps = weighted_sum(n)
        out, _ = from_rational(value, leg.target, policy, trace=False)
        return out, wsteps
    if leg.method in ("division", "rational"):
        value, wsteps = weighted_sum(n)
        out, dsteps = from_rational(value, leg.target, policy, trace)
        return out, wsteps + dsteps
    raise ValueError(f"unknown leg method {leg.method!r}")


def convert(
    n: Numeral, target: int, policy: FractionPolicy = EXACT, trace: bool = True
) -> tuple[Numeral, Route, Trace]:
    """Convert ``n`` to ``target`` along the planned route.

    Grouping legs are exact whatever the policy; the policy governs the
    fraction digits of weighted, division and rational legs. With
    ``trace=False`` the ladders are skipped and legs record only the
    cheap weight and grouping steps.
    """
    route = plan_route(n.radix, target)
    legs = []
    current = n
    for leg in route.legs:
        current, steps = _run_leg(current, leg, policy, trace)
        legs.append(LegTrace(leg, steps))
    return current, route, Trace(route, tuple(legs))
