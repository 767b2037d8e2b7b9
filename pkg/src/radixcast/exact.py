"""Exact values for numerals.

Numerals evaluate to :class:`fractions.Fraction` (always in lowest terms
with a positive denominator). Going the other way, integer parts are
split into digits by repeated division and fraction parts by repeated
multiplication, with remainder-state cycle detection for repetends.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, log2
from typing import NamedTuple

from .numeral import Numeral, check_radix
from .steps import Division, Multiplication, RepetendSeries, Weight

Rational = Fraction

DEFAULT_CYCLE_CAP = 4096

_TO_VALUES = bytes.maketrans(
    b"0123456789abcdefABCDEF", bytes(range(16)) + bytes(range(10, 16))
)
_FORMAT_CODES = {2: "b", 8: "o", 16: "x"}
# comfortably under the interpreter's default int -> str digit limit
_STR_BITS = 13000
# below this many bits, schoolbook division beats the recursive split
_SPLIT_BITS = 2048


@dataclass(frozen=True)
class FractionPolicy:
    """How fraction digits are produced.

    ``exact`` finds the repetend, failing once pre-period plus period
    would exceed ``cycle_cap`` digits. ``truncate`` emits exactly
    ``max_digits`` digits with no rounding.
    """

    mode: str = "exact"
    max_digits: int | None = None
    cycle_cap: int = DEFAULT_CYCLE_CAP

    def __post_init__(self) -> None:
        if self.mode == "exact":
            if self.cycle_cap < 1:
                raise ValueError("cycle_cap must be at least 1")
        elif self.mode == "truncate":
            if self.max_digits is None or self.max_digits < 1:
                raise ValueError("truncate mode needs max_digits >= 1")
        else:
            raise ValueError(f"unknown fraction mode {self.mode!r}")

    @classmethod
    def exact(cls, cycle_cap: int = DEFAULT_CYCLE_CAP) -> FractionPolicy:
        return cls("exact", None, cycle_cap)

    @classmethod
    def truncate(cls, max_digits: int) -> FractionPolicy:
        return cls("truncate", max_digits)


EXACT = FractionPolicy()


class CycleCapExceeded(ArithmeticError):
    """The fraction did not terminate or repeat within ``cap`` digits.

    ``digits`` holds the first ``cap`` digits that were generated.
    """

    def __init__(self, cap: int, digits: tuple[int, ...]):
        super().__init__(f"fraction neither terminates nor repeats within {cap} digits")
        self.cap = cap
        self.digits = digits


class FractionDigits(NamedTuple):
    digits: tuple[int, ...]
    repetend: tuple[int, ...]
    truncated: bool
    steps: tuple[Multiplication, ...] = ()


def _horner(digits, radix: int) -> int:
    if len(digits) > 256:
        # split in halves so the big multiplications stay balanced
        half = len(digits) // 2
        return _horner(digits[:half], radix) * radix ** (len(digits) - half) + _horner(digits[half:], radix)
    v = 0
    for d in digits:
        v = v * radix + d
    return v


def to_rational(n: Numeral) -> Fraction:
    """Exact value of ``n``: the weighted digit sum plus the repetend's
    geometric series."""
    r = n.radix
    p = len(n.frac_digits)
    scale = r**p
    value = Fraction(_horner(n.int_digits + n.frac_digits, r), scale)
    if n.repetend:
        q = len(n.repetend)
        value += Fraction(_horner(n.repetend, r), scale * (r**q - 1))
    return -value if n.negative else value


def weighted_sum(n: Numeral) -> tuple[Fraction, tuple[Weight | RepetendSeries, ...]]:
    """Evaluate ``n`` position by position, recording one step per digit.

    Zero digits are recorded with ``crossed_out`` set; a repetend is
    recorded as a single series step.
    """
    r = n.radix
    steps: list[Weight | RepetendSeries] = []
    total = Fraction(0)
    for index, d in n.positions():
        w = Fraction(r) ** index
        c = d * w
        steps.append(Weight(index, r, d, w, c, d == 0))
        total += c
    if n.repetend:
        p, q = len(n.frac_digits), len(n.repetend)
        c = Fraction(_horner(n.repetend, r), r**p * (r**q - 1))
        steps.append(RepetendSeries(r, p, n.repetend, c))
        total += c
    return (-total if n.negative else total), tuple(steps)


@lru_cache(maxsize=None)
def _chunk(radix: int) -> tuple[int, int]:
    k = 1
    while radix ** (k + 1) < 1 << 60:
        k += 1
    return radix**k, k


def _schoolbook(v: int, radix: int) -> list[int]:
    # peel off machine-word sized chunks, then split each chunk
    big, k = _chunk(radix)
    out: list[int] = []
    while v:
        v, rem = divmod(v, big)
        for _ in range(k):
            rem, d = divmod(rem, radix)
            out.append(d)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    out.reverse()
    return out or [0]


def _split_digits(v: int, radix: int, width: int) -> list[int]:
    """Digits of ``v`` left-padded to exactly ``width`` (``v < radix**width``)."""
    if v.bit_length() <= _SPLIT_BITS:
        out = _schoolbook(v, radix) if v else []
        return [0] * (width - len(out)) + out
    low = width // 2
    hi, lo = divmod(v, radix**low)
    return _split_digits(hi, radix, width - low) + _split_digits(lo, radix, low)


def digits_of(v: int, radix: int, width: int = 0) -> tuple[int, ...]:
    """Base-``radix`` digits of ``v >= 0``, MSD first, zero-padded to ``width``.

    Fast path without a trace; output is identical to :func:`int_to_digits`.
    """
    code = _FORMAT_CODES.get(radix)
    if code is not None:
        out = format(v, code).encode("ascii").translate(_TO_VALUES)
        if len(out) < width:
            out = bytes(width - len(out)) + out
        return tuple(out)
    if radix == 10 and v.bit_length() <= _STR_BITS:
        out = str(v).encode("ascii").translate(_TO_VALUES)
        if len(out) < width:
            out = bytes(width - len(out)) + out
        return tuple(out)
    if v.bit_length() <= _SPLIT_BITS:
        out = _schoolbook(v, radix)
    else:
        n = int(v.bit_length() / log2(radix)) + 2
        while radix**n <= v:
            n += 1
        out = _split_digits(v, radix, n)
        k = 0
        while k < len(out) - 1 and out[k] == 0:
            k += 1
        out = out[k:]
    if len(out) < width:
        out = [0] * (width - len(out)) + out
    return tuple(out)


def int_to_digits(v: int, radix: int, trace: bool = True) -> tuple[tuple[int, ...], tuple[Division, ...]]:
    """Digits of ``v >= 0`` by repeated division, remainders read in reverse.

    The ladder runs at least once, so ``v == 0`` yields ``(0,)`` from a
    single division.
    """
    check_radix(radix)
    if v < 0:
        raise ValueError("int_to_digits needs a nonnegative integer")
    if not trace:
        return digits_of(v, radix), ()
    steps = []
    rems = []
    while True:
        q, rem = divmod(v, radix)
        steps.append(Division(v, radix, q, rem))
        rems.append(rem)
        v = q
        if v == 0:
            break
    return tuple(reversed(rems)), tuple(steps)


def _find_cycle(s: int, d: int, radix: int, cap: int) -> tuple[int, int] | None:
    """Pre-period and period lengths of the remainder states ``s -> s*r mod d``.

    A terminating expansion reports period 0. Returns None when more
    than ``cap`` digits would be needed.
    """
    if s == 0:
        return 0, 0
    if gcd(s, d) == 1:
        # s is a unit mod d, so s*r^i repeats exactly when r^i does
        return _unit_cycle(d, radix, cap)
    return _walk(s, d, radix, cap)


@lru_cache(maxsize=4096)
def _unit_cycle(d: int, radix: int, cap: int) -> tuple[int, int] | None:
    return _walk(1 % d, d, radix, cap) if d > 1 else (0, 0)


def _walk(s: int, d: int, radix: int, cap: int) -> tuple[int, int] | None:
    if s == 0:
        return 0, 0
    if d - 1 <= cap and d <= 1 << 20:
        # at most d-1 distinct nonzero states, so the cap cannot trip
        seen = bytearray(d)
        t = s
        while t and not seen[t]:
            seen[t] = 1
            t = t * radix % d
        count = seen.count(1)
        if t == 0:
            return count, 0
        pre = 0
        u = s
        while u != t:
            u = u * radix % d
            pre += 1
        return pre, count - pre
    index: dict[int, int] = {}
    t = s
    i = 0
    while t:
        j = index.setdefault(t, i)
        if j != i:
            return j, i - j
        if i == cap:
            return None
        t = t * radix % d
        i += 1
    return i, 0


def _multiplication_steps(s: int, d: int, radix: int, count: int) -> tuple[Multiplication, ...]:
    steps = []
    for _ in range(count):
        q, nxt = divmod(s * radix, d)
        steps.append(Multiplication(Fraction(s, d), radix, Fraction(s * radix, d), q))
        s = nxt
    return tuple(steps)


def frac_to_digits(
    f: Fraction, radix: int, policy: FractionPolicy = EXACT, trace: bool = True
) -> FractionDigits:
    """Fraction digits of ``0 <= f < 1`` by repeated multiplication.

    Each product's integer part is the next digit and its fractional
    part the next remainder. In exact mode the first remainder that
    recurs marks the start of the repetend.
    """
    check_radix(radix)
    f = Fraction(f)
    if not 0 <= f < 1:
        raise ValueError("frac_to_digits needs 0 <= f < 1")
    s, d = f.numerator, f.denominator

    if policy.mode == "truncate":
        k = policy.max_digits
        q, rem = divmod(s * radix**k, d)
        steps = _multiplication_steps(s, d, radix, k) if trace else ()
        return FractionDigits(digits_of(q, radix, k), (), rem != 0, steps)

    cycle = _find_cycle(s, d, radix, policy.cycle_cap)
    if cycle is None:
        cap = policy.cycle_cap
        raise CycleCapExceeded(cap, digits_of(s * radix**cap // d, radix, cap))
    pre, period = cycle
    m = pre + period
    digits = digits_of(s * radix**m // d, radix, m) if m else ()
    steps = _multiplication_steps(s, d, radix, m) if trace else ()
    return FractionDigits(digits[:pre], digits[pre:], False, steps)


def from_rational(
    v: Fraction, radix: int, policy: FractionPolicy = EXACT, trace: bool = True
) -> tuple[Numeral, tuple[Division | Multiplication, ...]]:
    """Canonical numeral for ``v`` in ``radix`` plus the ladder steps."""
    check_radix(radix)
    v = Fraction(v)
    whole, rem = divmod(abs(v.numerator), v.denominator)
    ints, dsteps = int_to_digits(whole, radix, trace)
    fd = frac_to_digits(Fraction(rem, v.denominator), radix, policy, trace)
    n = Numeral.build(radix, ints, fd.digits, fd.repetend, v < 0)
    return n, dsteps + fd.steps


def decimal_text(v: int) -> str:
    """Decimal string of an integer of any size."""
    if v < 0:
        return "-" + decimal_text(-v)
    if v.bit_length() <= _STR_BITS:
        return str(v)
    return "".join("0123456789"[d] for d in digits_of(v, 10))
