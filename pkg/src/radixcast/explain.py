"""Plain-text rendering of conversion traces, and the equivalence table."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .exact import decimal_text, digits_of
from .numeral import check_radix, glyph, glyphs
from .steps import Division, Grouping, Multiplication, RepetendSeries, Trace, Weight

DEFAULT_WIDTH = 72
DEFAULT_RADICES = (10, 16, 8, 2)
COLUMN_NAMES = {10: "dec", 16: "hex", 8: "oct", 2: "bin"}
CROSS = "x "


def number_text(q: Fraction) -> str:
    """Decimal text for ``q`` when it terminates in base 10, else ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return decimal_text(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{decimal_text(q.numerator)}/{decimal_text(q.denominator)}"
    k = max(twos, fives)
    scaled = abs(q.numerator) * 10**k // q.denominator
    whole, frac = divmod(scaled, 10**k)
    text = f"{decimal_text(whole)}.{decimal_text(frac).zfill(k).rstrip('0')}"
    return "-" + text if q < 0 else text


def _division_lines(steps: Sequence[Division]) -> list[str]:
    cols = [(decimal_text(s.dividend), decimal_text(s.quotient)) for s in steps]
    w1 = max(len(a) for a, _ in cols)
    w2 = max(len(b) for _, b in cols)
    return [
        f"{a:>{w1}} / {s.divisor} = {b:<{w2}}  remainder {glyph(s.remainder)}"
        for (a, b), s in zip(cols, steps)
    ]


def _step_line(step) -> str:
    if isinstance(step, Multiplication):
        return (
            f"{number_text(step.fraction_in)} x {step.radix} = "
            f"{number_text(step.product)}  digit {glyph(step.digit)}"
        )
    if isinstance(step, Weight):
        mark = CROSS if step.crossed_out else "  "
        return (
            f"{mark}{step.radix}^{step.index} = {glyph(step.digit)} x "
            f"{number_text(step.weight)} -> {number_text(step.contribution)}"
        )
    if isinstance(step, RepetendSeries):
        q = len(step.digits)
        return (
            f"  repeating ({glyphs(step.digits)}) after {step.offset} fraction digits: "
            f"{glyphs(step.digits)}_{step.radix} / ({step.radix}^{step.offset} x "
            f"({step.radix}^{q} - 1)) -> {number_text(step.contribution)}"
        )
    if isinstance(step, Grouping):
        bits = "".join(str(b) for b in step.bits)
        if step.direction == "ungroup":
            return f"[{step.part}] {glyph(step.digit)} -> {bits}"
        note = f"  ({step.padded} padding zero{'s' if step.padded != 1 else ''})" if step.padded else ""
        return f"[{step.part}] {bits} -> {glyph(step.digit)}{note}"
    raise TypeError(f"cannot render {step!r}")


def _run_kind(step) -> str:
    if isinstance(step, Division):
        return "division"
    if isinstance(step, (Weight, RepetendSeries)):
        return "weight"
    return "other"


def render_trace(trace: Trace, width: int = DEFAULT_WIDTH) -> str:
    """Monospace rendering, one line per step, no trailing newline.

    Crossed-out weights carry an ``x`` marker; division ladders keep the
    remainder in its own column, top rung first.
    """
    if width < 40:
        raise ValueError("trace width must be at least 40")
    if not trace.legs:
        return "no conversion required"
    lines = [f"route: {trace.route.kind}"]
    for number, leg_trace in enumerate(trace.legs, start=1):
        title = f"-- leg {number}: {leg_trace.leg} "
        lines.append(title + "-" * max(0, width - len(title)))
        steps = leg_trace.steps
        i = 0
        while i < len(steps):
            j = i + 1
            kind = _run_kind(steps[i])
            while j < len(steps) and _run_kind(steps[j]) == kind:
                j += 1
            run = steps[i:j]
            if kind == "division":
                lines.extend(_division_lines(run))
            else:
                lines.extend(_step_line(s) for s in run)
            if kind == "weight":
                lines.append(f"  sum -> {number_text(sum((s.contribution for s in run), Fraction(0)))}")
            i = j
    return "\n".join(lines)


def _column_width(max_value: int, radix: int) -> int:
    natural = len(digits_of(max_value, radix))
    if radix == 10:
        return 1
    if radix == 8:
        return max(3, natural)
    return natural


def equivalence_table(max_value: int = 15, radices: Sequence[int] = DEFAULT_RADICES) -> list[tuple[str, ...]]:
    """Rows ``0..max_value``, one zero-padded cell per radix.

    Decimal cells are never padded and octal cells are at least three
    digits wide; every other column is as wide as ``max_value`` written
    in that radix.
    """
    if max_value < 1:
        raise ValueError("table needs max >= 1")
    for r in radices:
        check_radix(r)
    widths = [_column_width(max_value, r) for r in radices]
    return [
        tuple(glyphs(digits_of(v, r, w)) for r, w in zip(radices, widths))
        for v in range(max_value + 1)
    ]


def table_text(max_value: int = 15, radices: Sequence[int] = DEFAULT_RADICES) -> str:
    """Tab-separated table with a lowercase header, newline-terminated."""
    header = "\t".join(COLUMN_NAMES.get(r, f"base{r}") for r in radices)
    rows = ["\t".join(row) for row in equivalence_table(max_value, radices)]
    return "\n".join([header, *rows]) + "\n"
