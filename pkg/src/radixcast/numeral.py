"""Positional numerals: digit alphabet, canonical form, parsing and formatting.

A :class:`Numeral` stores a sign, a radix, the integer digits (most
significant first), a finite run of fraction digits and an optional
repetend, the block that repeats forever after the finite fraction.
Every constructed numeral is canonical, so two numerals with the same
value in the same radix compare equal field by field.

The text grammar (case-insensitive)::

    numeral := sign? (prefix digits frac? | digits frac? tag?)
    frac    := '.' digits? rep?
    rep     := '(' digits ')'
    tag     := '_' decimal-radix
    prefix  := '0b' | '0o' | '0x'

Untagged literals are decimal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

MIN_RADIX = 2
MAX_RADIX = 36
GLYPHS = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ"

_VALUES = {ch: i for i, ch in enumerate(GLYPHS)}
_VALUES.update({ch.lower(): i for ch, i in list(_VALUES.items())})

_PREFIXES = {"0b": 2, "0o": 8, "0x": 16}
_SIGNS = {"+": False, "-": True, "−": True}


class NumeralError(ValueError):
    """Raised for malformed numeral text or out-of-range digits.

    ``glyph`` and ``position`` (a 0-based column in the stripped input)
    are set when a single character is to blame.
    """

    def __init__(self, message: str, glyph: str | None = None, position: int | None = None):
        super().__init__(message)
        self.glyph = glyph
        self.position = position


def check_radix(radix: int) -> int:
    if isinstance(radix, bool) or not isinstance(radix, int):
        raise TypeError(f"radix must be an int, not {type(radix).__name__}")
    if not MIN_RADIX <= radix <= MAX_RADIX:
        raise NumeralError(f"radix {radix} outside [{MIN_RADIX}, {MAX_RADIX}]")
    return radix


def glyph(value: int) -> str:
    """Uppercase glyph for a digit value: 0-9 then A-Z."""
    return GLYPHS[value]


def digit_value(ch: str) -> int:
    try:
        return _VALUES[ch]
    except KeyError:
        raise NumeralError(f"{ch!r} is not a digit glyph", glyph=ch) from None


def glyphs(digits: Sequence[int]) -> str:
    return "".join(GLYPHS[d] for d in digits)


@dataclass(frozen=True)
class Numeral:
    """A canonical signed positional numeral.

    Direct construction validates canonical form and rejects anything
    else; use :meth:`build` to normalize arbitrary digit sequences.
    """

    radix: int
    int_digits: tuple[int, ...] = (0,)
    frac_digits: tuple[int, ...] = ()
    repetend: tuple[int, ...] = ()
    negative: bool = False

    def __post_init__(self) -> None:
        check_radix(self.radix)
        r = self.radix
        for name in ("int_digits", "frac_digits", "repetend"):
            digits = getattr(self, name)
            if not isinstance(digits, tuple):
                raise TypeError(f"{name} must be a tuple")
            if digits and (min(digits) < 0 or max(digits) >= r):
                raise ValueError(f"digit out of range for radix {r} in {name}")
        ints, frac, rep = self.int_digits, self.frac_digits, self.repetend
        if not ints or (len(ints) > 1 and ints[0] == 0):
            raise ValueError("integer digits must be nonempty without leading zeros")
        if rep:
            if not _is_primitive(rep):
                raise ValueError("repetend is not primitive")
            if rep == (0,) or rep == (r - 1,):
                raise ValueError("repetend of all 0s or all top digits is not canonical")
            if frac and frac[-1] == rep[-1]:
                raise ValueError("pre-period is not minimal")
        elif frac and frac[-1] == 0:
            raise ValueError("finite fraction has a trailing zero")
        if self.negative and self.is_zero:
            raise ValueError("zero carries a positive sign")

    @classmethod
    def build(
        cls,
        radix: int,
        int_digits: Sequence[int] = (0,),
        frac_digits: Sequence[int] = (),
        repetend: Sequence[int] = (),
        negative: bool = False,
    ) -> Numeral:
        """Normalize digit sequences into the canonical numeral of the same value."""
        check_radix(radix)
        ints = list(int_digits) or [0]
        frac = list(frac_digits)
        rep = list(repetend)
        for digits in (ints, frac, rep):
            if digits and (min(digits) < 0 or max(digits) >= radix):
                raise ValueError(f"digit out of range for radix {radix}")

        if rep:
            rep = _primitive_root(rep)
            if rep == [0]:
                rep = []
            elif rep == [radix - 1]:
                # 0.x(r-1) repeating == 0.(x+1)
                rep = []
                ints, frac = _increment_last(ints, frac, radix)
            else:
                while frac and frac[-1] == rep[-1]:
                    frac.pop()
                    rep.insert(0, rep.pop())
        if not rep:
            while frac and frac[-1] == 0:
                frac.pop()
        while len(ints) > 1 and ints[0] == 0:
            ints.pop(0)

        negative = bool(negative)
        if ints == [0] and not frac and not rep:
            negative = False
        return cls(radix, tuple(ints), tuple(frac), tuple(rep), negative)

    @classmethod
    def zero(cls, radix: int = 10) -> Numeral:
        return cls(radix)

    @property
    def is_zero(self) -> bool:
        return self.int_digits == (0,) and not self.frac_digits and not self.repetend

    @property
    def is_terminating(self) -> bool:
        return not self.repetend

    def positions(self) -> Iterator[tuple[int, int]]:
        """Yield ``(index, digit)`` for every integer and finite fraction digit.

        Index 0 is the units position; fraction digits have negative
        indices. Repetend digits are not included.
        """
        top = len(self.int_digits) - 1
        for i, d in enumerate(self.int_digits):
            yield top - i, d
        for i, d in enumerate(self.frac_digits, start=1):
            yield -i, d

    def __str__(self) -> str:
        return format_numeral(self, "tagged")


def _is_primitive(rep: Sequence[int]) -> bool:
    return len(_primitive_root(list(rep))) == len(rep)


def _primitive_root(rep: list[int]) -> list[int]:
    q = len(rep)
    for p in range(1, q // 2 + 1):
        if q % p == 0 and rep[p:] == rep[:-p]:
            return rep[:p]
    return rep


def _increment_last(ints: list[int], frac: list[int], radix: int) -> tuple[list[int], list[int]]:
    digits = ints + frac
    i = len(digits) - 1
    while i >= 0:
        if digits[i] == radix - 1:
            digits[i] = 0
            i -= 1
        else:
            digits[i] += 1
            break
    else:
        digits.insert(0, 1)
        return digits[: len(ints) + 1], digits[len(ints) + 1:]
    return digits[: len(ints)], digits[len(ints):]


def _scan_digits(text: str, start: int, stop: int, radix: int) -> list[int]:
    out = []
    for pos in range(start, stop):
        ch = text[pos]
        value = _VALUES.get(ch)
        if value is None:
            raise NumeralError(f"unexpected character {ch!r} at position {pos}", glyph=ch, position=pos)
        if value >= radix:
            raise NumeralError(
                f"glyph {ch!r} at position {pos} is not a digit in radix {radix}",
                glyph=ch,
                position=pos,
            )
        out.append(value)
    return out


def parse(text: str, radix: int | None = None) -> Numeral:
    """Parse numeral text into a canonical :class:`Numeral`.

    ``radix`` supplies the radix for untagged literals (default 10). A
    tag or prefix that disagrees with an explicit ``radix`` is an error.

    >>> parse("9A_16").int_digits
    (9, 10)
    >>> format_numeral(parse("0.0(0011)_2"), "tagged")
    '0.0(0011)_2'
    """
    if radix is not None:
        check_radix(radix)
    s = text.strip()
    if not s:
        raise NumeralError("empty numeral")

    pos = 0
    negative = False
    if s[0] in _SIGNS:
        negative = _SIGNS[s[0]]
        pos = 1

    prefix_radix = None
    head = s[pos:pos + 2].lower()
    if head in _PREFIXES:
        prefix_radix = _PREFIXES[head]
        pos += 2

    end = len(s)
    tag_radix = None
    under = s.rfind("_")
    if under >= pos:
        tag = s[under + 1:]
        if not tag.isdigit() or not tag.isascii():
            raise NumeralError(f"radix tag {tag!r} is not a decimal integer", position=under + 1)
        tag_radix = int(tag)
        if not MIN_RADIX <= tag_radix <= MAX_RADIX:
            raise NumeralError(f"radix tag {tag_radix} outside [{MIN_RADIX}, {MAX_RADIX}]", position=under + 1)
        end = under

    if prefix_radix is not None and tag_radix is not None and prefix_radix != tag_radix:
        # "0B_36" is the radix-36 numeral 0B, not a binary prefix
        if _VALUES[s[pos - 1]] < tag_radix:
            pos -= 2
            prefix_radix = None

    tags = {r for r in (prefix_radix, tag_radix) if r is not None}
    if len(tags) > 1:
        raise NumeralError(f"conflicting radix tags: prefix says {prefix_radix}, suffix says {tag_radix}")
    if tags and radix is not None and radix not in tags:
        raise NumeralError(f"literal is tagged radix {tags.pop()} but radix {radix} was requested")
    r = tags.pop() if tags else (radix if radix is not None else 10)

    dot = s.find(".", pos, end)
    int_stop = dot if dot >= 0 else end
    if int_stop == pos:
        raise NumeralError("empty digit run before the radix point", position=pos)
    ints = _scan_digits(s, pos, int_stop, r)

    frac: list[int] = []
    rep: list[int] = []
    if dot >= 0:
        paren = s.find("(", dot + 1, end)
        frac_stop = paren if paren >= 0 else end
        frac = _scan_digits(s, dot + 1, frac_stop, r)
        if paren >= 0:
            if s[end - 1] != ")" or end - 1 <= paren:
                raise NumeralError("unterminated repetend", position=paren)
            if end - 1 == paren + 1:
                raise NumeralError("empty repetend", position=paren)
            rep = _scan_digits(s, paren + 1, end - 1, r)

    return Numeral.build(r, ints, frac, rep, negative)


def format_numeral(n: Numeral, style: str = "plain") -> str:
    """Render ``n`` with uppercase glyphs; ``tagged`` appends ``_R``."""
    if style not in ("plain", "tagged"):
        raise ValueError(f"unknown style {style!r}")
    parts = ["-" if n.negative else "", glyphs(n.int_digits)]
    if n.frac_digits or n.repetend:
        parts.append(".")
        parts.append(glyphs(n.frac_digits))
        if n.repetend:
            parts.append(f"({glyphs(n.repetend)})")
    if style == "tagged":
        parts.append(f"_{n.radix}")
    return "".join(parts)


def msd(n: Numeral) -> int:
    """Most significant digit.

    For a pure fraction (integer part 0) this is the first fraction
    digit, even when that digit is zero.
    """
    if n.int_digits == (0,):
        if n.frac_digits:
            return n.frac_digits[0]
        if n.repetend:
            return n.repetend[0]
    return n.int_digits[0]


def lsd(n: Numeral) -> int:
    """Least significant digit: last finite fraction digit, else last
    digit of the first repetend cycle, else the units digit."""
    if n.frac_digits and not n.repetend:
        return n.frac_digits[-1]
    if n.repetend:
        return n.repetend[-1]
    return n.int_digits[-1]
