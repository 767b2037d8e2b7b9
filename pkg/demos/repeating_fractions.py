"""
Fractions that never end
========================

Repeated multiplication on 1/10 in binary cycles forever; exact mode
finds the cycle and returns a repetend instead.
"""

from fractions import Fraction

from radixcast import FractionPolicy, convert, frac_to_digits, from_rational, parse, to_rational

tenth = parse("0.1")
exact, _, _ = convert(tenth, 2)
print(exact)
print(to_rational(exact))

# truncation is opt-in and loses the tail
cut, _, _ = convert(tenth, 2, FractionPolicy.truncate(12))
print(cut, to_rational(cut))

# 1/7 repeats with period 6 in decimal, 1 in octal, 3 in binary
for r in (10, 8, 2):
    print(r, from_rational(Fraction(1, 7), r, trace=False)[0])

fd = frac_to_digits(Fraction(5, 12), 10, trace=False)
print("pre-period", fd.digits, "repetend", fd.repetend)
