"""
Showing the work
================

Every conversion can record its steps: positional weights, the
division ladder for the integer part, the multiplication ladder for
the fraction, and bit groups for the power-of-two radices.
"""

from radixcast import convert, parse, render_trace, table_text

# weights of 427.5 summed, then divided down into binary
_, _, trace = convert(parse("427.5_10"), 2)
print(render_trace(trace))
print()

# hex to octal regroups bits
_, _, trace = convert(parse("9A_16"), 8)
print(render_trace(trace, width=48))
print()

print(table_text(15), end="")
