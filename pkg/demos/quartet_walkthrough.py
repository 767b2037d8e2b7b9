"""
One number, four radices
========================

154 written in binary, octal, decimal and hexadecimal, and the route
taken between each pair.
"""

from radixcast import convert, parse, plan_route

n = parse("154")
for target in (2, 8, 16):
    out, route, _ = convert(n, target)
    print(f"{n} -> {out}  ({route.kind.value})")

# octal to hex never touches decimal: it passes through binary
for leg in plan_route(8, 16).legs:
    print(leg)

out, _, _ = convert(parse("232_8"), 16)
print(out)
