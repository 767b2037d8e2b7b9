"""The two fraction oracles must agree before either is trusted."""

from math import gcd

import pytest

from oracles import expansion_shape, long_division, series_expansion


@pytest.mark.parametrize("radix", [2, 3, 8, 10, 16, 36])
def test_series_matches_long_division(radix):
    for d in range(2, 300):
        shape = expansion_shape(d, radix)
        for n in range(1, d):
            if gcd(n, d) == 1:
                assert series_expansion(n, d, radix, shape) == long_division(n, d, radix), (n, d)


def test_long_periods():
    # 1019 is a full-reptend prime in decimal; period 1018 exercises the split readout
    assert expansion_shape(1019, 10) == (0, 1018)
    for n in (1, 2, 500, 1018):
        assert series_expansion(n, 1019, 10) == long_division(n, 1019, 10)
