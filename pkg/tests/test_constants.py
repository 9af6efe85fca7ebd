import math

from fractions import Fraction

import pytest

from hyperrep.bounds import (
    CONSTANTS,
    c_r,
    check_size_against_bound,
    general_nonedge_bound,
    matchings_size_bound,
    theorem1_bound
)
from hyperrep.represent import BuildOptions, Representation, build_representation


def test_c_r():
    assert c_r(3) == 62316
    assert CONSTANTS.c_r(4) == 4 ** 3 * 5 * 577
    assert CONSTANTS.epsilon == Fraction(1, 2)


class TestBounds:

    def test_theorem1(self):
        assert theorem1_bound(30, 4, 3) == pytest.approx(1.356e7, rel=1e-3)
        assert theorem1_bound(30, 4, 3, linear=True) == pytest.approx(
            62316 * 4 ** 2.5 * math.log(30))

    def test_matchings_size_bound(self):
        assert matchings_size_bound(30, 2, 3) == pytest.approx(577 * 8 * math.log(30))
        assert matchings_size_bound(30, 4, 3, linear=True) == pytest.approx(577 * 4 * 32 * math.log(30))

    @pytest.mark.parametrize('args', [(1, 2, 3), (30, 0, 3), (30, 2, 2)])
    def test_invalid(self, args):
        with pytest.raises(ValueError):
            theorem1_bound(*args)
        with pytest.raises(ValueError):
            matchings_size_bound(*args)

    def test_general_nonedge(self):
        assert general_nonedge_bound(2, 320) == 15
        assert general_nonedge_bound(5, 1000) == Fraction(3 * 1000, 32 * 5)


class TestSizeCheck:

    def test_built(self, path3):
        rep = build_representation(path3, seed=1)
        assert check_size_against_bound(rep, path3)

    def test_requires_metadata(self, path3):
        with pytest.raises(ValueError):
            check_size_against_bound(Representation.from_sets(1, [{0}] * 5), path3)

    def test_requires_unit_scale(self, path3):
        rep = build_representation(path3, seed=1, options=BuildOptions(constant_scale=2.0))
        with pytest.raises(ValueError):
            check_size_against_bound(rep, path3)
