from dataclasses import replace
from fractions import Fraction

import numpy as np
import pytest

from hyperrep.errors import RetriesExhaustedError
from hyperrep.represent import (
    ChernoffFamily,
    FamilyParams,
    failure_probability_bound,
    gen_verified_family,
    sample_family,
    verify_family
)


@pytest.fixture
def params() -> FamilyParams:
    return FamilyParams(t=2000, p=Fraction(1, 4), epsilon=Fraction(1, 2), m=2)


def family_of(params, *sets) -> ChernoffFamily:
    return ChernoffFamily(params, tuple(np.asarray(s, dtype=np.int64) for s in sets), 0)


class TestFamilyParams:

    @pytest.mark.parametrize('kwargs', [
        dict(t=0, p=0.5, epsilon=0.5, m=2),
        dict(t=10, p=1.5, epsilon=0.5, m=2),
        dict(t=10, p=0.5, epsilon=1, m=2),
        dict(t=10, p=0.5, epsilon=0.5, m=1),
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(ValueError):
            FamilyParams(**kwargs)

    def test_interval(self, params):
        assert params.interval(1) == (250, 750)
        assert params.interval(2) == (Fraction(125, 2), Fraction(375, 2))

    def test_requirement(self, params):
        # 3 * 3 * ln(10) / (1/4 * 1/16)
        assert params.required_segment(10) == pytest.approx(576 * np.log(10))
        assert params.meets_requirement(2) is True
        assert FamilyParams(10, 0.25, 0.5, 2).meets_requirement(10) is False
        with pytest.raises(ValueError):
            FamilyParams(10, 0, 0.5, 2).required_segment(10)


class TestSampleFamily:

    def test_deterministic(self, params):
        first = sample_family(4, params, 3)
        second = sample_family(4, params, 3)
        assert len(first) == 4
        assert all(np.array_equal(a, b) for a, b in zip(first.sets, second.sets))
        assert not np.array_equal(first.sets[0], sample_family(4, params, 4).sets[0])

    def test_sorted_within_segment(self, params):
        family = sample_family(3, params, 1)
        for s in family.sets:
            assert np.all(np.diff(s) > 0)
            assert s.min() >= 0 and s.max() < params.t

    def test_empty(self, params):
        assert len(sample_family(0, params, 1)) == 0
        with pytest.raises(ValueError):
            sample_family(-1, params, 1)


class TestVerifyFamily:

    def test_hand_built(self):
        params = FamilyParams(t=8, p=Fraction(1, 2), epsilon=Fraction(1, 2), m=2)
        # singles need [2, 6], pairs need [1, 3]
        family = family_of(params, [0, 1, 2, 3], [2, 3, 4, 5], [6, 7])
        report = verify_family(family)
        assert report.checked == 6
        assert not report.certified
        assert [(v.l, v.members, v.size) for v in report.violations] == [
            (2, (0, 2), 0), (2, (1, 2), 0)
        ]

    def test_dense_and_sparse_agree(self, params):
        family = sample_family(5, params, 12)
        dense = verify_family(family)
        sparse = verify_family(family, dense_threshold=0)
        assert dense == sparse
        assert dense.checked == 5 + 10

    def test_single_member(self, params):
        report = verify_family(sample_family(1, params, 2))
        assert report.checked == 1

    @pytest.mark.parametrize('seed', range(10))
    def test_monotone_in_tolerance(self, seed):
        small = FamilyParams(t=200, p=Fraction(1, 4), epsilon=Fraction(1, 4), m=2)
        family = sample_family(6, small, seed)
        previous = None
        for epsilon in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
            widened = ChernoffFamily(replace(small, epsilon=epsilon), family.sets, seed)
            report = verify_family(widened)
            found = {(v.l, v.members) for v in report.violations}
            if previous is not None:
                assert found <= previous
            previous = found
            assert report.certified == (not found)


class TestGenVerifiedFamily:

    def test_certified(self, params):
        family = gen_verified_family(6, params, 21, 20)
        assert len(family) == 6
        assert family.attempts >= 1
        assert verify_family(family).certified

    def test_exhausted(self):
        # a single element can never fall into [1/4, 3/4]
        params = FamilyParams(t=1, p=Fraction(1, 2), epsilon=Fraction(1, 2), m=2)
        with pytest.raises(RetriesExhaustedError) as info:
            gen_verified_family(2, params, 0, 3)
        assert info.value.attempts == 3
        assert not info.value.report.certified

    def test_deterministic(self):
        # small segments make rejected attempts likely
        params = FamilyParams(t=200, p=Fraction(1, 4), epsilon=Fraction(1, 2), m=2)
        for seed in range(5):
            first = gen_verified_family(6, params, seed, 50)
            second = gen_verified_family(6, params, seed, 50)
            assert first.attempts == second.attempts
            assert first.seed == second.seed
            assert all(np.array_equal(a, b) for a, b in zip(first.sets, second.sets))

    def test_invalid_retries(self, params):
        with pytest.raises(ValueError):
            gen_verified_family(2, params, 0, 0)


def test_failure_probability_bound(params):
    small = failure_probability_bound(4, params)
    assert 0 < small < 1e-3
    assert failure_probability_bound(4, FamilyParams(10, 0.25, 0.5, 2)) > 1
