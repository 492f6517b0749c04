"""Agreement and correctness of the three counting engines."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from signedperms import (
    EMPTY_SET,
    FULL_SET,
    CapExceededError,
    PatternSet,
    containment_mask,
    count,
    count_backtrack,
    count_mask,
    count_naive,
    counts_all_subsets,
    iterate_Bn,
    mask_histogram,
)
from conftest import NAMED_TRIPLES, oracle_count

pattern_sets = st.integers(0, 255).map(PatternSet)


def brute_histogram(n: int) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in iterate_Bn(n):
        m = containment_mask(w).mask
        counts[m] = counts.get(m, 0) + 1
    return counts


class TestNaive:
    def test_remark_values(self):
        assert count_naive(2, PatternSet.parse("1 2, 2 1")).value == 6
        assert count_naive(3, PatternSet.parse("1 -2, -1 2")).value == 22

    def test_empty_set_counts_everything(self):
        for n in range(5):
            assert count_naive(n, EMPTY_SET).value == 2**n * math.factorial(n)

    def test_result_fields(self):
        r = count_naive(3, FULL_SET)
        assert (r.n, r.patterns, r.method) == (3, FULL_SET, "naive")
        assert r.value == 0

    def test_matches_definitional_oracle(self):
        for n in range(4):
            for mask in range(0, 256, 17):
                tset = PatternSet(mask)
                assert count_naive(n, tset).value == oracle_count(n, tset)


class TestBacktrack:
    def test_fibonacci_triple(self):
        t6 = PatternSet.parse(NAMED_TRIPLES["T_6"])
        assert count_backtrack(4, t6).value == 34
        # and the same number is the 9th Fibonacci term
        fib = [1, 1]
        while len(fib) < 9:
            fib.append(fib[-1] + fib[-2])
        assert fib[8] == 34

    def test_near_miss_of_the_fibonacci_set(self):
        # adding "-1 -2" to T_6's first two patterns lands in a different
        # orbit with a quadratic count, not the Fibonacci one
        other = PatternSet.parse("1 2, 1 -2, -1 -2, -2 -1")
        assert count_backtrack(4, other).value == 11
        assert count_naive(4, other).value == 11

    def test_order_zero_and_one(self):
        assert count_backtrack(0, FULL_SET).value == 1
        assert count_backtrack(1, FULL_SET).value == 2
        assert count_backtrack(0, EMPTY_SET).value == 1

    def test_agrees_with_naive_exhaustively(self):
        for n in range(4):
            for mask in range(256):
                tset = PatternSet(mask)
                assert (
                    count_backtrack(n, tset).value == count_naive(n, tset).value
                ), (n, mask)

    @settings(max_examples=60)
    @given(st.integers(0, 4), pattern_sets)
    def test_agrees_with_naive_random(self, n, tset):
        assert count_backtrack(n, tset).value == count_naive(n, tset).value


class TestMaskHistogram:
    def test_small_orders(self):
        assert mask_histogram(0).counts == {0: 1}
        assert mask_histogram(1).counts == {0: 2}
        # each order-2 word realizes exactly its own pattern
        assert mask_histogram(2).counts == {1 << i: 1 for i in range(8)}

    def test_totals(self):
        for n in range(6):
            assert mask_histogram(n).total() == 2**n * math.factorial(n)

    def test_matches_per_word_scan(self):
        for n in range(5):
            assert mask_histogram(n).counts == brute_histogram(n)

    def test_chunking_is_invisible(self):
        default = mask_histogram(4)
        assert mask_histogram(4, chunk_size=7).counts == default.counts
        assert mask_histogram(4, chunk_size=1).counts == default.counts

    def test_worker_split_is_invisible(self):
        assert mask_histogram(4, workers=2, chunk_size=8).counts == mask_histogram(4).counts

    def test_count_for(self):
        h = mask_histogram(2)
        assert h.count_for(1) == 1
        assert h.count_for(PatternSet(2)) == 1
        assert h.count_for(3) == 0

    def test_accumulator_guard(self):
        with pytest.raises(CapExceededError):
            mask_histogram(17, cap=20)


class TestCountsAllSubsets:
    def test_against_naive_exhaustively(self):
        for n in range(4):
            per = counts_all_subsets(n)
            assert len(per) == 256
            for mask in range(256):
                tset = PatternSet(mask)
                assert per[tset] == count_naive(n, tset).value, (n, mask)

    def test_known_values(self):
        per3 = counts_all_subsets(3)
        assert per3[EMPTY_SET] == 48
        assert per3[PatternSet.parse("1 2")] == 34
        assert per3[FULL_SET] == 0

    def test_structure_at_order_two(self):
        per2 = counts_all_subsets(2)
        for tset, value in per2.items():
            assert value == 8 - len(tset)

    def test_adding_patterns_never_helps(self):
        for n in range(5):
            per = counts_all_subsets(n)
            for mask in range(256):
                for i in range(8):
                    if not mask >> i & 1:
                        assert per[PatternSet(mask | 1 << i)] <= per[PatternSet(mask)]

    def test_histogram_reuse(self):
        h = mask_histogram(4)
        assert counts_all_subsets(4, histogram=h) == counts_all_subsets(4)
        with pytest.raises(ValueError):
            counts_all_subsets(3, histogram=h)


class TestDispatch:
    def test_methods_agree(self):
        tset = PatternSet.parse("1 2, -2 1")
        values = {count(4, tset, method=m).value for m in ("naive", "backtrack", "mask")}
        assert len(values) == 1

    def test_count_mask_result(self):
        r = count_mask(3, PatternSet.parse("1 2"))
        assert (r.value, r.method) == (34, "mask")

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            count(2, EMPTY_SET, method="magic")

    def test_caps_everywhere(self):
        big = 12
        for fn in (count_naive, count_backtrack):
            with pytest.raises(CapExceededError):
                fn(big, EMPTY_SET)
        with pytest.raises(CapExceededError):
            mask_histogram(big)
        with pytest.raises(CapExceededError):
            counts_all_subsets(big)
        with pytest.raises(ValueError):
            count_backtrack(-1, EMPTY_SET)
