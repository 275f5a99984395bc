"""Ground-layer combinatorics: retraction, runs, pairing, Gale evenness."""

from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordpoly.combinat import (
    Interval,
    Params,
    colex_key,
    colex_sorted,
    even_positions,
    is_gale,
    maximal_runs,
    paired_subsets,
    retract,
    run_containing,
)


def all_even_run_subsets(window: Interval, size: int) -> list[tuple[int, ...]]:
    """Brute oracle: filter every subset for the all-runs-even property."""
    members = window.members()
    out = [
        subset
        for subset in combinations(members, size)
        if all(r.size % 2 == 0 for r in maximal_runs(subset))
    ]
    return colex_sorted(out)


class TestParams:
    def test_accepts_classic_shapes(self):
        assert Params(5, 6, 8).m == 2
        assert Params(7, 10, 14).m == 3
        assert Params(4, 4, 9).is_multiplex
        assert Params(5, 6, 6).is_cyclic

    @pytest.mark.parametrize(
        "d,k,n", [(5, 6, 5), (5, 4, 6), (4, 5, 6), (6, 7, 8), (1, 1, 3), (3, 4, 5)]
    )
    def test_rejects_bad_shapes(self, d, k, n):
        with pytest.raises(ValueError):
            Params(d, k, n)

    def test_str(self):
        assert str(Params(5, 6, 8)) == "P^{5,6,8}"


class TestRetract:
    def test_clamps_both_ends(self):
        assert retract([-1, 0, 2, 3, 5, 6], 8) == (0, 2, 3, 5, 6)

    def test_collapses_overflow(self):
        assert retract([9, 10, 11], 8) == (8,)

    @given(
        st.lists(st.integers(-30, 30), min_size=1, max_size=12),
        st.integers(0, 20),
    )
    def test_idempotent_and_bounded(self, values, n):
        once = retract(values, n)
        assert once == retract(once, n)
        assert all(0 <= v <= n for v in once)
        assert list(once) == sorted(set(once))


class TestRuns:
    def test_example(self):
        runs = maximal_runs((0, 1, 2, 4, 5, 7, 8))
        assert runs == [Interval(0, 2), Interval(4, 5), Interval(7, 8)]

    def test_run_containing(self):
        assert run_containing((0, 1, 2, 4, 5), 4) == Interval(4, 5)
        with pytest.raises(ValueError):
            run_containing((0, 1), 5)

    @given(st.sets(st.integers(0, 40), max_size=15))
    def test_partition(self, face):
        face = tuple(sorted(face))
        runs = maximal_runs(face)
        covered = [v for r in runs for v in r.members()]
        assert tuple(sorted(covered)) == face
        for left, right in zip(runs, runs[1:]):
            assert right.lo > left.hi + 1


class TestEvenPositions:
    def test_examples(self):
        assert even_positions(Interval(4, 5)) == (5,)
        assert even_positions(Interval(3, 8)) == (4, 6, 8)
        assert even_positions(Interval(3, 2)) == ()

    @given(st.integers(0, 30), st.integers(-1, 12))
    def test_takes_alternate_members(self, lo, length):
        iv = Interval(lo, lo + length)
        picked = even_positions(iv)
        assert picked == tuple(iv.members()[1::2])


class TestPairedSubsets:
    def test_examples(self):
        assert paired_subsets(Interval(2, 4), 2) == [(2, 3), (3, 4)]
        assert paired_subsets(Interval(1, 4), 4) == [(1, 2, 3, 4)]
        assert paired_subsets(Interval(1, 4), 0) == [()]
        assert paired_subsets(Interval(1, 4), 3) == []

    @given(st.integers(0, 12), st.integers(0, 9), st.integers(0, 8))
    def test_matches_brute_filter(self, lo, length, size):
        window = Interval(lo, lo + length - 1)
        assert paired_subsets(window, size) == all_even_run_subsets(window, size)


class TestGale:
    def test_rejects_non_subset(self):
        with pytest.raises(ValueError):
            is_gale((9,), Interval(0, 2))

    def test_prefix_run_free(self):
        assert is_gale((0, 1, 2, 3, 4), Interval(0, 8))

    def test_even_interior_run(self):
        assert is_gale((1, 2), Interval(0, 3))

    def test_odd_interior_run(self):
        assert not is_gale((1, 2, 3), Interval(0, 5))

    def test_even_run_pair_interior(self):
        assert is_gale((3, 4, 5, 6), Interval(0, 10))
        assert not is_gale((3, 4, 5, 6, 7), Interval(0, 10))

    @given(st.integers(4, 9), st.data())
    def test_matches_interior_run_parity(self, n, data):
        subset = tuple(
            sorted(data.draw(st.sets(st.integers(0, n), min_size=1)))
        )
        runs = [[subset[0]]]
        for v in subset[1:]:
            if v == runs[-1][-1] + 1:
                runs[-1].append(v)
            else:
                runs.append([v])
        expected = all(
            len(r) % 2 == 0 for r in runs if r[0] != 0 and r[-1] != n
        )
        assert is_gale(subset, Interval(0, n)) == expected


class TestColex:
    def test_orders_by_reversed_tuple(self):
        faces = [(0, 1, 2), (0, 3), (1, 2), (4,)]
        assert colex_sorted(faces) == [(1, 2), (0, 1, 2), (0, 3), (4,)]

    @given(
        st.lists(
            st.sets(st.integers(0, 10), min_size=1, max_size=4).map(
                lambda s: tuple(sorted(s))
            ),
            min_size=1,
            max_size=8,
        )
    )
    def test_colex_key_is_strict_on_distinct_faces(self, faces):
        ordered = colex_sorted(set(faces))
        keys = [colex_key(f) for f in ordered]
        assert keys == sorted(keys)
        for a, b in zip(keys, keys[1:]):
            assert a < b
