import itertools
import random

import pytest

from circinv import affine
from circinv.lift import (
    circular_length,
    circular_length_witness,
    enumerate_geodesics,
    minimal_lift,
    minimize_path,
    pair_distance,
    relative_arrangement,
    sort_by_uncrossings,
)
from circinv.oracle import bfs_distance, exhaustive_table
from circinv.perm import (
    CircularArrangement,
    InvalidArrangement,
    apply_dihedral,
    apply_generator,
    apply_word,
    cut_linear_length,
    dihedral_class,
    dihedral_elements,
    identity,
    is_sorted_circular,
)

from conftest import random_arrangement

EXAMPLE = CircularArrangement((1, 6, 3, 8, 5, 2, 7, 4))


class TestMinimizePath:
    def test_cases(self):
        assert minimize_path(8, 1, 8) == 0
        assert minimize_path(5, 3, 4) == 4
        assert minimize_path(8, 2, 6) == 6

    def test_is_nearest(self):
        for n in range(3, 12):
            for i in range(1, n + 1):
                for image in range(1, n + 1):
                    m = minimize_path(n, i, image)
                    assert (m - image) % n == 0
                    assert abs(m - i) == min(abs(image + k * n - i) for k in (-1, 0, 1))


class TestMinimalLift:
    def test_example(self):
        assert minimal_lift(CircularArrangement((3, 5, 4, 1, 2))).images == (3, 0, 4, 6, 7)

    def test_identity(self):
        assert minimal_lift(identity(6)) == affine.identity(6)

    def test_bounded_displacement(self):
        rng = random.Random(5)
        for _ in range(200):
            a = random_arrangement(rng, rng.randint(3, 15))
            lift = minimal_lift(a)
            n = a.n
            assert all(abs(x - i) <= (n + 1) // 2 for i, x in enumerate(lift.images, 1))
            assert all(x % n == y % n for x, y in zip(lift.images, a.window))


class TestCircularLength:
    def test_motivating_example(self, backend):
        assert circular_length(EXAMPLE) == 8

    def test_boundary_swap(self, backend):
        assert circular_length(CircularArrangement((8, 2, 3, 4, 5, 6, 7, 1))) == 1

    def test_small_example(self, backend):
        a = CircularArrangement((3, 5, 4, 1, 2))
        assert circular_length(a) == 1
        assert bfs_distance(a) == 1

    def test_dihedral_images_of_identity(self, backend):
        for n in range(3, 10):
            for a in dihedral_class(identity(n)):
                assert circular_length(a) == 0

    def test_zero_only_on_sorted(self, backend):
        for w in itertools.permutations(range(1, 7)):
            a = CircularArrangement(w)
            assert (circular_length(a) == 0) == is_sorted_circular(a)

    def test_exhaustive_n5_n6(self, backend):
        for n in (5, 6):
            table = exhaustive_table(n)
            for w, d in table.items():
                assert circular_length(CircularArrangement(w)) == d

    def test_witness(self):
        rng = random.Random(8)
        for _ in range(200):
            a = random_arrangement(rng, rng.randint(3, 12))
            wit = circular_length_witness(a)
            frame_window = apply_dihedral(a, wit.frame)
            assert wit.length == circular_length(a) == affine.shi_length(wit.lifted)
            assert all(x % a.n == y % a.n for x, y in zip(wit.lifted.images, frame_window.window))
            assert wit.lifted == minimal_lift(frame_window)

    def test_witness_is_first_in_scan_order(self):
        a = EXAMPLE
        wit = circular_length_witness(a)
        for d in dihedral_elements(a.n):
            length = affine.shi_length(minimal_lift(apply_dihedral(a, d)))
            if d == wit.frame:
                assert length == wit.length
                break
            assert length > wit.length

    def test_dihedral_invariance(self):
        rng = random.Random(9)
        for _ in range(100):
            a = random_arrangement(rng, rng.randint(3, 12))
            d = circular_length(a)
            for frame in dihedral_elements(a.n):
                assert circular_length(apply_dihedral(a, frame)) == d

    def test_lipschitz(self):
        rng = random.Random(10)
        for _ in range(200):
            a = random_arrangement(rng, rng.randint(3, 14))
            d = circular_length(a)
            for i in range(1, a.n + 1):
                assert abs(circular_length(apply_generator(a, i)) - d) <= 1

    def test_not_longer_than_cut_linear(self):
        rng = random.Random(12)
        for _ in range(300):
            a = random_arrangement(rng, rng.randint(3, 12))
            assert cut_linear_length(a) >= circular_length(a)
        assert cut_linear_length(EXAMPLE) > circular_length(EXAMPLE)

    def test_large_n_runs(self):
        rng = random.Random(13)
        a = random_arrangement(rng, 80)
        wit = circular_length_witness(a)
        assert 0 < wit.length <= 80 * 79 // 2


class TestPairDistance:
    def test_self(self):
        rng = random.Random(1)
        for _ in range(50):
            a = random_arrangement(rng, rng.randint(3, 10))
            assert pair_distance(a, a) == 0

    def test_example(self):
        assert pair_distance(identity(8), EXAMPLE) == 8
        assert pair_distance(EXAMPLE, identity(8)) == 8

    def test_size_mismatch(self):
        with pytest.raises(InvalidArrangement):
            pair_distance(identity(4), identity(5))

    def test_relative_arrangement_is_transport(self):
        rng = random.Random(2)
        for _ in range(50):
            a, b = random_arrangement(rng, 7), random_arrangement(rng, 7)
            rel = relative_arrangement(a, b)
            assert tuple(a.window[x - 1] for x in rel.window) == b.window

    def test_symmetric_against_bfs(self):
        rng = random.Random(4)
        for _ in range(150):
            n = rng.randint(4, 6)
            a, b = random_arrangement(rng, n), random_arrangement(rng, n)
            d = pair_distance(a, b)
            assert d == pair_distance(b, a) == bfs_distance(relative_arrangement(a, b))


class TestSorting:
    def test_example(self, backend):
        word = sort_by_uncrossings(EXAMPLE)
        assert len(word) == 8
        assert is_sorted_circular(apply_word(EXAMPLE, word))
        # the fixed deterministic output
        assert word == (8, 2, 1, 4, 3, 6, 5, 7)

    def test_identity(self):
        assert sort_by_uncrossings(identity(7)) == ()

    def test_random(self, backend):
        rng = random.Random(6)
        for _ in range(300):
            a = random_arrangement(rng, rng.randint(3, 12))
            word = sort_by_uncrossings(a)
            assert len(word) == circular_length(a)
            assert all(1 <= x <= a.n for x in word)
            assert is_sorted_circular(apply_word(a, word))

    def test_exhaustive_n6_against_bfs(self):
        table = exhaustive_table(6)
        for w, d in table.items():
            a = CircularArrangement(w)
            word = sort_by_uncrossings(a)
            assert len(word) == d
            assert is_sorted_circular(apply_word(a, word))


class TestGeodesics:
    def test_identity(self):
        assert enumerate_geodesics(identity(5), 10) == [()]

    def test_single_swap(self):
        words = enumerate_geodesics(CircularArrangement((2, 1, 3, 4, 5)), 10)
        assert (1,) in words

    def test_properties(self):
        rng = random.Random(7)
        for _ in range(30):
            a = random_arrangement(rng, rng.randint(4, 8))
            d = circular_length(a)
            words = enumerate_geodesics(a, 25)
            assert 1 <= len(words) <= 25
            assert len(set(words)) == len(words)
            assert words == sorted(words)
            for w in words:
                assert len(w) == d
                assert is_sorted_circular(apply_word(a, w))

    def test_contains_uncrossing_word(self):
        words = enumerate_geodesics(EXAMPLE, 100000)
        assert sort_by_uncrossings(EXAMPLE) in words
        assert (8, 6, 4, 2, 7, 5, 3, 1) in words

    def test_matches_brute_force_count(self):
        # count minimal sorting words of [3,5,4,1,2] by enumerating all short words
        a = CircularArrangement((3, 5, 4, 1, 2))
        d = circular_length(a)
        brute = sorted(
            w
            for w in itertools.product(range(1, 6), repeat=d)
            if is_sorted_circular(apply_word(a, w))
        )
        assert enumerate_geodesics(a, 1000) == brute

    def test_bad_limit(self):
        with pytest.raises(ValueError):
            enumerate_geodesics(identity(4), 0)
