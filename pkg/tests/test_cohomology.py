import random

import pytest

from toricvol.cohomology import (
    cech_oracle,
    cech_ranks,
    cech_ranks_full,
    euler_char,
    graded_piece_dim,
    h_all,
    weak_ray_set,
)
from toricvol.divisor import divisor, ray_divisor, scale
from toricvol.errors import NotCompleteError
from toricvol.fixtures import cube_fan, f1, p1, p1xp1, p2, quadrant_fan
from toricvol.regions import bounded_subsets, lattice_points, region


def test_weak_ray_set():
    fan = p2()
    d = ray_divisor(fan, 0)
    assert weak_ray_set(fan, d, (0, 0)) == frozenset({0, 1, 2})
    assert weak_ray_set(fan, scale(d, -3), (2, -1)) == frozenset()
    assert weak_ray_set(fan, d, (5, 5)) == frozenset({0, 1})


def test_graded_piece_examples():
    fan = p2()
    d = ray_divisor(fan, 0)
    assert graded_piece_dim(fan, d, (0, 0), 0) == 1
    assert graded_piece_dim(fan, scale(d, -3), (2, -1), 2) == 1
    for i in range(3):
        assert graded_piece_dim(fan, d, (5, 5), i) == 0


def test_graded_piece_on_noncomplete_fan():
    fan = quadrant_fan()
    d = divisor([0, 0])
    # Graded pieces stay available; the subfan here has a contractible
    # sphere section, so every local rank vanishes.
    assert weak_ray_set(fan, d, (1, 1)) == frozenset({0, 1})
    for i in range(3):
        assert graded_piece_dim(fan, d, (1, 1), i) == 0
    with pytest.raises(NotCompleteError):
        h_all(fan, d)
    with pytest.raises(NotCompleteError):
        cech_oracle(fan, d)


def test_h_all_examples():
    fan = p2()
    assert h_all(fan, scale(ray_divisor(fan, 0), 2)) == (6, 0, 0)
    assert h_all(fan, scale(ray_divisor(fan, 0), -3)) == (0, 0, 1)
    box = p1xp1()
    d = divisor([2, 0, -3, 0])
    assert h_all(box, d) == (0, 6, 0)


def test_h0_equals_section_polytope_count():
    rng = random.Random(4)
    for fixture in (p2, p1xp1, f1):
        fan = fixture()
        k = len(fan.rays)
        for _ in range(20):
            d = divisor([rng.randint(-4, 4) for _ in range(k)])
            full = frozenset(range(k))
            count = len(lattice_points(region(fan, d, full)))
            assert h_all(fan, d)[0] == count


def test_euler_examples():
    fan = p2()
    assert euler_char(fan, scale(ray_divisor(fan, 0), 2)) == 6
    assert euler_char(fan, scale(ray_divisor(fan, 0), -3)) == 1
    line = p1()
    assert euler_char(line, scale(ray_divisor(line, 0), -2)) == -1


def test_euler_alternating_sum_random():
    rng = random.Random(8)
    for fixture in (p2, p1xp1, f1):
        fan = fixture()
        k = len(fan.rays)
        for _ in range(15):
            d = divisor([rng.randint(-5, 5) for _ in range(k)])
            hs = h_all(fan, d)
            assert euler_char(fan, d) == sum((-1) ** i * h for i, h in enumerate(hs))


def test_cech_oracle_examples():
    fan = p2()
    assert cech_oracle(fan, scale(ray_divisor(fan, 0), 2)) == (6, 0, 0)
    box = p1xp1()
    assert cech_oracle(box, divisor([2, 0, -3, 0])) == (0, 6, 0)
    for fixture in (p1, p2, p1xp1, f1):
        ff = fixture()
        zero = divisor([0] * len(ff.rays))
        assert cech_oracle(ff, zero) == (1,) + (0,) * ff.dim
        assert h_all(ff, zero) == (1,) + (0,) * ff.dim


def test_oracle_equivalence_random_2d():
    rng = random.Random(12)
    for fixture in (p1, p2, p1xp1, f1):
        fan = fixture()
        k = len(fan.rays)
        for _ in range(20):
            d = divisor([rng.randint(-5, 5) for _ in range(k)])
            assert h_all(fan, d) == cech_oracle(fan, d), d


def test_oracle_on_nonsimplicial_complete_fan():
    fan = cube_fan()
    rng = random.Random(21)
    for _ in range(3):
        d = divisor([rng.randint(-2, 2) for _ in range(8)])
        assert h_all(fan, d) == cech_oracle(fan, d), d


def test_full_vs_alternating_cech():
    fan = p2()
    rng = random.Random(31)
    subsets = list(bounded_subsets(fan))
    for _ in range(5):
        d = divisor([rng.randint(-4, 4) for _ in range(3)])
        for subset in subsets:
            assert cech_ranks(fan, subset) == cech_ranks_full(fan, subset)
        assert h_all(fan, d) == cech_oracle(fan, d)
