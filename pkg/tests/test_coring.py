"""Tests for graded cohomology ring construction and validation."""

import random

import pytest

from lagcut.coring import (
    CohomologyRing,
    InvalidRingError,
    make_complex_projective,
    make_custom,
    make_product_spheres,
    make_sphere,
    make_torus,
    tensor,
)
from oracles import brute_convolve, pascal_row


def test_sphere_betti():
    ring = make_sphere(7)
    assert ring.dim == 7
    assert ring.betti == (1, 0, 0, 0, 0, 0, 0, 1)
    assert ring.generator_degrees == (7,)
    assert ring.total_dim == 2
    assert ring.label == "sphere:d=7"


def test_circle_is_a_valid_sphere():
    ring = make_sphere(1)
    assert ring.betti == (1, 1)
    assert ring.total_dim == 2


def test_torus_betti_matches_pascal():
    for d in range(1, 13):
        ring = make_torus(d)
        assert list(ring.betti) == pascal_row(d)
        assert ring.total_dim == 2**d
        assert ring.generator_degrees == (1,) * d


def test_torus_three_frozen():
    assert make_torus(3).betti == (1, 3, 3, 1)


def test_product_spheres_distinct_factors():
    ring = make_product_spheres(2, 4)
    assert ring.dim == 6
    assert ring.betti == (1, 0, 1, 0, 1, 0, 1)
    assert ring.generator_degrees == (2, 4)


def test_product_spheres_equal_factors():
    ring = make_product_spheres(2, 2)
    assert ring.betti == (1, 0, 2, 0, 1)
    assert ring.total_dim == 4


def test_product_spheres_rejects_bad_order():
    with pytest.raises(InvalidRingError):
        make_product_spheres(3, 2)
    with pytest.raises(InvalidRingError):
        make_product_spheres(0, 2)


def test_complex_projective():
    ring = make_complex_projective(3)
    assert ring.dim == 6
    assert ring.betti == (1, 0, 1, 0, 1, 0, 1)
    # a single degree-2 generator reaches all even degrees through its powers
    assert ring.generator_degrees == (2,)


def test_custom_point_ring():
    ring = make_custom([1], [])
    assert ring.dim == 0
    assert ring.total_dim == 1


def test_custom_rejects_disconnected():
    with pytest.raises(InvalidRingError):
        make_custom([2, 0, 2], [2])


def test_custom_rejects_duality_failure():
    with pytest.raises(InvalidRingError):
        make_custom([1, 2, 0], [1])


def test_custom_rejects_negative_betti():
    with pytest.raises(InvalidRingError):
        make_custom([1, -1, 1], [1])


def test_custom_rejects_generator_out_of_range():
    with pytest.raises(InvalidRingError):
        make_custom([1, 1], [2])
    with pytest.raises(InvalidRingError):
        make_custom([1], [1])
    with pytest.raises(InvalidRingError):
        make_custom([1, 1], [0])


def test_custom_rejects_ungenerated_degree():
    # degree 1 carries cohomology but no sum of degree-2 generators hits it
    with pytest.raises(InvalidRingError):
        make_custom([1, 1, 1], [2])


def test_custom_accepts_generated_ring():
    ring = make_custom([1, 0, 2, 0, 1], [2, 2])
    assert ring.dim == 4


def test_betti_length_must_match_dim():
    with pytest.raises(InvalidRingError):
        CohomologyRing("bad", 2, (1, 1), (1,))


def test_poincare_duality_all_constructors():
    rings = (
        [make_sphere(d) for d in range(1, 16)]
        + [make_torus(d) for d in range(1, 11)]
        + [make_product_spheres(l, m) for m in range(1, 9) for l in range(1, m + 1)]
        + [make_complex_projective(n) for n in range(1, 9)]
    )
    for ring in rings:
        for k in range(ring.dim + 1):
            assert ring.betti[k] == ring.betti[ring.dim - k], ring.label


def test_tensor_betti_is_convolution():
    pairs = [
        (make_sphere(3), make_sphere(5)),
        (make_torus(2), make_complex_projective(2)),
        (make_product_spheres(1, 2), make_torus(3)),
    ]
    for a, b in pairs:
        prod = tensor(a, b)
        assert list(prod.betti) == brute_convolve(a.betti, b.betti)
        assert prod.dim == a.dim + b.dim
        assert prod.label == f"{a.label}*{b.label}"


def test_tensor_total_dim_multiplicative():
    rng = random.Random(11)
    pool = [
        make_sphere(2),
        make_sphere(5),
        make_torus(3),
        make_torus(4),
        make_product_spheres(2, 3),
        make_complex_projective(2),
    ]
    for _ in range(50):
        a, b = rng.choice(pool), rng.choice(pool)
        assert tensor(a, b).total_dim == a.total_dim * b.total_dim


def test_tensor_product_of_circles_is_torus():
    circle = make_sphere(1)
    prod = tensor(tensor(circle, circle), circle)
    assert prod.betti == make_torus(3).betti
