import itertools
import random

import pytest
from gmpy2 import mpq
from hypothesis import given, settings, strategies as st

from topical.errors import DimensionError
from topical.functions import Pointwise, boolean_domain, check_anti_topical, probe_policy
from topical.oracle import enumerate_subsets
from topical.polars import (
    FiniteSet, bar_polar_membership, bipolar_membership, bipolar_set, check_polarity_dual, dual_polarity,
    in_downward_hull, is_downward, is_upward, pi_polar, polar_membership, support_function,
)
from topical.scalar import EPS, TOP, E, random_rational
from topical.semimodule import bottom, leq_vec, min_plus_coupling, random_vector, residuate, scale, vector


def v(*cs):
    return vector(cs)


def random_set(rng, n=None, size=None):
    n = n or rng.randint(1, 3)
    size = rng.randint(1, 5) if size is None else size
    return FiniteSet.of([random_vector(rng, n) for _ in range(size)], n)


sets = st.integers(0, 2**32 - 1).map(lambda s: random_set(random.Random(s)))


def test_support_function_examples():
    G = FiniteSet.of([v(0, 0)])
    assert support_function(G, bottom(2)) is TOP
    assert support_function(G, v(1, 1)) == -1
    assert support_function(FiniteSet((), 2), v(1, 1)) is EPS


def test_polar_examples():
    G = FiniteSet.of([v(0, 0)])
    assert polar_membership(v(0, 0), G)
    assert not polar_membership(bottom(2), G)
    assert not polar_membership(v(0, 0), FiniteSet.of([v(1, 1)]))
    assert bar_polar_membership(bottom(2), FiniteSet.of([v(0, 0), v(EPS, 1)]))
    assert not bar_polar_membership(v(0, 0), FiniteSet.of([bottom(2)]))


def test_bipolar_examples():
    G = FiniteSet.of([v(0, 0)])
    r = bipolar_membership(v(1, 0), G)
    assert not r.member
    assert r.witness.y == v(0, -1)
    assert r.witness.sigma == 0 and r.witness.x_over_y == 1
    assert bipolar_membership(bottom(2), G).member
    assert bipolar_membership(v(-1, EPS), G).member


def test_bipolar_of_empty_set_is_empty():
    G = FiniteSet((), 2)
    for x in (bottom(2), v(0, 0), v(EPS, 3)):
        r = bipolar_membership(x, G)
        assert not r.member and r.empty_set and r.witness.valid()
    assert bipolar_set([], boolean_domain(2).points) == frozenset()


def test_witness_when_support_is_eps():
    # G lives on the first coordinate only, x on the second
    G = FiniteSet.of([v(0, EPS)])
    x = v(EPS, 0)
    assert support_function(G, x) is EPS
    r = bipolar_membership(x, G)
    assert not r.member and r.witness.valid() and r.witness.y == v(EPS, -1)


def test_finite_set_validation():
    with pytest.raises(DimensionError):
        FiniteSet.of([v(0), v(0, 0)])
    with pytest.raises(ValueError):
        FiniteSet.of([])
    assert len(FiniteSet.of([v(0), v(0)])) == 1
    with pytest.raises(DimensionError):
        support_function(FiniteSet.of([v(0)]), v(0, 0))


@settings(max_examples=100)
@given(sets, st.integers(0, 2**32 - 1))
def test_bipolar_is_downward_hull(G, seed):
    rng = random.Random(seed)
    probes = [random_vector(rng, G.dim) for _ in range(20)] + [bottom(G.dim)]
    probes += [scale(random_rational(rng), g) for g in G.points]
    candidates = [random_vector(rng, G.dim, nonbottom=True) for _ in range(30)]
    for x in probes:
        r = bipolar_membership(x, G)
        assert r.member == in_downward_hull(x, G)
        if r.member:
            # no y separates a hull member
            for y in candidates + [scale(mpq(k), x) for k in range(-3, 4)]:
                if not all(c is EPS for c in y):
                    assert not (support_function(G, y) <= E < residuate(x, y))
        else:
            w = r.witness
            assert w.sigma == support_function(G, w.y) and w.x_over_y == residuate(x, w.y)
            assert w.sigma <= E < w.x_over_y


@given(sets)
def test_support_function_is_anti_topical(G):
    sigma = Pointwise(lambda y: support_function(G, y), G.dim)
    p = probe_policy(G.dim, [g for g in G.points if any(c is not EPS for c in g)], [mpq(-1), mpq(2)],
                     [random_vector(random.Random(len(G)), G.dim) for _ in range(8)])
    assert check_anti_topical(sigma, p)


@given(sets, sets)
def test_polarity_reverses_inclusion(G, H):
    if G.dim != H.dim:
        return
    U = FiniteSet.of(G.points + H.points, G.dim)
    rng = random.Random(len(U))
    for y in [random_vector(rng, G.dim) for _ in range(20)]:
        if polar_membership(y, U):
            assert polar_membership(y, G) and polar_membership(y, H)
        assert polar_membership(y, U) == all(polar_membership(y, FiniteSet.of([g])) for g in U.points)


def test_boolean_polars_up_and_down():
    pts = boolean_domain(2).points
    for S in enumerate_subsets(2):
        G = FiniteSet(tuple(sorted(S, key=pts.index)), 2)
        assert is_upward(lambda y: polar_membership(y, G), pts)
        assert is_downward(lambda y: bar_polar_membership(y, G), pts)
    assert is_downward(lambda y: y == bottom(2), pts)


def test_polarity_duals_exhaustive():
    pts = boolean_domain(2).points
    for P in enumerate_subsets(2):
        assert check_polarity_dual(P, residuate, pts)
    assert dual_polarity([], residuate, pts) == frozenset(pts)


def test_symmetric_coupling_is_self_dual():
    rng = random.Random(4)
    grid = list({tuple(mpq(rng.randint(-2, 2)) for _ in range(2)) for _ in range(30)})
    for _ in range(30):
        P = rng.sample(grid, rng.randint(0, 4))
        assert dual_polarity(P, min_plus_coupling, grid) == pi_polar(P, min_plus_coupling, grid)


def test_boolean_bipolar_is_whole_space_for_nonempty_sets():
    # for y != inf X, x/y <= e on B^n, so no point can be separated
    pts = boolean_domain(2).points
    for S in enumerate_subsets(2):
        expected = frozenset(pts) if S else frozenset()
        assert bipolar_set(S, pts) == expected
