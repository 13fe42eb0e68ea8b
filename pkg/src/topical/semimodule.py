"""The free semimodule K^n: vectors, join, scalar action and residuation.

Vectors are plain tuples of base values (EPS or a rational, never TOP), so
they are immutable and hashable.  Residuation x/y is the only operation that
can produce TOP.
"""
from __future__ import annotations

import itertools
import random
from typing import Iterable, Tuple

from .errors import DimensionError
from .scalar import EPS, TOP, E, Scalar, finite, invert, otimes, random_rational

Vector = Tuple[Scalar, ...]

MAX_DIM = 8


def vector(coords: Iterable) -> Vector:
    """Build a vector, coercing numbers to exact rationals.  TOP is refused."""
    out = []
    for c in coords:
        if c is EPS:
            out.append(EPS)
        elif c is TOP:
            raise ValueError("vector coordinates must lie in K, not be TOP")
        else:
            out.append(finite(c))
    if not 1 <= len(out) <= MAX_DIM:
        raise DimensionError(f"dimension {len(out)} outside 1..{MAX_DIM}")
    return tuple(out)


def bottom(n: int) -> Vector:
    """inf X, the all-EPS vector."""
    return (EPS,) * n


def is_bottom(x: Vector) -> bool:
    return all(c is EPS for c in x)


def same_dim(x: Vector, y: Vector) -> None:
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")


def join(x: Vector, y: Vector) -> Vector:
    same_dim(x, y)
    return tuple(a if b <= a else b for a, b in zip(x, y))


def leq_vec(x: Vector, y: Vector) -> bool:
    same_dim(x, y)
    return all(a <= b for a, b in zip(x, y))


def scale(lam: Scalar, x: Vector) -> Vector:
    if lam is TOP:
        raise ValueError("TOP times a vector is undefined")
    return tuple(otimes(lam, c) for c in x)


def residuate(x: Vector, y: Vector) -> Scalar:
    """x/y = sup{lam in K : lam*y <= x}.

    TOP when y is inf X; otherwise the minimum of x_i - y_i over the
    coordinates with y_i finite, which is EPS as soon as one such x_i is EPS.
    """
    if len(x) != len(y):
        raise DimensionError(f"dimension mismatch: {len(x)} vs {len(y)}")
    r = TOP
    for a, b in zip(x, y):
        if b is EPS:
            continue
        if a is EPS:
            return EPS
        d = a - b
        if r is TOP or d < r:
            r = d
    return r


def min_plus_coupling(x: Vector, y: Vector) -> Scalar:
    """pi(x, y) = min_i x_i (x) y_i; EPS if any product is EPS."""
    same_dim(x, y)
    r = TOP
    for a, b in zip(x, y):
        p = otimes(a, b)
        if p < r:
            r = p
    return r


def invert_coords(y: Vector) -> tuple:
    """Coordinatewise inverse; EPS coordinates become TOP (not a vector of X)."""
    return tuple(invert(c) for c in y)


def boolean_points(n: int) -> list:
    """All of B^n in a fixed order, inf X first."""
    return [tuple(p) for p in itertools.product((EPS, E), repeat=n)]


def random_vector(rng: random.Random, n: int, p_eps: float = 0.2, nonbottom: bool = False) -> Vector:
    while True:
        v = tuple(EPS if rng.random() < p_eps else random_rational(rng) for _ in range(n))
        if not (nonbottom and is_bottom(v)):
            return v
