"""Polars of finite sets for the coupling x/y, bipolars and separation.

In rational mode polars are infinite, so they are exposed as membership
predicates.  On B^n the helpers at the bottom materialize them.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .errors import DimensionError
from .scalar import EPS, TOP, E, Scalar, invert, is_finite
from .semimodule import Vector, bottom, is_bottom, leq_vec, residuate, scale, vector


@dataclass(frozen=True)
class FiniteSet:
    points: tuple
    dim: int

    @classmethod
    def of(cls, points: Iterable, dim: Optional[int] = None) -> "FiniteSet":
        seen, out = set(), []
        for p in points:
            p = vector(p)
            if dim is None:
                dim = len(p)
            elif len(p) != dim:
                raise DimensionError(f"point of dimension {len(p)} in a {dim}-dimensional set")
            if p not in seen:
                seen.add(p)
                out.append(p)
        if dim is None:
            raise ValueError("dimension required for an empty set")
        return cls(tuple(out), dim)

    @property
    def empty(self) -> bool:
        return not self.points

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)


def _check(G: FiniteSet, y: Vector):
    if len(y) != G.dim:
        raise DimensionError(f"{len(y)}-vector against a {G.dim}-dimensional set")


def support_function(G: FiniteSet, y: Vector) -> Scalar:
    """sigma_G(y) = sup_g g/y; EPS for the empty set."""
    _check(G, y)
    r = EPS
    for g in G.points:
        v = residuate(g, y)
        if r < v:
            r = v
    return r


def polar_membership(y: Vector, G: FiniteSet) -> bool:
    """g/y <= e for every g, i.e. sigma_G(y) <= e.  Upward in y."""
    return support_function(G, y) <= E


def bar_polar_membership(y: Vector, G: FiniteSet) -> bool:
    """y/g <= e for every g (the polar for the reflected coupling).  Downward in y."""
    _check(G, y)
    return all(residuate(y, g) <= E for g in G.points)


@dataclass(frozen=True)
class SeparationWitness:
    y: Vector
    sigma: Scalar
    x_over_y: Scalar

    def valid(self) -> bool:
        return self.sigma <= E < self.x_over_y


@dataclass(frozen=True)
class BipolarResult:
    member: bool
    witness: Optional[SeparationWitness] = None
    empty_set: bool = False

    def __bool__(self):
        return self.member


def in_downward_hull(x: Vector, G: FiniteSet) -> bool:
    _check(G, x)
    return any(leq_vec(x, g) for g in G.points)


def bipolar_membership(x: Vector, G: FiniteSet) -> BipolarResult:
    """Membership of x in the bipolar of G over the rationals.

    For nonempty G the bipolar is the downward hull of G.  Outside the hull
    sigma_G(x) < e, and y = sigma_G(x) (x) x gives sigma_G(y) = e and
    x/y = sigma_G(x)^-1 > e.  When sigma_G(x) is EPS, y = -1 (x) x works
    instead (sigma_G(y) = EPS, x/y = 1).

    The empty set has an empty bipolar: inf X belongs to the polar of the
    empty set and x/inf X = TOP, so inf X itself is the witness for x = inf X.
    """
    _check(G, x)
    if G.empty:
        y = bottom(G.dim) if is_bottom(x) else scale(-1, x)
        return BipolarResult(False, _witness(G, x, y), True)
    if in_downward_hull(x, G):
        return BipolarResult(True)
    s = support_function(G, x)
    y = scale(s, x) if is_finite(s) else scale(-1, x)
    return BipolarResult(False, _witness(G, x, y))


def _witness(G, x, y) -> SeparationWitness:
    w = SeparationWitness(y, support_function(G, y), residuate(x, y))
    if not w.valid():
        raise AssertionError(f"separation witness {w} is invalid")
    return w


def is_upward(member: Callable[[Vector], bool], points: Sequence[Vector]) -> bool:
    inside = [p for p in points if member(p)]
    return all(member(q) for p in inside for q in points if leq_vec(p, q))


def is_downward(member: Callable[[Vector], bool], points: Sequence[Vector]) -> bool:
    inside = [p for p in points if member(p)]
    return all(member(q) for p in inside for q in points if leq_vec(q, p))


# Finite-domain polarity for an arbitrary coupling pi(x, y) -> K-bar.

def pi_polar(G: Iterable[Vector], pi: Callable, domain: Sequence[Vector]) -> frozenset:
    """{y : pi(g, y) <= e for all g in G}."""
    G = list(G)
    return frozenset(y for y in domain if all(pi(g, y) <= E for g in G))


def reflect(pi: Callable) -> Callable:
    return lambda x, y: pi(y, x)


def dual_polarity(P: Iterable[Vector], pi: Callable, domain: Sequence[Vector]) -> frozenset:
    """{x : P is contained in the polar of {x}}, built from singleton polars."""
    P = frozenset(P)
    return frozenset(x for x in domain if P <= pi_polar([x], pi, domain))


def check_polarity_dual(P: Iterable[Vector], pi: Callable, domain: Sequence[Vector]) -> bool:
    """The dual of the pi-polarity equals the polarity of the reflected coupling."""
    P = list(P)
    return dual_polarity(P, pi, domain) == pi_polar(P, reflect(pi), domain)


def phi(x: Vector, y: Vector) -> Scalar:
    return residuate(x, y)


def bipolar_set(G: Iterable[Vector], domain: Sequence[Vector], pi: Callable = phi) -> frozenset:
    return dual_polarity(pi_polar(G, pi, domain), pi, domain)
