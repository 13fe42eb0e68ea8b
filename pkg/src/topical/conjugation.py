"""Fenchel-Moreau conjugates for the couplings x/y and inf{x/y, d}.

Every sup or inf runs over a probe set.  When the probes are the whole
Boolean domain the result is exact.  In rational mode a result is exact
only when a closed form is known for the function (topical, anti-topical or
constant) or when the probe value already sits at the extreme of K-bar;
the computed value is then required to coincide with the closed form.
Otherwise a sup is reported as a lower bound and an inf as an upper bound.
"""
from __future__ import annotations

import enum
import functools
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import InternalConsistencyError
from .functions import (
    ANTI_TOPICAL, TOPICAL, Const, Function, Pointwise, ProbeSet, Table, as_probes,
    check_anti_topical, check_topical, s_yd, sbar_yd,
)
from .scalar import EPS, TOP, Scalar, invert, is_finite, otimes, otimes_dot, scalar
from .semimodule import Vector, bottom, is_bottom, residuate, scale

EXACT = "exact"
LOWER_BOUND = "lower_bound"
UPPER_BOUND = "upper_bound"


class CouplingKind(enum.Enum):
    PHI = "phi"
    PSI = "psi"
    PHI_REFLECTED = "phi_reflected"


def coupling(kind: CouplingKind, x: Vector, y: Vector, d: Scalar = TOP) -> Scalar:
    if kind is CouplingKind.PHI:
        return residuate(x, y)
    if kind is CouplingKind.PSI:
        return s_yd(y, d, x)
    return residuate(y, x)


@dataclass(frozen=True)
class Estimate:
    value: Scalar
    exactness: str
    witness: Optional[Vector] = None

    @property
    def exact(self) -> bool:
        return self.exactness == EXACT


def _sup(points, term: Callable):
    best, arg = EPS, None
    for x in points:
        v = term(x)
        if arg is None or best < v:
            best, arg = v, x
    return best, arg


def _inf(points, term: Callable):
    best, arg = TOP, None
    for x in points:
        v = term(x)
        if arg is None or v < best:
            best, arg = v, x
    return best, arg


def _settle(value, witness, p: ProbeSet, closed, is_sup: bool, what: str) -> Estimate:
    if closed is not None and value != closed:
        raise InternalConsistencyError(f"{what}: probe value {value!r} differs from closed form {closed!r}")
    if p.exhaustive or closed is not None:
        return Estimate(value, EXACT, witness)
    # a sup that already reached TOP (an inf that reached EPS) cannot move
    if value is (TOP if is_sup else EPS):
        return Estimate(value, EXACT, witness)
    return Estimate(value, LOWER_BOUND if is_sup else UPPER_BOUND, witness)


def _is_const(f, c) -> bool:
    return isinstance(f, Const) and f.c is c


def conjugate_phi(f: Function, y: Vector, probes) -> Estimate:
    """sup_x f(x)^-1 (x) x/y.

    Closed forms: f(y)^-1 for topical f; EPS for f identically TOP.
    y is added to the probes, which is where the sup is attained for
    topical f.
    """
    p = as_probes(probes, f.dim).with_points(y)
    value, wit = _sup(p.points, lambda x: otimes(invert(f(x)), residuate(x, y)))
    closed = None
    if f.kind == TOPICAL:
        closed = invert(f(y))
    elif _is_const(f, TOP):
        closed = EPS
    return _settle(value, wit, p, closed, True, "conjugate_phi")


def conjugate_psi(f: Function, y: Vector, d: Scalar, probes) -> Estimate:
    """sup_x f(x)^-1 (x) inf{x/y, d}."""
    d = scalar(d)
    if d is EPS:
        return Estimate(EPS, EXACT, None)
    if d is TOP:
        return conjugate_phi(f, y, probes)
    p = as_probes(probes, f.dim).with_points(y, scale(d, y))
    value, wit = _sup(p.points, lambda x: otimes(invert(f(x)), s_yd(y, d, x)))
    closed = None
    if f.kind == TOPICAL:
        closed = invert(f(y))
    elif _is_const(f, TOP):
        closed = EPS
    return _settle(value, wit, p, closed, True, "conjugate_psi")


def lower_conjugate_phi(f: Function, y: Vector, probes) -> Estimate:
    """inf_x f(x)^-1 (.) (x/y)^-1.

    Closed forms: f(y)^-1 for anti-topical f; TOP for f identically EPS.
    """
    p = as_probes(probes, f.dim).with_points(y)
    value, wit = _inf(p.points, lambda x: otimes_dot(invert(f(x)), invert(residuate(x, y))))
    closed = None
    if f.kind == ANTI_TOPICAL:
        closed = invert(f(y))
    elif _is_const(f, EPS):
        closed = TOP
    return _settle(value, wit, p, closed, False, "lower_conjugate_phi")


def lower_conjugate_psi(f: Function, y: Vector, d: Scalar, probes) -> Estimate:
    """inf_x f(x)^-1 (.) sup{(x/y)^-1, d}."""
    d = scalar(d)
    if d is TOP:
        return Estimate(TOP, EXACT, None)
    if d is EPS:
        return lower_conjugate_phi(f, y, probes)
    p = as_probes(probes, f.dim).with_points(y, scale(invert(d), y))
    value, wit = _inf(p.points, lambda x: otimes_dot(invert(f(x)), sbar_yd(y, d, x)))
    closed = None
    if f.kind == ANTI_TOPICAL:
        closed = invert(f(y))
    elif _is_const(f, EPS):
        closed = TOP
    return _settle(value, wit, p, closed, False, "lower_conjugate_psi")


def conjugate_reflected(h: Function, x: Vector, probes) -> Estimate:
    """sup_y h(y)^-1 (x) x/y: the conjugate for the reflected coupling,
    which is also the dual of the phi-conjugation evaluated at x.

    Whenever h(inf X) is not TOP the term at y = inf X is already TOP.
    """
    p = as_probes(probes, h.dim).with_points(x)
    value, wit = _sup(p.points, lambda y: otimes(invert(h(y)), residuate(x, y)))
    closed = EPS if _is_const(h, TOP) else None
    return _settle(value, wit, p, closed, True, "conjugate_reflected")


def conjugate_phi2(f: Function, y: Vector, probes) -> Scalar:
    """sup_x f(x)^-1 (.) x/y, the variant with the upper product.

    Kept only to show why it is unsuitable: it sends f identically TOP to
    TOP at inf X instead of EPS.
    """
    p = as_probes(probes, f.dim).with_points(y)
    return _sup(p.points, lambda x: otimes_dot(invert(f(x)), residuate(x, y)))[0]


@functools.lru_cache(maxsize=256)
def _phi_conjugate_fn(f: Function, p: ProbeSet) -> Function:
    return Pointwise(lambda y: conjugate_phi(f, y, p).value, f.dim)


def conjugate_fn(f: Function, probes) -> Function:
    """y -> conjugate_phi(f, y, probes) as a (memoized) function."""
    return _phi_conjugate_fn(f, as_probes(probes, f.dim))


def biconjugate_phi(f: Function, x: Vector, probes) -> Estimate:
    """The reflected conjugate of the phi-conjugate of f, at x.

    It never exceeds f(x); it equals f(x) for topical f and for f
    identically TOP.  Without a closed form or an exhaustive domain, the
    certified statement is only the upper bound f(x).
    """
    p = as_probes(probes, f.dim).with_points(x)
    h = _phi_conjugate_fn(f, p)
    closed = None
    if f.kind == TOPICAL:
        closed = f(x)
    elif _is_const(f, TOP):
        closed = TOP
    if not p.exhaustive and closed is None:
        return Estimate(f(x), UPPER_BOUND, None)
    value, wit = _sup(p.points, lambda y: otimes(invert(h(y)), residuate(x, y)))
    if value > f(x):
        raise InternalConsistencyError(f"biconjugate {value!r} exceeds f(x) = {f(x)!r}")
    return _settle(value, wit, p, closed, True, "biconjugate_phi")


def tabulate_conjugate(f: Function, domain: ProbeSet, lower: bool = False) -> Table:
    """The phi-conjugate (or lower conjugate) of f over a whole finite domain."""
    op = lower_conjugate_phi if lower else conjugate_phi
    return Table.tabulate(lambda y: op(f, y, domain).value, domain.points)


@dataclass(frozen=True)
class BiconjugateReport:
    topical: bool
    anti_topical: bool
    bic: bool
    antibic: bool
    topical_iff_holds: bool
    anti_topical_iff_holds: bool


def check_tantibiconj(f: Function, domain: ProbeSet) -> BiconjugateReport:
    """Fixed-point identities of the upper/lower conjugate round trips.

    bic: the lower conjugate of the conjugate gives back f.
    antibic: the conjugate of the lower conjugate gives back f.
    The iff flags compare them with topical (and f not identically TOP)
    and with anti-topical respectively.
    """
    if not domain.exhaustive:
        raise ValueError("fixed-point identities need an exhaustive domain")
    pts = domain.points
    c = tabulate_conjugate(f, domain)
    bic = all(lower_conjugate_phi(c, x, domain).value == f(x) for x in pts)
    th = tabulate_conjugate(f, domain, lower=True)
    antibic = all(conjugate_phi(th, x, domain).value == f(x) for x in pts)
    top = check_topical(f, domain).passed
    anti = check_anti_topical(f, domain).passed
    not_top = any(f(x) is not TOP for x in pts)
    return BiconjugateReport(top, anti, bic, antibic, top == (not_top and bic), anti == antibic)
