"""Support sets of topical functions and the phi-subdifferential.

The elementary functions are x -> x/y (y != inf X) and
x -> inf{x/y, d}.  Membership is decided by closed forms that involve only
f(y), f(x0) and one residuation; the "for all x" defining forms are also
evaluated on the probes and must give the same answer.
"""
from __future__ import annotations

from typing import Optional

from .errors import InternalConsistencyError, PreconditionError
from .functions import TOPICAL, Function, ProbeSet, as_probes, check_topical, s_yd
from .scalar import EPS, TOP, E, Scalar, invert, is_finite, otimes
from .semimodule import Vector, is_bottom, residuate, scale


def _require_topical(f: Function, probes: Optional[ProbeSet]):
    if f.kind == TOPICAL:
        return
    if probes is not None and probes.exhaustive:
        if getattr(f, "_topical_on", None) == probes:
            return
        if check_topical(f, probes).passed:
            f._topical_on = probes
            return
    raise PreconditionError("f must be topical (by construction or on an exhaustive domain)")


def _residuals(f: Function, y: Vector, p: ProbeSet, extra=()) -> list:
    """(x/y, f(x)) for every probe x and every extra point.

    The probe part is cached on f: repeated queries differ only in x0.
    """
    cache = f.__dict__.setdefault("_residuals", {})
    key = (y, p)
    r = cache.get(key)
    if r is None:
        r = cache[key] = [(residuate(x, y), f(x)) for x in p.points]
    return r + [(residuate(x, y), f(x)) for x in extra if x not in p.members]


def _require_y(y: Vector):
    if is_bottom(y):
        raise PreconditionError("y = inf X is outside the domain of the elementary functions")


def _require_x0(f: Function, x0: Vector) -> Scalar:
    v = f(x0)
    if not is_finite(v):
        raise PreconditionError(f"f(x0) = {v!r} must lie in K without EPS")
    return v


def supp_membership(f: Function, y: Vector, probes=()) -> bool:
    """x/y <= f(x) for every x.

    For topical f this is e <= f(y), the value returned; the probe check
    (which always includes x = y) must agree.
    """
    _require_y(y)
    p = as_probes(probes, f.dim)
    by_probe = all(r <= fx for r, fx in _residuals(f, y, p, (y,)))
    if f.kind != TOPICAL:
        return by_probe
    closed = E <= f(y)
    if closed != by_probe:
        raise InternalConsistencyError(f"support membership forms disagree at y={y}")
    return closed


def canonical_witness(f: Function, x: Vector) -> Vector:
    """f(x)^-1 (x) x, the support point that attains f at x."""
    return scale(invert(_require_x0(f, x)), x)


def supp_reconstruct(f: Function, x: Vector, probes=()) -> Scalar:
    """max of x/y over the support points y among the probes.

    The canonical witness is added when f(x) is finite, which makes the
    maximum equal to f(x).  Over the rationals, when f(x) is TOP the points
    lam^-1 (x) x are support points for every finite lam, so the
    (unattained) sup is TOP.  On an exhaustive Boolean domain the plain
    maximum is returned, and it is at most e.
    """
    p = as_probes(probes, f.dim)
    _require_topical(f, p)
    fx = f(x)
    members = _support_points(f, p)
    if is_finite(fx):
        members = members + [scale(invert(fx), x)]
    best = EPS
    for y in members:
        v = residuate(x, y)
        if best < v:
            best = v
    if fx is TOP and not is_bottom(x) and not p.exhaustive:
        return TOP
    return best


def _support_points(f: Function, p: ProbeSet) -> list:
    """Probes y != inf X with e <= f(y), cached on f."""
    cache = f.__dict__.setdefault("_support_points", {})
    r = cache.get(p)
    if r is None:
        r = cache[p] = [y for y in p.points if not is_bottom(y) and E <= f(y)]
    return r


def supp_at_point_X(f: Function, x0: Vector, y: Vector, probes=()) -> bool:
    """y != inf X with x/y <= f(x) for all x and x0/y = f(x0).

    Decided by f(y) = e and x0/y >= f(x0); the defining form is checked on
    the probes plus x0 and y, and must agree.
    """
    p = as_probes(probes, f.dim)
    _require_topical(f, p)
    fx0 = _require_x0(f, x0)
    _require_y(y)
    r0 = residuate(x0, y)
    closed = f(y) == E and r0 >= fx0
    defining = r0 == fx0 and all(r <= fx for r, fx in _residuals(f, y, p, (x0, y)))
    if closed != defining:
        raise InternalConsistencyError(f"support-at-point forms disagree at y={y}")
    return closed


def supp_at_point_XK(f: Function, x0: Vector, y: Vector, d: Scalar, probes=()) -> bool:
    """(y, d) with inf{x/y, d} <= f(x) for all x and equality at x0.

    Decided by f(y) = e and inf{x0/y, d} >= f(x0); d must lie in K.
    """
    p = as_probes(probes, f.dim)
    _require_topical(f, p)
    fx0 = _require_x0(f, x0)
    _require_y(y)
    if d is TOP:
        raise PreconditionError("d must lie in K, not be TOP")
    s0 = s_yd(y, d, x0)
    closed = f(y) == E and s0 >= fx0
    extra = (x0, y) + ((scale(d, y),) if d is not EPS else ())
    defining = s0 == fx0 and all(r <= fx or d <= fx for r, fx in _residuals(f, y, p, extra))
    if closed != defining:
        raise InternalConsistencyError(f"support-at-point forms disagree at (y, d)=({y}, {d})")
    return closed


def phi_subdiff_membership(f: Function, x0: Vector, y0: Vector, probes=()) -> bool:
    """(x/y0) (x) (x0/y0)^-1 (x) f(x0) <= f(x) for every probe x."""
    fx0 = f(x0)
    if fx0 is TOP:
        raise PreconditionError("f(x0) must lie in K")
    p = as_probes(probes, f.dim).with_points(x0)
    mid = invert(residuate(x0, y0))
    return all(otimes(otimes(residuate(x, y0), mid), fx0) <= f(x) for x in p.points)
