"""Functions X -> K-bar and the topical / anti-topical checkers.

A function handle is callable on vectors and memoizes its values (handles
are immutable, so the cache never goes stale).  ``kind`` records what is
known by construction: ``"topical"``, ``"anti_topical"`` or ``None``.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence

from .errors import DimensionError, InternalConsistencyError
from .scalar import (
    EPS, TOP, E, Scalar, Semifield, invert, is_finite, otimes, otimes_dot,
    residual_scalar, scalar,
)
from .semimodule import Vector, bottom, boolean_points, is_bottom, leq_vec, residuate, scale, vector

TOPICAL = "topical"
ANTI_TOPICAL = "anti_topical"


class Function:
    kind: Optional[str] = None

    def __init__(self, dim: int):
        self.dim = dim
        self._memo = {}

    def __call__(self, x: Vector) -> Scalar:
        v = self._memo.get(x)
        if v is None:
            if len(x) != self.dim:
                raise DimensionError(f"function of dimension {self.dim} applied to a {len(x)}-vector")
            v = self._memo[x] = self._eval(x)
        return v

    def _eval(self, x):
        raise NotImplementedError


class FinGen(Function):
    """f(x) = max_j c_j (x) x/y_j, a finitely generated topical function.

    Generator points must differ from inf X and coefficients from EPS;
    a coefficient may be TOP.  No generators means f is identically EPS.
    """
    kind = TOPICAL

    def __init__(self, generators: Iterable, dim: Optional[int] = None):
        gens = []
        for y, c in generators:
            y = vector(y)
            c = scalar(c)
            if is_bottom(y):
                raise ValueError("generator point must not be inf X")
            if c is EPS:
                raise ValueError("generator coefficient must not be EPS")
            if dim is None:
                dim = len(y)
            elif len(y) != dim:
                raise DimensionError(f"generator of dimension {len(y)} in a {dim}-dimensional function")
            gens.append((y, c))
        if dim is None:
            raise ValueError("dimension required when there are no generators")
        super().__init__(dim)
        self.generators = tuple(gens)

    def _eval(self, x):
        r = EPS
        for y, c in self.generators:
            v = otimes(c, residuate(x, y))
            if r < v:
                r = v
        return r

    def points(self):
        return [y for y, _ in self.generators]

    def __repr__(self):
        return f"FinGen({list(self.generators)!r})"


class Table(Function):
    """A function given by its value at every point of a finite domain."""

    def __init__(self, points: Sequence[Vector], values: Sequence[Scalar]):
        points = [vector(p) for p in points]
        if len(points) != len(values):
            raise ValueError("points and values differ in length")
        if not points:
            raise ValueError("empty table")
        dim = len(points[0])
        for p in points:
            if len(p) != dim:
                raise DimensionError("table points of mixed dimension")
        super().__init__(dim)
        self.table = dict(zip(points, (scalar(v) for v in values)))
        if len(self.table) != len(points):
            raise ValueError("duplicate table point")

    def _eval(self, x):
        try:
            return self.table[x]
        except KeyError:
            raise ValueError(f"{x!r} is outside the table's domain") from None

    @classmethod
    def tabulate(cls, f: Callable, points: Sequence[Vector]) -> "Table":
        return cls(points, [f(p) for p in points])

    def __repr__(self):
        return f"Table({self.table!r})"


class InverseOf(Function):
    """x -> f(x)^-1; swaps topical and anti-topical."""

    def __init__(self, f: Function):
        super().__init__(f.dim)
        self.f = f
        self.kind = {TOPICAL: ANTI_TOPICAL, ANTI_TOPICAL: TOPICAL}.get(f.kind)

    def _eval(self, x):
        return invert(self.f(x))

    def __repr__(self):
        return f"InverseOf({self.f!r})"


class Const(Function):
    def __init__(self, c: Scalar, dim: int):
        super().__init__(dim)
        self.c = scalar(c)
        # EPS is topical, TOP anti-topical; other constants are neither
        self.kind = TOPICAL if self.c is EPS else ANTI_TOPICAL if self.c is TOP else None

    def __call__(self, x):
        if len(x) != self.dim:
            raise DimensionError(f"function of dimension {self.dim} applied to a {len(x)}-vector")
        return self.c

    def __repr__(self):
        return f"Const({self.c!r})"


class Pointwise(Function):
    """Wraps a plain callable (used for derived maps such as conjugates)."""

    def __init__(self, fn: Callable, dim: int, kind: Optional[str] = None):
        super().__init__(dim)
        self.fn = fn
        self.kind = kind

    def _eval(self, x):
        return self.fn(x)


def eval_fn(f: Function, x: Vector) -> Scalar:
    return f(x)


def s_yd(y: Vector, d: Scalar, x: Vector) -> Scalar:
    """inf{x/y, d}."""
    r = residuate(x, y)
    return r if r <= d else d


def sbar_yd(y: Vector, d: Scalar, x: Vector) -> Scalar:
    """sup{(x/y)^-1, d}."""
    r = invert(residuate(x, y))
    return d if r <= d else r


@dataclass(frozen=True)
class ProbeSet:
    """Points over which sup/inf and "for all x" clauses are evaluated.

    ``exhaustive`` means the points are the whole (finite) domain, so results
    computed over them are exact rather than bounds.
    """
    points: tuple
    exhaustive: bool = False

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    @functools.cached_property
    def members(self) -> frozenset:
        return frozenset(self.points)

    @functools.cached_property
    def dims(self) -> frozenset:
        return frozenset(len(p) for p in self.points)

    def with_points(self, *extra) -> "ProbeSet":
        if self.exhaustive:
            return self
        new = _dedup(x for x in extra if x not in self.members)
        return ProbeSet(self.points + new, False) if new else self


def _dedup(points):
    seen = set()
    out = []
    for p in points:
        if p not in seen:
            seen.add(p)
            out.append(p)
    return tuple(out)


def boolean_domain(n: int) -> ProbeSet:
    return ProbeSet(tuple(boolean_points(n)), True)


def probe_policy(dim: int, generators: Iterable[Vector] = (), lambdas: Iterable[Scalar] = (),
                 extra: Iterable[Vector] = ()) -> ProbeSet:
    """inf X, the generator points, their scalings by ``lambdas``, then ``extra``."""
    gens = list(generators)
    pts = [bottom(dim)] + gens
    for lam in lambdas:
        pts.extend(scale(lam, y) for y in gens)
    pts.extend(vector(p) for p in extra)
    for p in pts:
        if len(p) != dim:
            raise DimensionError(f"probe of dimension {len(p)} in a {dim}-dimensional run")
    return ProbeSet(_dedup(pts), False)


def probes_for(f: Function, lambdas: Iterable[Scalar] = (), extra: Iterable[Vector] = ()) -> ProbeSet:
    gens = f.points() if isinstance(f, FinGen) else []
    return probe_policy(f.dim, gens, lambdas, extra)


def as_probes(probes, dim: int) -> ProbeSet:
    if isinstance(probes, ProbeSet):
        p = probes
    else:
        p = ProbeSet(_dedup(tuple(vector(v) for v in probes)), False)
    if p.dims - {dim}:
        raise DimensionError(f"probes of dimension {sorted(p.dims - {dim})} for a {dim}-dimensional function")
    return p.with_points(bottom(dim))


@dataclass(frozen=True)
class Verdict:
    passed: bool
    counterexample: Optional[tuple] = None
    reason: str = ""
    strength: str = ""

    def __bool__(self):
        return self.passed


def _strength(p: ProbeSet) -> str:
    if p.exhaustive:
        return "exhaustive"
    return f"sampled over {len(p)} probes; holds on the probes only"


def check_topical(f: Function, probes, d_sample: Iterable[Scalar] = ()) -> Verdict:
    """f(inf X) = EPS and f(y) (x) x/y <= f(x) for all probe pairs.

    The psi-form f(y) (x) inf{x/y, d} <= f(x) is checked as well over
    ``d_sample`` plus EPS, e, TOP and must give the same verdict.
    """
    p = as_probes(probes, f.dim)
    pts = p.points
    note = _strength(p)
    bot = bottom(f.dim)
    fx = {x: f(x) for x in pts}
    if fx[bot] is not EPS:
        return Verdict(False, (bot,), "f(inf X) is not EPS", note)
    ds = (EPS, E, TOP) + tuple(d_sample)
    phi_bad = psi_bad = None
    for y in pts:
        fy = fx[y]
        for x in pts:
            r = residuate(x, y)
            if phi_bad is None and otimes(fy, r) > fx[x]:
                phi_bad = (x, y)
            if psi_bad is None:
                for d in ds:
                    if otimes(fy, r if r <= d else d) > fx[x]:
                        psi_bad = (x, y, d)
                        break
        if phi_bad and psi_bad:
            break
    if (phi_bad is None) != (psi_bad is None):
        raise InternalConsistencyError(f"phi-form and psi-form disagree: {phi_bad} vs {psi_bad}")
    if phi_bad:
        return Verdict(False, phi_bad, "f(y) (x) x/y exceeds f(x)", note)
    return Verdict(True, None, "", note)


def check_anti_topical(f: Function, probes) -> Verdict:
    """f(inf X) = TOP and the three equivalent pairwise inequalities.

    f(y) (.) (x/y)^-1 >= f(x),  f(x) (x) x/y <= f(y),  f(y)/(x/y) >= f(x).
    """
    p = as_probes(probes, f.dim)
    pts = p.points
    note = _strength(p)
    bot = bottom(f.dim)
    fx = {x: f(x) for x in pts}
    if fx[bot] is not TOP:
        return Verdict(False, (bot,), "f(inf X) is not TOP", note)
    for y in pts:
        fy = fx[y]
        for x in pts:
            r = residuate(x, y)
            a = otimes_dot(fy, invert(r)) >= fx[x]
            b = otimes(fx[x], r) <= fy
            c = residual_scalar(fy, r) >= fx[x]
            if not a == b == c:
                raise InternalConsistencyError(f"anti-topical forms disagree at x={x}, y={y}")
            if not a:
                return Verdict(False, (x, y), "f(y) (.) (x/y)^-1 is below f(x)", note)
    return Verdict(True, None, "", note)


def _bbs993_holds(f, pts) -> bool:
    fx = {x: f(x) for x in pts}
    return all(otimes(fx[y], residuate(x, y)) <= fx[x] for y in pts for x in pts)


def classify_bbs993(f: Function, probes) -> str:
    """"topical", "const_top" or "neither"; the first two are exactly the
    functions with f(y) (x) x/y <= f(x) everywhere."""
    pts = as_probes(probes, f.dim).points
    if not _bbs993_holds(f, pts):
        return "neither"
    if all(f(x) is TOP for x in pts):
        return "const_top"
    if f(bottom(f.dim)) is not EPS:
        raise InternalConsistencyError("inequality holds but f(inf X) is neither EPS nor forces TOP")
    return "topical"


def classify_bbs995(f: Function, probes) -> str:
    """"anti_topical", "const_eps" or "neither"."""
    pts = as_probes(probes, f.dim).points
    fx = {x: f(x) for x in pts}
    ok = all(otimes_dot(fx[y], invert(residuate(x, y))) >= fx[x] for y in pts for x in pts)
    if not ok:
        return "neither"
    if all(v is EPS for v in fx.values()):
        return "const_eps"
    if fx[bottom(f.dim)] is not TOP:
        raise InternalConsistencyError("inequality holds but f(inf X) is not TOP")
    return "anti_topical"


def topical_by_definition(f: Function, points: Sequence[Vector], lambdas: Iterable[Scalar]) -> bool:
    """Increasing on comparable pairs and f(lam x) = lam (x) f(x).

    Scaled points outside ``points`` are evaluated too, so ``f`` must be
    defined there (always the case on B^n with lambdas in {EPS, e}).
    """
    lambdas = tuple(lambdas)
    for x in points:
        for z in points:
            if leq_vec(x, z) and f(x) > f(z):
                return False
        for lam in lambdas:
            if f(scale(lam, x)) != otimes(lam, f(x)):
                return False
    return True


def anti_topical_by_definition(f: Function, points: Sequence[Vector], lambdas: Iterable[Scalar]) -> bool:
    """Decreasing on comparable pairs and f(lam x) = lam^-1 (.) f(x)."""
    lambdas = tuple(lambdas)
    for x in points:
        for z in points:
            if leq_vec(x, z) and f(x) < f(z):
                return False
        for lam in lambdas:
            if f(scale(lam, x)) != otimes_dot(invert(lam), f(x)):
                return False
    return True


def t_y(f: Function, y: Vector) -> Function:
    """x -> f(y) (x) x/y, a topical minorant of a topical f touching it at y."""
    fy = f(y)
    return Pointwise(lambda x: otimes(fy, residuate(x, y)), f.dim)


def q_y(f: Function, y: Vector) -> Function:
    """x -> (x/y)^-1 (.) f(y), an anti-topical majorant of an anti-topical f."""
    fy = f(y)
    return Pointwise(lambda x: otimes_dot(invert(residuate(x, y)), fy), f.dim)

