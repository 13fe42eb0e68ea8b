"""Exhaustive checks over the Boolean semifield {EPS, e} enlarged by TOP.

Everything is enumerated: the 3 extended scalars, the 2^n points of B^n,
all 3^(2^n) functions B^n -> {EPS, e, TOP} and all subsets of B^n.  Each
claim is checked exactly as stated, so a report either passes or carries
the first counterexample in enumeration order.

Topicality is decided here straight from the definition (monotone plus
homogeneous over K = {EPS, e}), independently of the library checkers,
which are then compared against it.
"""
from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

from . import conjugation as cj
from . import functions as fn
from . import polars as pl
from . import support as sp
from .codec import encode_scalar, encode_vector
from .scalar import (
    EPS, TOP, E, Semifield, invert, otimes, otimes_dot, residual_scalar, sup, inf,
)
from .semimodule import bottom, is_bottom, leq_vec, min_plus_coupling, residuate, scale

BOOL = Semifield.BOOLEAN
KBAR = (EPS, E, TOP)
K = (EPS, E)
MAX_N = 2


class TheoremId(enum.Enum):
    Tunu = "Tunu"
    Lineq = "Lineq"
    Ctipmor = "Ctipmor"
    Lresid = "Lresid"
    LantiBis1a = "LantiBis1a"
    LantiBis1b = "LantiBis1b"
    Ttrei = "Ttrei"
    C0 = "C0"
    Cbun = "Cbun"
    RadaugD = "RadaugD"
    Tconj = "Tconj"
    TconjAntitop = "TconjAntitop"
    Cbun3 = "Cbun3"
    Tbiconj = "Tbiconj"
    Tantibiconj = "Tantibiconj"
    LL51 = "LL51"
    Cor51 = "Cor51"
    Lpartial = "Lpartial"
    Rsecond = "Rsecond"
    RsecondBis = "RsecondBis"
    PolarUpDown = "PolarUpDown"
    LL21 = "LL21"
    ElemThm10 = "ElemThm10"
    Tprima = "Tprima"
    Tadoua = "Tadoua"
    PanterPdupa = "PanterPdupa"
    SuppSubdiff = "SuppSubdiff"


@dataclass(frozen=True)
class VerificationReport:
    theorem: TheoremId
    instances_checked: int
    counterexample: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_json(self) -> dict:
        out = {"theorem": self.theorem.value, "checked": self.instances_checked,
               "result": "pass" if self.passed else "counterexample"}
        if not self.passed:
            out["counterexample"] = self.counterexample
        return out


class _Violation(Exception):
    pass


def _enc(v):
    if isinstance(v, fn.Function):
        return [encode_scalar(v(p), BOOL) for p in _points(v.dim)]
    if isinstance(v, tuple):
        return encode_vector(v, BOOL)
    if isinstance(v, (frozenset, set)):
        return [_enc(p) for p in sorted(v, key=_point_key)]
    if isinstance(v, list):
        return [_enc(p) for p in v]
    if isinstance(v, (bool, int, str)):
        return v
    return encode_scalar(v, BOOL)


def _point_key(p):
    return tuple(c is not EPS for c in p)


class _Run:
    def __init__(self):
        self.checked = 0

    def tick(self, k: int = 1):
        self.checked += k

    def ensure(self, cond: bool, claim: str, **data):
        if not cond:
            raise _Violation({"claim": claim, **{k: _enc(v) for k, v in data.items()}})


@functools.lru_cache(maxsize=None)
def _points(n: int) -> tuple:
    return fn.boolean_domain(n).points


def enumerate_functions(n: int) -> Iterator[fn.Table]:
    """All maps B^n -> {EPS, e, TOP}, in lexicographic order of their value lists."""
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be 1..{MAX_N}")
    pts = _points(n)
    for vals in itertools.product(KBAR, repeat=len(pts)):
        yield fn.Table(pts, vals)


def enumerate_subsets(n: int) -> Iterator[frozenset]:
    pts = _points(n)
    for mask in range(1 << len(pts)):
        yield frozenset(p for i, p in enumerate(pts) if mask >> i & 1)


class _Model:
    """Enumerated functions with their brute-force derived data."""

    def __init__(self, n: int):
        self.n = n
        self.domain = fn.boolean_domain(n)
        self.pts = self.domain.points
        self.bot = bottom(n)
        self.funcs = list(enumerate_functions(n))

    @functools.cached_property
    def topical(self) -> list:
        return [fn.topical_by_definition(f, self.pts, K) for f in self.funcs]

    @functools.cached_property
    def anti(self) -> list:
        return [fn.anti_topical_by_definition(f, self.pts, K) for f in self.funcs]

    def conj(self, f) -> dict:
        """sup_x f(x)^-1 (x) x/y, computed here without the library."""
        return {y: sup(otimes(invert(f(x)), residuate(x, y)) for x in self.pts) for y in self.pts}

    def conj_psi(self, f, d) -> dict:
        return {y: sup(otimes(invert(f(x)), fn.s_yd(y, d, x)) for x in self.pts) for y in self.pts}

    def lower(self, f) -> dict:
        return {y: inf(otimes_dot(invert(f(x)), invert(residuate(x, y))) for x in self.pts)
                for y in self.pts}

    def lower_psi(self, f, d) -> dict:
        return {y: inf(otimes_dot(invert(f(x)), fn.sbar_yd(y, d, x)) for x in self.pts)
                for y in self.pts}

    def table(self, values: dict) -> fn.Table:
        return fn.Table(self.pts, [values[p] for p in self.pts])

    def const(self, f, c) -> bool:
        return all(f(p) is c for p in self.pts)


@functools.lru_cache(maxsize=None)
def _model(n: int) -> _Model:
    return _Model(n)


# ---- scalar laws -------------------------------------------------------

def _tunu(run: _Run, m: _Model):
    for a, b in itertools.product(KBAR, repeat=2):
        run.tick()
        run.ensure(otimes_dot(a, b) == invert(otimes(invert(a), invert(b))), "upper product from lower", a=a, b=b)
        run.ensure(otimes(a, b) == invert(otimes_dot(invert(a), invert(b))), "lower product from upper", a=a, b=b)
        run.ensure(otimes(a, b) == otimes(b, a) and otimes_dot(a, b) == otimes_dot(b, a), "commutativity", a=a, b=b)
        run.ensure(otimes(a, E) == a and otimes_dot(a, E) == a, "unit", a=a)
    for a, b, c in itertools.product(KBAR, repeat=3):
        run.tick()
        run.ensure(otimes(otimes(a, b), c) == otimes(a, otimes(b, c)), "associativity of lower product", a=a, b=b, c=c)
        run.ensure(otimes_dot(otimes_dot(a, b), c) == otimes_dot(a, otimes_dot(b, c)),
                   "associativity of upper product", a=a, b=b, c=c)


def _lineq(run: _Run, m: _Model):
    for lam, mu, beta in itertools.product(KBAR, repeat=3):
        run.tick()
        run.ensure((otimes(lam, mu) <= beta) == (otimes(invert(beta), mu) <= invert(lam)),
                   "lam mu <= beta iff beta^-1 mu <= lam^-1", lam=lam, mu=mu, beta=beta)
        run.ensure((otimes_dot(lam, mu) >= beta) == (otimes_dot(invert(beta), mu) >= invert(lam)),
                   "lam (.) mu >= beta iff beta^-1 (.) mu >= lam^-1", lam=lam, mu=mu, beta=beta)
    # the documented non-laws must still fail
    run.tick(3)
    run.ensure(otimes(EPS, E) <= EPS and not E <= otimes(invert(EPS), EPS),
               "non-law: lam mu <= beta does not give mu <= lam^-1 beta (lam = beta = EPS)")
    run.ensure(otimes_dot(TOP, E) >= TOP and not E >= otimes_dot(invert(TOP), TOP),
               "non-law: lam (.) mu >= beta does not give mu >= lam^-1 (.) beta (lam = beta = TOP)")
    run.ensure(otimes(EPS, EPS) >= EPS and not otimes(invert(EPS), EPS) >= invert(EPS),
               "non-law: reversed inequalities (EPS EPS >= EPS)")
    run.tick(4)
    run.ensure(otimes(invert(EPS), EPS) is EPS and otimes_dot(invert(EPS), EPS) is TOP,
               "conventions at EPS")
    run.ensure(otimes(invert(TOP), TOP) is EPS and otimes_dot(invert(TOP), TOP) is TOP,
               "conventions at TOP")


def _ctipmor(run: _Run, m: _Model):
    for lam, mu, nu in itertools.product(KBAR, repeat=3):
        run.tick()
        run.ensure((otimes(mu, nu) <= lam) == (nu <= otimes_dot(lam, invert(mu))),
                   "mu nu <= lam iff nu <= lam (.) mu^-1", lam=lam, mu=mu, nu=nu)
        run.ensure(residual_scalar(lam, mu) == otimes_dot(lam, invert(mu)), "scalar residual", lam=lam, mu=mu)


def _lresid(run: _Run, m: _Model):
    for x, y in itertools.product(m.pts, repeat=2):
        run.tick()
        r = residuate(x, y)
        for mu in K:
            run.ensure(residuate(x, scale(mu, y)) == otimes_dot(invert(mu), r),
                       "x/(mu y) = mu^-1 (.) x/y", x=x, y=y, mu=mu)
        if is_bottom(y):
            run.ensure(r is TOP, "x/inf X = TOP", x=x)
            continue
        if is_bottom(x):
            run.ensure(r is EPS, "inf X/y = EPS for y != inf X", y=y)
        run.ensure(residuate(y, y) == E, "y/y = e", y=y)
        if r is not EPS:
            run.ensure(leq_vec(scale(r, y), x), "(x/y) y <= x", x=x, y=y)
        for lam in K:
            run.ensure(leq_vec(scale(lam, y), x) == (lam <= r), "lam y <= x iff lam <= x/y", x=x, y=y, lam=lam)


# ---- characterizations -------------------------------------------------

def _pairs(m):
    return itertools.product(m.pts, repeat=2)


def _lanti_bis1a(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        t = m.topical[i]
        at_bot = f(m.bot) is EPS
        c2 = at_bot and all(otimes(f(y), residuate(x, y)) <= f(x) for x, y in _pairs(m))
        c3 = at_bot and all(otimes(f(y), fn.s_yd(y, d, x)) <= f(x) for x, y in _pairs(m) for d in KBAR)
        lib = fn.check_topical(f, m.domain).passed
        run.ensure(t == c2 == c3 == lib, "topical iff f(inf X)=EPS and f(y) x/y <= f(x) (and psi-form)",
                   f=f, topical=t, form2=c2, form3=c3, checker=lib)
        if t:
            for x in m.pts:
                run.ensure(sup(otimes(f(y), residuate(x, y)) for y in m.pts) == f(x),
                           "sup_y f(y) x/y = f(x)", f=f, x=x)
                run.ensure(sup(otimes(f(y), fn.s_yd(y, d, x)) for y in m.pts for d in KBAR) == f(x),
                           "sup_(y,d) f(y) s_yd(x) = f(x)", f=f, x=x)
            for y in m.pts:
                ty = fn.t_y(f, y)
                run.ensure(all(ty(x) <= f(x) for x in m.pts) and ty(y) == f(y), "t_y <= f, t_y(y) = f(y)",
                           f=f, y=y)


def _lanti_bis1b(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        a = m.anti[i]
        at_bot = f(m.bot) is TOP
        c2 = at_bot and all(otimes_dot(f(y), invert(residuate(x, y))) >= f(x) for x, y in _pairs(m))
        c3 = at_bot and all(otimes_dot(f(y), fn.sbar_yd(y, d, x)) >= f(x) for x, y in _pairs(m) for d in KBAR)
        lib = fn.check_anti_topical(f, m.domain).passed
        run.ensure(a == c2 == c3 == lib, "anti-topical iff f(inf X)=TOP and f(y) (.) (x/y)^-1 >= f(x)",
                   f=f, anti=a, form2=c2, form3=c3, checker=lib)
        inv_top = fn.topical_by_definition(fn.InverseOf(f), m.pts, K)
        run.ensure(a == inv_top, "f anti-topical iff 1/f topical", f=f)
        if a:
            for x in m.pts:
                run.ensure(inf(otimes_dot(f(y), invert(residuate(x, y))) for y in m.pts) == f(x),
                           "inf_y f(y) (.) (x/y)^-1 = f(x)", f=f, x=x)
            for y in m.pts:
                qy = fn.q_y(f, y)
                run.ensure(all(qy(x) >= f(x) for x in m.pts) and qy(y) == f(y), "q_y >= f, q_y(y) = f(y)",
                           f=f, y=y)


def _ttrei(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        avem = f(m.bot) is TOP
        s2 = avem and all(otimes(f(x), residuate(x, y)) <= f(y) for x, y in _pairs(m))
        s3 = avem and all(otimes(f(x), fn.s_yd(y, d, x)) <= f(y) for x, y in _pairs(m) for d in KBAR)
        s4 = avem and all(residual_scalar(f(y), residuate(x, y)) >= f(x) for x, y in _pairs(m))
        run.ensure(m.anti[i] == s2 == s3 == s4, "further anti-topical characterizations agree",
                   f=f, anti=m.anti[i], s2=s2, s3=s3, s4=s4)


def _c0(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        run.ensure(not (m.topical[i] and m.anti[i]), "never both topical and anti-topical", f=f)
        for x, y in _pairs(m):
            if m.topical[i] and f(y) is TOP:
                run.ensure(f(x) is TOP or residuate(x, y) is EPS, "topical, f(y)=TOP", f=f, x=x, y=y)
            if m.anti[i] and f(y) is EPS:
                run.ensure(f(x) is EPS or invert(residuate(x, y)) is TOP, "anti-topical, f(y)=EPS", f=f, x=x, y=y)


def _cbun(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        s993 = all(otimes(f(y), residuate(x, y)) <= f(x) for x, y in _pairs(m))
        s994 = all(otimes(f(y), fn.s_yd(y, d, x)) <= f(x) for x, y in _pairs(m) for d in KBAR)
        top = m.const(f, TOP)
        run.ensure(s993 == s994 == (m.topical[i] or top), "f(y) x/y <= f(x) iff topical or identically TOP",
                   f=f)
        want = "topical" if m.topical[i] else "const_top" if top else "neither"
        run.ensure(fn.classify_bbs993(f, m.domain) == want, "classification (upper inequality)", f=f, expected=want)
        s995 = all(otimes_dot(f(y), invert(residuate(x, y))) >= f(x) for x, y in _pairs(m))
        s994b = all(otimes_dot(f(y), fn.sbar_yd(y, d, x)) >= f(x) for x, y in _pairs(m) for d in KBAR)
        eps = m.const(f, EPS)
        run.ensure(s995 == s994b == (m.anti[i] or eps), "f(y) (.) (x/y)^-1 >= f(x) iff anti-topical or identically EPS",
                   f=f)
        want = "anti_topical" if m.anti[i] else "const_eps" if eps else "neither"
        run.ensure(fn.classify_bbs995(f, m.domain) == want, "classification (lower inequality)", f=f, expected=want)


# ---- conjugates --------------------------------------------------------

def _conj_forms(m: _Model, f):
    c = m.conj(f)
    for y in m.pts:
        lib = cj.conjugate_phi(f, y, m.domain)
        if lib.value != c[y] or not lib.exact:
            raise _Violation({"claim": "library conjugate equals brute force", "f": _enc(f), "y": _enc(y)})
    cpsi = {d: m.conj_psi(f, d) for d in (E, TOP)}
    for d in (E, TOP):
        for y in m.pts:
            if cj.conjugate_psi(f, y, d, m.domain).value != cpsi[d][y]:
                raise _Violation({"claim": "library psi-conjugate equals brute force", "f": _enc(f),
                                  "y": _enc(y), "d": _enc(d)})
    inv = {y: invert(f(y)) for y in m.pts}
    s2 = all(c[y] == inv[y] for y in m.pts)
    s3 = all(c[y] <= inv[y] for y in m.pts)
    s4 = all(cpsi[d][y] == inv[y] for y in m.pts for d in (E, TOP))
    s5 = all(cpsi[d][y] <= inv[y] for y in m.pts for d in (E, TOP))
    return s2, s3, s4, s5


def _radaug_d(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        s2, s3, s4, s5 = _conj_forms(m, f)
        target = m.topical[i] or m.const(f, TOP)
        run.ensure(s2 == s3 == s4 == s5 == target, "conjugate is 1/f (any form) iff topical or identically TOP",
                   f=f, forms=[s2, s3, s4, s5], target=target)


def _tconj(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        s2, s3, s4, s5 = _conj_forms(m, f)
        b = f(m.bot) is EPS
        run.ensure(m.topical[i] == (b and s2) == (b and s3) == (b and s4) == (b and s5),
                   "topical iff f(inf X)=EPS and conjugate is 1/f (any form)", f=f, topical=m.topical[i],
                   forms=[s2, s3, s4, s5])


def _lower_forms(m: _Model, f):
    th = m.lower(f)
    for y in m.pts:
        if cj.lower_conjugate_phi(f, y, m.domain).value != th[y]:
            raise _Violation({"claim": "library lower conjugate equals brute force", "f": _enc(f), "y": _enc(y)})
    tpsi = {d: m.lower_psi(f, d) for d in K}
    for d in K:
        for y in m.pts:
            if cj.lower_conjugate_psi(f, y, d, m.domain).value != tpsi[d][y]:
                raise _Violation({"claim": "library lower psi-conjugate equals brute force", "f": _enc(f),
                                  "y": _enc(y), "d": _enc(d)})
    inv = {y: invert(f(y)) for y in m.pts}
    s2 = all(th[y] >= inv[y] for y in m.pts)
    s3 = all(th[y] == inv[y] for y in m.pts)
    s4 = all(tpsi[d][y] >= inv[y] for y in m.pts for d in K)
    s5 = all(tpsi[d][y] == inv[y] for y in m.pts for d in K)
    return s2, s3, s4, s5


def _tconj_antitop(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        s2, s3, s4, s5 = _lower_forms(m, f)
        a = f(m.bot) is TOP
        run.ensure(m.anti[i] == (a and s2) == (a and s3) == (a and s4) == (a and s5),
                   "anti-topical iff f(inf X)=TOP and lower conjugate is 1/f (any form)", f=f,
                   anti=m.anti[i], forms=[s2, s3, s4, s5])


def _cbun3(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        s2, s3, s4, s5 = _lower_forms(m, f)
        target = m.anti[i] or m.const(f, EPS)
        run.ensure(s2 == s3 == s4 == s5 == target, "lower conjugate is 1/f iff anti-topical or identically EPS",
                   f=f, forms=[s2, s3, s4, s5], target=target)


def _tbiconj(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        c = m.conj(f)
        b = {x: sup(otimes(invert(c[y]), residuate(x, y)) for y in m.pts) for x in m.pts}
        for x in m.pts:
            run.ensure(cj.biconjugate_phi(f, x, m.domain).value == b[x], "library biconjugate equals brute force",
                       f=f, x=x)
            run.ensure(b[x] <= f(x), "biconjugate <= f", f=f, x=x)
        fixed = all(b[x] == f(x) for x in m.pts)
        target = m.topical[i] or m.const(f, TOP)
        run.ensure(fixed == target, "biconjugate = f exactly for topical f and f identically TOP", f=f, fixed=fixed)


def _tantibiconj(run: _Run, m: _Model):
    for i, f in enumerate(m.funcs):
        run.tick()
        r = cj.check_tantibiconj(f, m.domain)
        run.ensure(r.topical == m.topical[i] and r.anti_topical == m.anti[i], "checker classification", f=f)
        run.ensure(r.topical_iff_holds, "topical iff f not identically TOP and lower(conj f) = f", f=f,
                   topical=r.topical, bic=r.bic)
        run.ensure(r.anti_topical_iff_holds, "anti-topical iff conj(lower f) = f", f=f,
                   anti_topical=r.anti_topical, antibic=r.antibic)


def _dual_check(run: _Run, m: _Model, pi: Callable, reflected_conj: Callable, claim: str):
    """Materialize h' = inf{g : g^c <= h} over all g and compare."""
    pts = m.pts
    fvals = [tuple(f(p) for p in pts) for f in m.funcs]
    P = [[pi(x, y) for y in pts] for x in pts]
    idx = range(len(pts))

    def conj(vals):
        return tuple(sup(otimes(invert(vals[a]), P[a][b]) for a in idx) for b in idx)

    conjs = [conj(v) for v in fvals]
    for h, hv in zip(m.funcs, fvals):
        run.tick()
        below = [gv for gv, cg in zip(fvals, conjs) if all(cg[b] <= hv[b] for b in idx)]
        dual = tuple(inf(gv[a] for gv in below) for a in idx)
        refl = tuple(reflected_conj(h, x) for x in pts)
        run.ensure(dual == refl, claim, h=h)
    return fvals, conjs, P


def _ll51(run: _Run, m: _Model):
    fvals, conjs, P = _dual_check(run, m, residuate, lambda h, x: cj.conjugate_reflected(h, x, m.domain).value,
                                  "dual of the phi-conjugation is the reflected conjugation")
    idx = range(len(m.pts))
    refl = [tuple(sup(otimes(invert(hv[b]), P[a][b]) for b in idx) for a in idx) for hv in fvals]
    for gv, cg in zip(fvals, conjs):
        for hv, rh in zip(fvals, refl):
            run.tick()
            s1 = all(cg[b] <= hv[b] for b in idx)
            s2 = all(otimes(invert(gv[a]), P[a][b]) <= hv[b] for a in idx for b in idx)
            s3 = all(otimes(invert(hv[b]), P[a][b]) <= gv[a] for a in idx for b in idx)
            s4 = all(rh[a] <= gv[a] for a in idx)
            if not s1 == s2 == s3 == s4:
                raise _Violation({"claim": "equivalence chain g^c <= h ... h^c' <= g",
                                  "g": [encode_scalar(v, BOOL) for v in gv],
                                  "h": [encode_scalar(v, BOOL) for v in hv]})


def _cor51(run: _Run, m: _Model):
    pi = min_plus_coupling
    for x, y in _pairs(m):
        run.tick()
        run.ensure(pi(x, y) == pi(y, x), "min-plus coupling is symmetric", x=x, y=y)
        if all(c is not EPS for c in y):
            run.ensure(residuate(x, y) == pi(x, tuple(invert(c) for c in y)), "x/y = pi(x, y^-1)", x=x, y=y)

    def conj_pi(h, x):
        return sup(otimes(invert(h(y)), pi(y, x)) for y in m.pts)

    _dual_check(run, m, pi, conj_pi, "symmetric coupling: the conjugation is self-dual")
    for P in enumerate_subsets(m.n):
        run.tick()
        run.ensure(pl.dual_polarity(P, pi, m.pts) == pl.pi_polar(P, pi, m.pts),
                   "symmetric coupling: the polarity is self-dual", P=P)


def _lpartial(run: _Run, m: _Model):
    for y in m.pts:
        run.tick()
        g = fn.Table.tabulate(lambda x: residuate(x, y), m.pts)
        run.ensure(fn.topical_by_definition(g, m.pts, K), "x -> x/y is topical", y=y, f=g)
    for x in m.pts:
        run.tick()
        g = fn.Table.tabulate(lambda y: residuate(x, y), m.pts)
        run.ensure(fn.anti_topical_by_definition(g, m.pts, K), "y -> x/y is anti-topical", x=x, f=g)


def _rsecond(run: _Run, m: _Model):
    for f in m.funcs:
        run.tick()
        c = m.table(m.conj(f))
        run.ensure(all(c(y1) >= c(y2) for y1, y2 in _pairs(m) if leq_vec(y1, y2)), "conjugate is decreasing", f=f)
        run.ensure(fn.anti_topical_by_definition(c, m.pts, K), "conjugate is anti-topical", f=f, conjugate=c)


def _rsecond_bis(run: _Run, m: _Model):
    for f in m.funcs:
        run.tick()
        th = m.table(m.lower(f))
        if m.const(f, EPS):
            run.ensure(m.const(th, TOP) and fn.anti_topical_by_definition(th, m.pts, K),
                       "lower conjugate of EPS is TOP, anti-topical", f=f)
        else:
            run.ensure(fn.topical_by_definition(th, m.pts, K), "lower conjugate of f != EPS is topical",
                       f=f, lower=th)


# ---- polars ------------------------------------------------------------

def _polar_updown(run: _Run, m: _Model):
    up = lambda S: all(q in S for p in S for q in m.pts if leq_vec(p, q))
    down = lambda S: all(q in S for p in S for q in m.pts if leq_vec(q, p))
    subsets = list(enumerate_subsets(m.n))
    for G in subsets:
        run.tick()
        fs = pl.FiniteSet.of(sorted(G, key=_point_key), m.n)
        pol = frozenset(y for y in m.pts if pl.polar_membership(y, fs))
        bar = frozenset(y for y in m.pts if pl.bar_polar_membership(y, fs))
        run.ensure(pol == pl.pi_polar(G, residuate, m.pts), "polar is the e-level set of the support function", G=G)
        run.ensure(up(pol), "polar is upward", G=G)
        run.ensure(down(bar), "reflected polar is downward", G=G)
        run.ensure(pol == frozenset.intersection(frozenset(m.pts), *[pl.pi_polar([g], residuate, m.pts) for g in G]),
                   "polar of G is the intersection of the polars of its points", G=G)
        if G:
            run.ensure(m.bot not in pol, "inf X is not in the polar of a nonempty set", G=G)
            run.ensure(pl.support_function(fs, m.bot) is TOP, "support function at inf X is TOP", G=G)
            sig = fn.Table.tabulate(lambda y: pl.support_function(fs, y), m.pts)
            run.ensure(fn.anti_topical_by_definition(sig, m.pts, K), "support function is anti-topical", G=G)
        for H in subsets:
            if G <= H:
                run.ensure(pl.pi_polar(H, residuate, m.pts) <= pol, "polarity reverses inclusion", G=G, H=H)


def _ll21(run: _Run, m: _Model):
    for P in enumerate_subsets(m.n):
        run.tick()
        run.ensure(pl.check_polarity_dual(P, residuate, m.pts), "dual of the polarity is the reflected polarity", P=P)


def _elem_thm10(run: _Run, m: _Model):
    pts = m.pts
    for G in enumerate_subsets(m.n):
        run.tick()
        fs = pl.FiniteSet.of(sorted(G, key=_point_key), m.n)
        downward = all(q in G for p in G for q in pts if leq_vec(q, p))
        # on a finite discrete domain every set is closed, also along rays
        s1 = s2 = downward
        s3 = pl.bipolar_set(G, pts) == G
        outside = [x for x in pts if x not in G and not is_bottom(x)]
        ys = [y for y in pts if not is_bottom(y)]
        s4 = all(any(pl.support_function(fs, y) <= E < residuate(x, y) for y in ys) for x in outside)
        s5 = all(any(pl.support_function(fs, y) < residuate(x, y) for y in ys) for x in outside)
        run.ensure((not s1 or s2) and (not s2 or s3), "closed downward => closed along rays => bipolar-convex",
                   G=G, statements=[s1, s2, s3, s4, s5])
        run.ensure(s1 == s2 == s3 == s4 == s5, "total order: all five statements equivalent",
                   G=G, statements=[s1, s2, s3, s4, s5])


# ---- support sets ------------------------------------------------------

def _topical_points(m: _Model):
    """(f, x0) for every topical f and every x0 with f(x0) = e."""
    for i, f in enumerate(m.funcs):
        if m.topical[i]:
            for x0 in m.pts:
                if f(x0) == E:
                    yield f, x0


def _tprima(run: _Run, m: _Model):
    ys = [y for y in m.pts if not is_bottom(y)]
    for f, x0 in _topical_points(m):
        for y in ys:
            run.tick()
            r0 = residuate(x0, y)
            s1 = all(residuate(x, y) <= f(x) for x in m.pts) and r0 == f(x0)
            s2 = f(y) == E and r0 == f(x0)
            s3 = f(y) == E and r0 >= f(x0)
            lib = sp.supp_at_point_X(f, x0, y, m.domain)
            run.ensure(s1 == s2 == s3 == lib, "support at a point: three forms agree", f=f, x0=x0, y=y,
                       forms=[s1, s2, s3, lib])


def _tadoua(run: _Run, m: _Model):
    ys = [y for y in m.pts if not is_bottom(y)]
    for f, x0 in _topical_points(m):
        for y in ys:
            for d in K:
                run.tick()
                s0 = fn.s_yd(y, d, x0)
                s1 = all(fn.s_yd(y, d, x) <= f(x) for x in m.pts) and s0 == f(x0)
                s2 = f(y) == E and s0 == f(x0)
                s3 = f(y) == E and s0 >= f(x0)
                lib = sp.supp_at_point_XK(f, x0, y, d, m.domain)
                run.ensure(s1 == s2 == s3 == lib, "support at a point with level d: three forms agree",
                           f=f, x0=x0, y=y, d=d, forms=[s1, s2, s3, lib])


def _panter_pdupa(run: _Run, m: _Model):
    for f, x0 in _topical_points(m):
        run.tick()
        w = scale(invert(f(x0)), x0)
        run.ensure(sp.canonical_witness(f, x0) == w, "canonical witness", f=f, x0=x0)
        run.ensure(all(residuate(x, w) <= f(x) for x in m.pts) and residuate(x0, w) == f(x0),
                   "f(x0)^-1 x0 is a support point at x0", f=f, x0=x0)
        run.ensure(sp.supp_at_point_X(f, x0, w, m.domain), "library accepts the canonical witness", f=f, x0=x0)
        run.ensure(all(fn.s_yd(w, f(x0), x) <= f(x) for x in m.pts) and fn.s_yd(w, f(x0), x0) == f(x0),
                   "(f(x0)^-1 x0, f(x0)) is a support pair at x0", f=f, x0=x0)
        run.ensure(sp.supp_at_point_XK(f, x0, w, f(x0), m.domain), "library accepts the canonical pair", f=f, x0=x0)
    for i, f in enumerate(m.funcs):
        run.tick()
        supp = frozenset(y for y in m.pts if not is_bottom(y) and all(residuate(x, y) <= f(x) for x in m.pts))
        run.ensure(all(q in supp for p in supp for q in m.pts if leq_vec(p, q)), "support set is upward", f=f)
        for y in m.pts:
            if not is_bottom(y):
                run.ensure(sp.supp_membership(f, y, m.domain) == (y in supp), "library support membership",
                           f=f, y=y)


def _supp_subdiff(run: _Run, m: _Model):
    ys = [y for y in m.pts if not is_bottom(y)]
    for f, x0 in _topical_points(m):
        for y in ys:
            run.tick()
            if sp.supp_at_point_X(f, x0, y, m.domain):
                brute = all(otimes(otimes(residuate(x, y), invert(residuate(x0, y))), f(x0)) <= f(x) for x in m.pts)
                run.ensure(brute and sp.phi_subdiff_membership(f, x0, y, m.domain),
                           "support point at x0 lies in the phi-subdifferential", f=f, x0=x0, y=y)


CHECKERS = {
    TheoremId.Tunu: _tunu,
    TheoremId.Lineq: _lineq,
    TheoremId.Ctipmor: _ctipmor,
    TheoremId.Lresid: _lresid,
    TheoremId.LantiBis1a: _lanti_bis1a,
    TheoremId.LantiBis1b: _lanti_bis1b,
    TheoremId.Ttrei: _ttrei,
    TheoremId.C0: _c0,
    TheoremId.Cbun: _cbun,
    TheoremId.RadaugD: _radaug_d,
    TheoremId.Tconj: _tconj,
    TheoremId.TconjAntitop: _tconj_antitop,
    TheoremId.Cbun3: _cbun3,
    TheoremId.Tbiconj: _tbiconj,
    TheoremId.Tantibiconj: _tantibiconj,
    TheoremId.LL51: _ll51,
    TheoremId.Cor51: _cor51,
    TheoremId.Lpartial: _lpartial,
    TheoremId.Rsecond: _rsecond,
    TheoremId.RsecondBis: _rsecond_bis,
    TheoremId.PolarUpDown: _polar_updown,
    TheoremId.LL21: _ll21,
    TheoremId.ElemThm10: _elem_thm10,
    TheoremId.Tprima: _tprima,
    TheoremId.Tadoua: _tadoua,
    TheoremId.PanterPdupa: _panter_pdupa,
    TheoremId.SuppSubdiff: _supp_subdiff,
}


def verify(theorem: TheoremId, n: int = 2) -> VerificationReport:
    if not 1 <= n <= MAX_N:
        raise ValueError(f"n must be 1..{MAX_N}")
    run = _Run()
    try:
        CHECKERS[theorem](run, _model(n))
    except _Violation as v:
        return VerificationReport(theorem, run.checked, v.args[0])
    return VerificationReport(theorem, run.checked)


def verify_all(n: int = 2) -> list:
    return [verify(t, n) for t in TheoremId]


def census(n: int = 2) -> dict:
    """Counts over all functions B^n -> {EPS, e, TOP}."""
    m = _model(n)
    fixed = bic = antibic = conj_inv = lower_inv = 0
    for f in m.funcs:
        c = m.conj(f)
        b = {x: sup(otimes(invert(c[y]), residuate(x, y)) for y in m.pts) for x in m.pts}
        fixed += all(b[x] == f(x) for x in m.pts)
        conj_inv += all(c[y] == invert(f(y)) for y in m.pts)
        th = m.lower(f)
        lower_inv += all(th[y] == invert(f(y)) for y in m.pts)
        r = cj.check_tantibiconj(f, m.domain)
        bic += r.bic
        antibic += r.antibic
    return {
        "n": n,
        "functions": len(m.funcs),
        "topical": sum(m.topical),
        "anti_topical": sum(m.anti),
        "topical_and_anti_topical": sum(a and b for a, b in zip(m.topical, m.anti)),
        "biconjugate_fixed": fixed,
        "conjugate_is_inverse": conj_inv,
        "lower_conjugate_is_inverse": lower_inv,
        "lower_of_conjugate_fixed": bic,
        "conjugate_of_lower_fixed": antibic,
    }
