"""Exact scalars of the max-plus semifield enlarged by a top element.

Finite values are ``gmpy2.mpq`` rationals (``e`` is 0, the product is
addition).  The two adjoined extremes are the singletons ``EPS`` (bottom,
the zero of the semifield) and ``TOP``.  Both compare correctly against any
rational, so the built-in ``max``/``min``/``<=`` give the extended order and
``oplus`` is simply ``max``.

The Boolean semifield {eps, e} is the same arithmetic restricted to
``{EPS, 0}``: max-plus on {-inf, 0} coincides with or/and.
"""
from __future__ import annotations

import enum
import random
from fractions import Fraction
from typing import Iterable, Union

from gmpy2 import mpq

from .errors import ParseError


class _Extreme:
    __slots__ = ("_name", "_sign")

    def __init__(self, name: str, sign: int):
        self._name = name
        self._sign = sign

    def __repr__(self):
        return self._name.upper()

    def __reduce__(self):
        return self._name.upper()

    # the two instances are singletons, so identity hashing is consistent with __eq__
    __hash__ = object.__hash__

    def __eq__(self, other):
        return self is other

    def __ne__(self, other):
        return self is not other

    def __lt__(self, other):
        return self is not other and self._sign < 0

    def __le__(self, other):
        return self is other or self._sign < 0

    def __gt__(self, other):
        return self is not other and self._sign > 0

    def __ge__(self, other):
        return self is other or self._sign > 0


EPS = _Extreme("eps", -1)
TOP = _Extreme("top", 1)
E = mpq(0)

Scalar = Union[mpq, _Extreme]


def finite(q) -> mpq:
    """Exact rational from an int, Fraction, mpq or a "p/r" string."""
    if isinstance(q, float):
        raise TypeError("floats are not exact; pass a Fraction or a 'p/r' string")
    if isinstance(q, _Extreme):
        raise TypeError(f"{q!r} is not a finite value")
    return mpq(q)


def scalar(v) -> Scalar:
    """Coerce ``v`` to a scalar, passing EPS/TOP through."""
    if v is EPS or v is TOP:
        return v
    return finite(v)


def is_finite(a) -> bool:
    return a is not EPS and a is not TOP


def oplus(a: Scalar, b: Scalar) -> Scalar:
    return a if b <= a else b


def otimes(a: Scalar, b: Scalar) -> Scalar:
    """Lower product: EPS absorbs everything, then TOP absorbs the rest."""
    if a is EPS or b is EPS:
        return EPS
    if a is TOP or b is TOP:
        return TOP
    return a + b


def otimes_dot(a: Scalar, b: Scalar) -> Scalar:
    """Upper product: TOP absorbs everything, then EPS absorbs the rest."""
    if a is TOP or b is TOP:
        return TOP
    if a is EPS or b is EPS:
        return EPS
    return a + b


def invert(a: Scalar) -> Scalar:
    """Group inverse on finite values, swapping EPS and TOP.

    At the extremes this is only a convention, not a group inverse:
    ``otimes(invert(EPS), EPS)`` is EPS, not e.
    """
    if a is EPS:
        return TOP
    if a is TOP:
        return EPS
    return -a


def residual_scalar(lam: Scalar, mu: Scalar) -> Scalar:
    """lam / mu, the largest nu in K with mu (x) nu <= lam."""
    return otimes_dot(lam, invert(mu))


def leq(a: Scalar, b: Scalar) -> bool:
    return a <= b


def sup(values: Iterable[Scalar]) -> Scalar:
    r = EPS
    for v in values:
        if r < v:
            r = v
    return r


def inf(values: Iterable[Scalar]) -> Scalar:
    r = TOP
    for v in values:
        if v < r:
            r = v
    return r


class Semifield(enum.Enum):
    QMAX = "qmax"
    BOOLEAN = "boolean"

    def check(self, a: Scalar) -> Scalar:
        """Reject finite values the instance does not contain."""
        if self is Semifield.BOOLEAN and is_finite(a) and a != E:
            raise ParseError(f"boolean semifield has no finite value {a}")
        return a

    def base(self) -> tuple:
        """Base elements used to sample homogeneity (all of K when Boolean)."""
        if self is Semifield.BOOLEAN:
            return (EPS, E)
        return (EPS, E, mpq(-2), mpq(-1, 2), mpq(1, 3), mpq(3))

    def extended(self) -> tuple:
        return self.base() + (TOP,)


def random_rational(rng: random.Random, spread: int = 6, denominators=(1, 2, 3)) -> mpq:
    """Small rational in [-spread, spread] with a denominator from ``denominators``."""
    d = rng.choice(denominators)
    return mpq(rng.randint(-spread * d, spread * d), d)


def random_scalar(rng: random.Random, p_eps: float = 0.15, p_top: float = 0.0) -> Scalar:
    u = rng.random()
    if u < p_eps:
        return EPS
    if u < p_eps + p_top:
        return TOP
    return random_rational(rng)


def to_fraction(a: mpq) -> Fraction:
    return Fraction(int(a.numerator), int(a.denominator))
