import random

from gmpy2 import mpq
from hypothesis import settings, strategies as st

from topical.functions import FinGen
from topical.scalar import EPS, TOP, E, random_rational
from topical.semimodule import random_vector

settings.register_profile("default", max_examples=200, deadline=None, derandomize=True)
settings.load_profile("default")

rationals = st.builds(lambda p, q: mpq(p, q), st.integers(-30, 30), st.sampled_from([1, 2, 3, 5]))
base = st.one_of(st.just(EPS), rationals)
extended = st.one_of(st.sampled_from([EPS, TOP, E]), rationals)
lambdas = st.one_of(st.just(EPS), rationals)


def vectors(n=None, nonbottom=False):
    dims = st.just(n) if n is not None else st.integers(1, 4)
    vs = dims.flatmap(lambda k: st.tuples(*[base] * k))
    if nonbottom:
        vs = vs.filter(lambda v: any(c is not EPS for c in v))
    return vs


def vector_pairs(k=2):
    return st.integers(1, 4).flatmap(lambda n: st.tuples(*[vectors(n)] * k))


def random_fingen(rng: random.Random, n=None, max_gens=6, p_top=0.0):
    n = n or rng.randint(1, 4)
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        y = random_vector(rng, n, nonbottom=True)
        c = TOP if rng.random() < p_top else random_rational(rng)
        gens.append((y, c))
    return FinGen(gens, n)


def fingens(max_gens=4):
    return st.integers(0, 2**32 - 1).map(lambda s: random_fingen(random.Random(s), max_gens=max_gens))


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
