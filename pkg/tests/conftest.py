import random

import pytest
from hypothesis import strategies as st

import polymat as pm


def M(text, n=None):
    return pm.parse_monomial(text, n)


def I(text, n=None):
    return pm.parse_ideal(text, n)


def veronese(n, d):
    return pm.make_ideal(n, pm.monomials_of_degree(n, d).elems)


def random_ideal(rng: random.Random, n: int, d: int, max_gens: int) -> pm.MonomialIdeal:
    basis = pm.monomials_of_degree(n, d).elems
    m = rng.randint(1, min(max_gens, len(basis)))
    return pm.make_ideal(n, rng.sample(basis, m))


@st.composite
def exponent_tuples(st_draw, n=None, max_exp=4):
    if n is None:
        n = st_draw(st.integers(1, 4))
    return tuple(st_draw(st.lists(st.integers(0, max_exp), min_size=n, max_size=n)))


@st.composite
def monomial_triples_with_order(st_draw):
    """Three same-ambient monomials plus a variable order."""
    n = st_draw(st.integers(1, 4))
    mons = [
        pm.Monomial(tuple(st_draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))))
        for _ in range(3)
    ]
    perm = st_draw(st.permutations(range(1, n + 1)))
    return mons, pm.VariableOrder(tuple(perm))


@st.composite
def monomial_lists(st_draw, max_len=8, max_exp=3):
    n = st_draw(st.integers(1, 4))
    vecs = st_draw(
        st.lists(
            st.lists(st.integers(0, max_exp), min_size=n, max_size=n),
            min_size=1,
            max_size=max_len,
        )
    )
    return n, [pm.Monomial(tuple(v)) for v in vecs]


@st.composite
def small_ideals(st_draw, max_n=4, max_d=3, max_gens=6):
    n = st_draw(st.integers(1, max_n))
    d = st_draw(st.integers(1, max_d))
    basis = pm.monomials_of_degree(n, d).elems
    size = st_draw(st.integers(1, min(max_gens, len(basis))))
    picks = st_draw(st.permutations(range(len(basis))))
    return pm.make_ideal(n, [basis[i] for i in picks[:size]])


@pytest.fixture
def remark_ideal():
    return pm.remark_ideal()
