import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from spgames import _kernels as K
from spgames.census import _perms, _subset_table

needs_numba = pytest.mark.skipif(not K.HAVE_NUMBA, reason="numba not installed")

masks = st.lists(st.integers(0, (1 << 12) - 1), min_size=0, max_size=40).map(
    lambda xs: np.array(xs, dtype=np.uint64)
)


def brute_maximal(xs):
    s = set(int(x) for x in xs)
    return sorted(a for a in s if not any(a != b and a & b == a for b in s))


def brute_cliques(adj):
    n = len(adj)
    out = []
    for m in range(1, 1 << n):
        members = [i for i in range(n) if m >> i & 1]
        if all(int(adj[i]) >> j & 1 for i in members for j in members if i != j):
            if not any(int(adj[k]) & m == m for k in range(n) if not m >> k & 1):
                out.append(m)
    return sorted(out)


@st.composite
def graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    adj = np.zeros(n, dtype=np.uint64)
    for i in range(n):
        for j in range(i + 1, n):
            if draw(st.booleans()):
                adj[i] |= np.uint64(1 << j)
                adj[j] |= np.uint64(1 << i)
    return adj


@given(masks)
def test_maximal_np_matches_brute_force(xs):
    assert [int(x) for x in K.maximal_np(xs)] == brute_maximal(xs)


@needs_numba
@given(masks)
def test_maximal_backends_agree(xs):
    assert np.array_equal(K.maximal_nb(xs), K.maximal_np(xs))


@needs_numba
@given(masks, st.integers(0, 11))
def test_link_backends_agree(xs, bit):
    m = K.maximal_np(xs)
    assert np.array_equal(K.link_nb(m, bit), K.link_np(m, bit))


@given(masks, st.integers(0, 11))
def test_link_definition(xs, bit):
    m = K.maximal_np(xs)
    b = 1 << bit
    expected = brute_maximal([int(f) & ~b for f in m if int(f) & b])
    assert [int(x) for x in K.link_np(m, bit)] == expected


@given(graphs())
def test_cliques_np_matches_brute_force(adj):
    assert sorted(int(x) for x in K.max_cliques_np(adj)) == brute_cliques(adj)


@needs_numba
@given(graphs(12))
def test_clique_backends_agree(adj):
    assert sorted(int(x) for x in K.max_cliques_nb(adj)) == sorted(int(x) for x in K.max_cliques_np(adj))


@needs_numba
@given(st.lists(st.integers(0, (1 << 16) - 1), min_size=1, max_size=20), st.integers(0, 15))
def test_orbit_and_code_backends_agree(fams, lab):
    perms = _perms(4)
    table = _subset_table(perms)
    f = np.array(fams, dtype=np.uint64)
    assert np.array_equal(K.set_codes_nb(f, table), K.set_codes_np(f, table))
    labels = np.array([lab], dtype=np.uint64)
    assert np.array_equal(K.orbit_min_nb(labels, perms), K.orbit_min_np(labels, perms))


def test_set_code_is_isomorphism_invariant():
    perms = _perms(3)
    table = _subset_table(perms)
    # path a-b-c in two labellings
    f1 = (1 << 0b011) | (1 << 0b110)
    f2 = (1 << 0b101) | (1 << 0b011)
    codes = K.set_codes(np.array([f1, f2], dtype=np.uint64), table)
    assert codes[0] == codes[1]


def test_env_flag_selects_numpy_backend():
    env = dict(os.environ, SPGAMES_DISABLE_NUMBA="1")
    out = subprocess.run(
        [sys.executable, "-c", "from spgames import _kernels; print(_kernels.BACKEND, _kernels.maximal is _kernels.maximal_np)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.split() == ["numpy", "True"]


def test_numpy_backend_end_to_end():
    env = dict(os.environ, SPGAMES_DISABLE_NUMBA="1")
    code = (
        "from spgames import evaluate, describe; from spgames.rulesets import *;"
        "print(describe(evaluate(domineering_complex(parse_board('grid:2x5')))))"
    )
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "1/2"
