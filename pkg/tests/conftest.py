"""Shared fixtures and independent oracle helpers.

The oracles here deliberately avoid the library's computation paths: spans
are built by repeated set-doubling (not Gray sweeps), weights via bin().
"""

import random

import pytest

from lcpkit import codes, gf2

# Worked [8,4] pair: cross intersections have dimension 3 and a permutation
# closing the pair to an LCP exists.
G1_TEXT = """\
10001110
01010001
00101100
00011100
"""
G2_TEXT = """\
10000010
01000001
00110111
00011101
"""

# Self-orthogonal [7,3,4] code (hull = the code itself).
G_HULL_TEXT = """\
1001101
0101011
0010111
"""


@pytest.fixture
def paper_pair():
    c1 = codes.from_generator(gf2.parse_matrix_text(G1_TEXT))
    c2 = codes.from_generator(gf2.parse_matrix_text(G2_TEXT))
    return c1, c2


@pytest.fixture
def self_orthogonal_code():
    return codes.from_generator(gf2.parse_matrix_text(G_HULL_TEXT))


def random_matrix(rng: random.Random, n_rows: int, n_cols: int) -> gf2.BitMatrix:
    return gf2.BitMatrix(
        n_rows, n_cols, tuple(rng.getrandbits(n_cols) if n_cols else 0 for _ in range(n_rows))
    )


def random_code(rng: random.Random, n: int, k: int) -> codes.LinearCode:
    """A uniformly-ish random [n, k] code (rejection on rank)."""
    while True:
        c = codes.from_generator(random_matrix(rng, k, n))
        if c.k == k:
            return c


def span_set(rows) -> set[int]:
    """All GF(2) combinations of the given packed rows, by set doubling."""
    out = {0}
    for r in rows:
        out |= {x ^ r for x in out}
    return out


def code_span(c: codes.LinearCode) -> set[int]:
    return span_set(c.generator.rows)


def naive_min_distance(c: codes.LinearCode) -> int:
    return min(bin(w).count("1") for w in code_span(c) if w)
