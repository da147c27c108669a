"""Binary linear [n,k] codes held as canonical generator matrices.

A code is the row space of its generator; the stored generator is the RREF
of whatever matrix it was built from, so two ``LinearCode`` values are equal
exactly when they are the same subspace.  Duals come from a kernel
computation, intersections from duals (one well-tested primitive reused),
and distances from a Gray-code sweep over all nonzero codewords.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import (
    BitMatrix,
    DimensionMismatch,
    Permutation,
    _lsb_index,
    _reduce_row,
    _rref_ints,
    apply_permutation,
    concat_rows,
    multiply,
    rank,
    remove_columns,
    right_kernel_basis,
    transpose,
)

__all__ = [
    "DEFAULT_ENUMERATION_BOUND",
    "EnumerationBoundExceeded",
    "LinearCode",
    "WeightDistribution",
    "contains",
    "contains_all_one",
    "dual",
    "from_generator",
    "full_space",
    "hull",
    "intersection",
    "intersection_dim_via_rank",
    "is_even_like",
    "iter_codewords",
    "min_distance",
    "permute",
    "puncture",
    "security_parameter",
    "sum_code",
    "weight_distribution",
    "zero_code",
    "zero_extend",
]

# Codeword enumeration is exponential in k; anything past this needs an
# explicit opt-in from the caller.
DEFAULT_ENUMERATION_BOUND = 28


class EnumerationBoundExceeded(ValueError):
    """Dimension too large for exhaustive codeword enumeration."""


@dataclass(frozen=True)
class LinearCode:
    """[n,k] binary code; ``generator`` is full-rank RREF (canonical)."""

    n: int
    k: int
    generator: BitMatrix

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("code length must be at least 1")
        g = self.generator
        if g.n_rows != self.k or g.n_cols != self.n:
            raise ValueError("generator shape disagrees with (n, k)")
        prev = -1
        pivots = []
        for r in g.rows:
            if r == 0:
                raise ValueError("generator has a zero row; not canonical")
            p = _lsb_index(r)
            if p <= prev:
                raise ValueError("generator rows not in RREF order")
            prev = p
            pivots.append(p)
        for i, p in enumerate(pivots):
            for t, r in enumerate(g.rows):
                if t != i and (r >> p) & 1:
                    raise ValueError("pivot column not reduced; generator not canonical")

    @property
    def pivots(self) -> tuple[int, ...]:
        return tuple(_lsb_index(r) for r in self.generator.rows)


def from_generator(m: BitMatrix) -> LinearCode:
    """Canonical code spanned by the rows of m; dependent rows dropped."""
    if m.n_cols < 1:
        raise ValueError("code length must be at least 1")
    work, _ = _rref_ints(m.rows)
    return LinearCode(m.n_cols, len(work), BitMatrix(len(work), m.n_cols, tuple(work)))


def zero_code(n: int) -> LinearCode:
    return LinearCode(n, 0, BitMatrix(0, n, ()))


def full_space(n: int) -> LinearCode:
    return LinearCode(n, n, BitMatrix.identity(n))


def contains(c: LinearCode, word: int) -> bool:
    """Membership of a packed word in the code."""
    return _reduce_row(word, c.generator.rows, c.pivots) == 0


def dual(c: LinearCode) -> LinearCode:
    """All vectors orthogonal to every codeword; dimension n - k."""
    return from_generator(right_kernel_basis(c.generator))


def sum_code(c1: LinearCode, c2: LinearCode) -> LinearCode:
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    return from_generator(concat_rows(c1.generator, c2.generator))


def intersection(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """C1 meet C2, computed as the dual of the sum of the duals."""
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    return dual(sum_code(dual(c1), dual(c2)))


def hull(c: LinearCode) -> LinearCode:
    return intersection(c, dual(c))


def intersection_dim_via_rank(c1: LinearCode, c2: LinearCode) -> int:
    """dim(C1 meet C2) as k1 - rank(G1 @ H2^T), no subspace construction."""
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    h2 = dual(c2).generator
    return c1.k - rank(multiply(c1.generator, transpose(h2)))


def iter_codewords(c: LinearCode):
    """All 2^k codewords, Gray ordered (one row XOR per step), starting at 0."""
    word = 0
    yield word
    rows = c.generator.rows
    for m in range(1, 1 << c.k):
        word ^= rows[_lsb_index(m)]
        yield word


def min_distance(c: LinearCode, max_dimension: int = DEFAULT_ENUMERATION_BOUND) -> int:
    """Exact minimum nonzero weight by Gray-code enumeration."""
    if c.k == 0:
        raise ValueError("the zero code has no nonzero codeword")
    if c.k > max_dimension:
        raise EnumerationBoundExceeded(f"k={c.k} exceeds enumeration bound {max_dimension}")
    rows = c.generator.rows
    word = 0
    best = c.n
    for m in range(1, 1 << c.k):
        word ^= rows[_lsb_index(m)]
        w = word.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    return best


@dataclass(frozen=True)
class WeightDistribution:
    """Codeword counts by Hamming weight, A_0 .. A_n."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.counts or self.counts[0] != 1:
            raise ValueError("A_0 must be 1")
        total = sum(self.counts)
        if total & (total - 1):
            raise ValueError("total codeword count must be a power of two")

    @property
    def min_distance(self) -> int:
        for w, a in enumerate(self.counts):
            if w > 0 and a > 0:
                return w
        raise ValueError("the zero code has no nonzero codeword")


def weight_distribution(
    c: LinearCode, max_dimension: int = DEFAULT_ENUMERATION_BOUND
) -> WeightDistribution:
    if c.k > max_dimension:
        raise EnumerationBoundExceeded(f"k={c.k} exceeds enumeration bound {max_dimension}")
    counts = [0] * (c.n + 1)
    for word in iter_codewords(c):
        counts[word.bit_count()] += 1
    return WeightDistribution(tuple(counts))


def is_even_like(c: LinearCode) -> bool:
    """True iff every codeword has even weight (the all-one vector lies in
    the dual); decided from the generator rows alone."""
    return all(r.bit_count() % 2 == 0 for r in c.generator.rows)


def contains_all_one(c: LinearCode) -> bool:
    return contains(c, (1 << c.n) - 1)


def permute(c: LinearCode, p: Permutation) -> LinearCode:
    return from_generator(apply_permutation(c.generator, p))


def puncture(c: LinearCode, positions) -> LinearCode:
    """Delete the given coordinates."""
    return from_generator(remove_columns(c.generator, indices=list(positions)))


def zero_extend(c: LinearCode) -> LinearCode:
    """{0} x C: prepend an always-zero coordinate."""
    g = c.generator
    rows = tuple(r << 1 for r in g.rows)
    return LinearCode(c.n + 1, c.k, BitMatrix(c.k, c.n + 1, rows))


def security_parameter(
    c1: LinearCode, c2: LinearCode, max_dimension: int = DEFAULT_ENUMERATION_BOUND
) -> int:
    """min{d(C1), d(C2^perp)} — the resistance level a pair buys in
    direct-sum masking.  The pair need not be complementary."""
    return min(min_distance(c1, max_dimension), min_distance(dual(c2), max_dimension))
