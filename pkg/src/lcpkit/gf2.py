"""Dense GF(2) linear algebra on bit-packed rows, plus coordinate permutations.

A matrix row is a Python int used as a little-endian bit vector: bit j holds
the entry in column j.  Row addition is XOR and row weight is
``int.bit_count()``; those two operations are the inner loop of every
elimination routine here.  All values are immutable and every operation is a
pure function, so sharing between threads needs no coordination.

Sizes are desk scale (tens of columns, enumeration-bounded); there is no
sparse or block-recursive path.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "BitMatrix",
    "DimensionMismatch",
    "MatrixFormatError",
    "Permutation",
    "apply_permutation",
    "compose",
    "concat_columns",
    "concat_rows",
    "format_matrix_text",
    "identity_permutation",
    "inverse",
    "multiply",
    "parse_matrix_text",
    "permute_row",
    "rank",
    "remove_columns",
    "right_kernel_basis",
    "rref",
    "transpose",
    "transposition",
]


class DimensionMismatch(ValueError):
    """Operand shapes do not allow the requested operation."""


class MatrixFormatError(ValueError):
    """A matrix text document is malformed."""


@dataclass(frozen=True)
class BitMatrix:
    """Immutable binary matrix; ``rows[i]`` packs row i little-endian.

    Empty matrices (zero rows and/or zero columns) are legal values: the
    kernel of a full-rank square matrix, for instance, is a 0 x n matrix.
    Padding bits above ``n_cols`` are rejected at construction, so row ints
    compare and hash structurally.
    """

    n_rows: int
    n_cols: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n_rows < 0 or self.n_cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.rows) != self.n_rows:
            raise ValueError(f"expected {self.n_rows} rows, got {len(self.rows)}")
        mask = (1 << self.n_cols) - 1
        for r in self.rows:
            if r < 0 or r & ~mask:
                raise ValueError("row has bits outside the column range")

    @classmethod
    def from_rows(cls, rows: Iterable[int], n_cols: int) -> "BitMatrix":
        rows = tuple(rows)
        return cls(len(rows), n_cols, rows)

    @classmethod
    def from_bits(cls, bits: Sequence[Sequence[int]]) -> "BitMatrix":
        """Build from a list of 0/1 lists (row-major)."""
        if not bits:
            raise ValueError("from_bits needs at least one row; use from_rows for empty matrices")
        n_cols = len(bits[0])
        rows = []
        for line in bits:
            if len(line) != n_cols:
                raise ValueError("ragged rows")
            rows.append(_pack_bits(line))
        return cls(len(rows), n_cols, tuple(rows))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zeros(cls, n_rows: int, n_cols: int) -> "BitMatrix":
        return cls(n_rows, n_cols, (0,) * n_rows)

    def bit(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def column(self, j: int) -> int:
        """Column j packed little-endian over row indices."""
        if not 0 <= j < self.n_cols:
            raise IndexError(f"column {j} out of range")
        out = 0
        for i, r in enumerate(self.rows):
            out |= ((r >> j) & 1) << i
        return out

    def columns(self) -> list[int]:
        return [self.column(j) for j in range(self.n_cols)]

    def to_bits(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.n_cols)] for r in self.rows]

    def is_zero(self) -> bool:
        return all(r == 0 for r in self.rows)


def _pack_bits(bits: Sequence[int]) -> int:
    out = 0
    for j, b in enumerate(bits):
        if b not in (0, 1):
            raise ValueError("entries must be 0 or 1")
        out |= b << j
    return out


def _lsb_index(x: int) -> int:
    return (x & -x).bit_length() - 1


def _rref_ints(rows: Iterable[int]) -> tuple[list[int], list[int]]:
    """Insertion RREF.  Returns (reduced nonzero rows, pivot columns), both
    sorted by pivot; fully reduced, so reducing a new row against the basis
    is a single pass."""
    work: list[int] = []
    pivots: list[int] = []
    for r in rows:
        r = _reduce_row(r, work, pivots)
        if r == 0:
            continue
        p = _lsb_index(r)
        for i, b in enumerate(work):
            if (b >> p) & 1:
                work[i] = b ^ r
        at = bisect.bisect_left(pivots, p)
        pivots.insert(at, p)
        work.insert(at, r)
    return work, pivots


def _reduce_row(r: int, work: Sequence[int], pivots: Sequence[int]) -> int:
    """Reduce r against a fully reduced basis (one pass suffices)."""
    for p, b in zip(pivots, work):
        if (r >> p) & 1:
            r ^= b
    return r


def rref(m: BitMatrix) -> tuple[BitMatrix, tuple[int, ...]]:
    """Reduced row-echelon form over GF(2); zero rows dropped.

    Returns (R, pivot_columns); pivot columns are strictly increasing and
    are the lexicographically first independent column set of m.
    """
    work, pivots = _rref_ints(m.rows)
    return BitMatrix(len(work), m.n_cols, tuple(work)), tuple(pivots)


def rank(m: BitMatrix) -> int:
    _, pivots = _rref_ints(m.rows)
    return len(pivots)


def transpose(m: BitMatrix) -> BitMatrix:
    return BitMatrix(m.n_cols, m.n_rows, tuple(m.columns()))


def multiply(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """GF(2) product a @ b."""
    if a.n_cols != b.n_rows:
        raise DimensionMismatch(f"cannot multiply {a.n_rows}x{a.n_cols} by {b.n_rows}x{b.n_cols}")
    out = []
    for ra in a.rows:
        acc = 0
        r = ra
        while r:
            acc ^= b.rows[_lsb_index(r)]
            r &= r - 1
        out.append(acc)
    return BitMatrix(a.n_rows, b.n_cols, tuple(out))


def right_kernel_basis(m: BitMatrix) -> BitMatrix:
    """Basis of {x : m @ x^T = 0}, one row per free column of rref(m).

    Row count is n_cols - rank(m).
    """
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    rows = []
    for f in range(m.n_cols):
        if f in pivot_set:
            continue
        x = 1 << f
        for i, p in enumerate(pivots):
            if (reduced.rows[i] >> f) & 1:
                x |= 1 << p
        rows.append(x)
    return BitMatrix(len(rows), m.n_cols, tuple(rows))


def concat_columns(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """(a | b): columns of b appended after those of a."""
    if a.n_rows != b.n_rows:
        raise DimensionMismatch("row counts differ")
    rows = tuple(ra | (rb << a.n_cols) for ra, rb in zip(a.rows, b.rows))
    return BitMatrix(a.n_rows, a.n_cols + b.n_cols, rows)


def concat_rows(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    """Rows of b stacked under those of a."""
    if a.n_cols != b.n_cols:
        raise DimensionMismatch("column counts differ")
    return BitMatrix(a.n_rows + b.n_rows, a.n_cols, a.rows + b.rows)


def _drop_columns(m: BitMatrix, drop: set[int]) -> BitMatrix:
    keep = [j for j in range(m.n_cols) if j not in drop]
    rows = []
    for r in m.rows:
        out = 0
        for t, j in enumerate(keep):
            out |= ((r >> j) & 1) << t
        rows.append(out)
    return BitMatrix(m.n_rows, len(keep), tuple(rows))


def remove_columns(
    m: BitMatrix,
    *,
    indices: Iterable[int] | None = None,
    values: Iterable[int] | None = None,
) -> BitMatrix:
    """Remove columns by index list or by a multiset of packed column values.

    Value-based removal deletes, for each requested value, its leftmost
    still-present occurrences; surviving columns keep their order.  Asking
    for more copies of a value than the matrix holds is an error.
    """
    if (indices is None) == (values is None):
        raise ValueError("pass exactly one of indices= or values=")
    if indices is not None:
        drop = set()
        for j in indices:
            if not 0 <= j < m.n_cols:
                raise IndexError(f"column {j} out of range")
            if j in drop:
                raise ValueError(f"column {j} listed twice")
            drop.add(j)
        return _drop_columns(m, drop)
    want: dict[int, int] = {}
    for v in values:
        want[v] = want.get(v, 0) + 1
    drop = set()
    for j in range(m.n_cols):
        v = m.column(j)
        if want.get(v, 0) > 0:
            want[v] -= 1
            drop.add(j)
    short = {v: c for v, c in want.items() if c > 0}
    if short:
        raise ValueError(f"matrix lacks requested column multiplicities: {short}")
    return _drop_columns(m, drop)


# ---------------------------------------------------------------------------
# permutations


@dataclass(frozen=True)
class Permutation:
    """Bijection on {0..n-1}; ``images[i]`` is where coordinate i lands.

    Applying p to a row vector puts the old entry at position i into
    position ``images[i]``.
    """

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        n = len(self.images)
        seen = [False] * n
        for j in self.images:
            if not 0 <= j < n or seen[j]:
                raise ValueError("images is not a bijection on {0..n-1}")
            seen[j] = True

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images))


def identity_permutation(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def transposition(n: int, i: int, j: int) -> Permutation:
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"positions {i},{j} out of range for n={n}")
    if i == j:
        raise ValueError("transposition needs two distinct positions")
    images = list(range(n))
    images[i], images[j] = j, i
    return Permutation(tuple(images))


def compose(p: Permutation, q: Permutation) -> Permutation:
    """p after q: coordinate i goes to p(q(i))."""
    if p.n != q.n:
        raise DimensionMismatch("permutation sizes differ")
    return Permutation(tuple(p.images[q.images[i]] for i in range(q.n)))


def inverse(p: Permutation) -> Permutation:
    images = [0] * p.n
    for i, j in enumerate(p.images):
        images[j] = i
    return Permutation(tuple(images))


def permute_row(row: int, p: Permutation) -> int:
    out = 0
    for i, j in enumerate(p.images):
        if (row >> i) & 1:
            out |= 1 << j
    return out


def apply_permutation(m: BitMatrix, p: Permutation) -> BitMatrix:
    """Permute coordinates of every row; column p(i) of the result is
    column i of m (right multiplication by the permutation matrix)."""
    if p.n != m.n_cols:
        raise DimensionMismatch(f"permutation on {p.n} points vs {m.n_cols} columns")
    return BitMatrix(m.n_rows, m.n_cols, tuple(permute_row(r, p) for r in m.rows))


# ---------------------------------------------------------------------------
# shared matrix text format: one row per line, characters 0/1, no separators;
# blank lines and lines starting with '#' are ignored.


def format_matrix_text(m: BitMatrix) -> str:
    if m.n_rows == 0:
        return f"# empty matrix with {m.n_cols} columns; no rows\n"
    lines = ["".join("1" if (r >> j) & 1 else "0" for j in range(m.n_cols)) for r in m.rows]
    return "\n".join(lines) + "\n"


def parse_matrix_text(text: str) -> BitMatrix:
    rows = []
    n_cols = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if set(line) - {"0", "1"}:
            raise MatrixFormatError(f"line {lineno}: characters other than 0/1")
        if n_cols is None:
            n_cols = len(line)
        elif len(line) != n_cols:
            raise MatrixFormatError(f"line {lineno}: expected {n_cols} columns, got {len(line)}")
        rows.append(_pack_bits([1 if c == "1" else 0 for c in line]))
    if n_cols is None:
        raise MatrixFormatError("no matrix rows found")
    return BitMatrix(len(rows), n_cols, tuple(rows))
