"""Classical generator-matrix families and Griesmer-meeting codes built by
puncturing subspace columns out of repeated simplex matrices.

Column conventions are fixed so constructions are bit-exact: the simplex
matrix S_k lists the nonzero vectors of F_2^k as columns in increasing
integer order (bit r of the value is row r), and puncturing removes columns
by value multiset, so the same parameters always yield the same matrix.
Constructed parameters are never trusted: every code is validated by rank
and full weight enumeration before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .gf2 import BitMatrix, concat_columns, remove_columns
from . import codes
from .codes import LinearCode
from . import lcp
from .lcp import LcpCertificate
from . import search

__all__ = [
    "SolomonStifflerError",
    "SolomonStifflerSpec",
    "belov_condition",
    "choose_subspaces",
    "decompose_deficiency",
    "griesmer_bound",
    "reed_muller_1",
    "repeated_simplex",
    "simplex_matrix",
    "solomon_stiffler_code",
    "solomon_stiffler_matrices",
    "solomon_stiffler_spec",
    "ss_lcp",
]


class SolomonStifflerError(ValueError):
    """Construction hypotheses violated, or a built code failed validation."""


def simplex_matrix(k: int) -> BitMatrix:
    """k x (2^k - 1) matrix whose columns are the nonzero vectors of F_2^k
    in increasing integer order."""
    if k < 1:
        raise ValueError("k must be at least 1")
    cols = 2**k - 1
    rows = []
    for r in range(k):
        row = 0
        for j in range(cols):
            row |= (((j + 1) >> r) & 1) << j
        rows.append(row)
    return BitMatrix(k, cols, tuple(rows))


def repeated_simplex(s: int, k: int) -> BitMatrix:
    """s side-by-side copies of the simplex matrix."""
    if s < 1:
        raise ValueError("s must be at least 1")
    out = simplex_matrix(k)
    single = out
    for _ in range(s - 1):
        out = concat_columns(out, single)
    return out


def reed_muller_1(k: int) -> LinearCode:
    """First-order Reed-Muller code: [2^k, k+1, 2^{k-1}], contains the
    all-one vector.  Generator: the all-one row over a zero column next to
    the simplex matrix."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = 2**k
    s = simplex_matrix(k)
    rows = [(1 << n) - 1]
    rows.extend(r << 1 for r in s.rows)
    return codes.from_generator(BitMatrix(k + 1, n, tuple(rows)))


def griesmer_bound(k: int, d: int) -> int:
    """g(k, d) = sum of ceil(d / 2^i) for i < k; a lower bound on the length
    of any [n, k, d] binary code."""
    if k < 1 or d < 1:
        raise ValueError("k and d must be at least 1")
    return sum(-(-d // (1 << i)) for i in range(k))


def decompose_deficiency(k: int, d: int) -> tuple[int, tuple[int, ...]]:
    """s = ceil(d / 2^{k-1}) and the unique exponents k > u_1 > ... > u_p >= 1
    with s*2^{k-1} - d = sum of 2^{u_i - 1}; empty when d is a multiple of
    2^{k-1}."""
    if k < 2 or d < 1:
        raise ValueError("need k >= 2 and d >= 1")
    half = 1 << (k - 1)
    s = -(-d // half)
    deficiency = s * half - d
    u = []
    bit = deficiency
    while bit:
        low = bit & -bit
        u.append(low.bit_length())  # 2^(u-1) = low
        bit ^= low
    u.sort(reverse=True)
    return s, tuple(u)


def belov_condition(s: int, k: int, u: tuple[int, ...]) -> bool:
    """sum of the first min(s+1, p) exponents is at most s*k (vacuous for
    an empty exponent list)."""
    p = len(u)
    return sum(u[: min(s + 1, p)]) <= s * k


def _span_nonzero(basis_rows: tuple[int, ...]) -> tuple[int, ...]:
    """All nonzero vectors spanned by the given rows, ascending."""
    span = {0}
    for r in basis_rows:
        span |= {v ^ r for v in span}
    span.discard(0)
    return tuple(sorted(span))


@dataclass(frozen=True)
class SolomonStifflerSpec:
    """Parameters and chosen subspaces for one punctured repeated simplex.

    Invariants checked at construction: the deficiency decomposition
    s*2^{k-1} - d = sum of 2^{u_i - 1} holds, each basis has the declared
    dimension, and no nonzero vector lies in more than s of the chosen
    subspaces (it cannot be punctured more often than it occurs).
    """

    k: int
    d: int
    s: int
    u: tuple[int, ...]
    subspaces: tuple[BitMatrix, ...]

    def __post_init__(self) -> None:
        if self.s < 1 or self.k < 2:
            raise ValueError("need s >= 1 and k >= 2")
        if list(self.u) != sorted(self.u, reverse=True) or len(set(self.u)) != len(self.u):
            raise ValueError("exponents must be strictly decreasing")
        if self.u and not (self.k > self.u[0] and self.u[-1] >= 1):
            raise ValueError("exponents must satisfy k > u_1 > ... > u_p >= 1")
        if self.s * (1 << (self.k - 1)) - self.d != sum(1 << (ui - 1) for ui in self.u):
            raise ValueError("deficiency decomposition does not match (k, d, s, u)")
        if len(self.subspaces) != len(self.u):
            raise ValueError("one subspace basis per exponent required")
        counts: dict[int, int] = {}
        for ui, base in zip(self.u, self.subspaces):
            if base.n_cols != self.k:
                raise ValueError("subspace basis has wrong ambient dimension")
            vecs = _span_nonzero(base.rows)
            if len(vecs) != (1 << ui) - 1:
                raise ValueError(f"subspace basis does not have dimension {ui}")
            for v in vecs:
                counts[v] = counts.get(v, 0) + 1
                if counts[v] > self.s:
                    raise ValueError(
                        f"vector {v} lies in {counts[v]} subspaces but only {self.s} copies exist"
                    )


def choose_subspaces(k: int, s: int, u: tuple[int, ...]) -> tuple[BitMatrix, ...]:
    """Backtracking choice of one u_i-dimensional subspace of F_2^k per
    exponent, canonical bases in ascending lexicographic order.

    Pairwise-disjoint nonzero sets are preferred; when dimension counting
    rules that out, any choice where no vector is claimed more than s times
    is accepted (it is punctured from distinct simplex copies).
    """
    if not belov_condition(s, k, u):
        raise SolomonStifflerError(
            f"Belov condition fails: sum of first min(s+1,p) exponents > {s * k}"
        )
    if not u:
        return ()
    candidates = {
        dim: sorted(
            (c.generator for c in search.enumerate_subspaces(k, dim)),
            key=lambda m: m.rows,
        )
        for dim in set(u)
    }
    spans = {
        dim: [_span_nonzero(m.rows) for m in candidates[dim]] for dim in candidates
    }

    def backtrack(max_multiplicity: int):
        counts: dict[int, int] = {}
        chosen: list[BitMatrix] = []

        def step(idx: int) -> bool:
            if idx == len(u):
                return True
            dim = u[idx]
            for base, vecs in zip(candidates[dim], spans[dim]):
                if any(counts.get(v, 0) + 1 > max_multiplicity for v in vecs):
                    continue
                for v in vecs:
                    counts[v] = counts.get(v, 0) + 1
                chosen.append(base)
                if step(idx + 1):
                    return True
                chosen.pop()
                for v in vecs:
                    counts[v] -= 1
            return False

        return tuple(chosen) if step(0) else None

    result = backtrack(1) or backtrack(s)
    if result is None:
        raise SolomonStifflerError(
            f"no subspace choice with multiplicity at most {s} for k={k}, u={u}"
        )
    return result


def solomon_stiffler_spec(k: int, d: int) -> SolomonStifflerSpec:
    """Decompose (k, d) and pick subspaces; the one-stop spec builder."""
    s, u = decompose_deficiency(k, d)
    subspaces = choose_subspaces(k, s, u)
    return SolomonStifflerSpec(k, d, s, u, subspaces)


def solomon_stiffler_matrices(spec: SolomonStifflerSpec) -> tuple[BitMatrix, BitMatrix]:
    """(G, G'): the punctured generator and the punctured-away complement.

    Both index messages the same way, so codeword weights over G and G' sum
    to s*2^{k-1} for every nonzero message.
    """
    full = repeated_simplex(spec.s, spec.k)
    removed: list[int] = []
    prime_cols: list[int] = []
    for base in spec.subspaces:
        vecs = _span_nonzero(base.rows)
        removed.extend(vecs)
        prime_cols.extend(vecs)
    g = remove_columns(full, values=removed)
    rows = []
    for r in range(spec.k):
        row = 0
        for j, v in enumerate(prime_cols):
            row |= ((v >> r) & 1) << j
        rows.append(row)
    g_prime = BitMatrix(spec.k, len(prime_cols), tuple(rows))
    return g, g_prime


def solomon_stiffler_code(spec: SolomonStifflerSpec) -> LinearCode:
    """Build and validate the [g(k,d), k, d] code for the spec; raises if
    the rank or the enumerated minimum distance falls short."""
    g, _ = solomon_stiffler_matrices(spec)
    expected_n = spec.s * (2**spec.k - 1) - sum((1 << ui) - 1 for ui in spec.u)
    code = codes.from_generator(g)
    if code.n != expected_n or expected_n != griesmer_bound(spec.k, spec.d):
        raise SolomonStifflerError(
            f"length {code.n} does not meet the Griesmer bound g({spec.k},{spec.d})"
        )
    if code.k != spec.k:
        raise SolomonStifflerError(f"rank collapsed to {code.k} after puncturing")
    d = codes.min_distance(code)
    if d != spec.d:
        raise SolomonStifflerError(f"minimum distance {d}, wanted {spec.d}; bad subspace choice")
    return code


def ss_lcp(k: int, d: int) -> tuple[LcpCertificate, tuple[LinearCode, LinearCode]]:
    """A verified [g(k,d), k] pair (C, (sigma(C))-dual) with security
    parameter exactly d, from the punctured repeated simplex.

    Requires s = ceil(d / 2^{k-1}) >= 2, k >= 2, and the Belov condition;
    under these the built code omits the all-one vector, so the pair always
    closes.
    """
    if k < 2:
        raise SolomonStifflerError(f"hypothesis k >= 2 fails: k={k}")
    s, u = decompose_deficiency(k, d)
    if s < 2:
        raise SolomonStifflerError(f"hypothesis s >= 2 fails: s={s} for d={d}, k={k}")
    if not belov_condition(s, k, u):
        raise SolomonStifflerError(
            f"Belov condition fails: sum of first min(s+1,p) exponents > {s * k}"
        )
    spec = SolomonStifflerSpec(k, d, s, u, choose_subspaces(k, s, u))
    code = solomon_stiffler_code(spec)
    if codes.contains_all_one(code):
        raise SolomonStifflerError("constructed code contains the all-one vector")
    cert = lcp.hull_shift_pair(code, 0)
    cert = lcp.with_security_parameter(cert, code, code)
    pair = (code, codes.dual(codes.permute(code, cert.sigma)))
    return cert, pair
