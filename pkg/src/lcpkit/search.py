"""Desk-scale exhaustive machinery: subspace streams, best distances, and
the optimal-security-parameter decision for small (n, k).

Everything is enumeration-backed.  A k-dimensional subspace of F_2^n is
visited exactly once as its canonical RREF generator, so counts can be
checked against the Gaussian binomial and witnesses are reproducible.
Values that fall outside the enumeration budget are never guessed: they
come from a user-supplied table file or stay unknown, and every table entry
carries its provenance.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .gf2 import BitMatrix, multiply, rank, transpose
from . import codes
from .codes import LinearCode
from . import lcp
from .lcp import LcpCertificate

__all__ = [
    "BudgetExceeded",
    "DEFAULT_SUBSPACE_BUDGET",
    "DlTable",
    "DlcpResult",
    "GuendaReport",
    "OptimalCodesReport",
    "best_distance",
    "d_lcp_exact_tiny",
    "enumerate_subspaces",
    "gaussian_binomial",
    "guenda_conjecture_check",
    "lcp_security_search",
    "optimal_codes_report",
]

DEFAULT_SUBSPACE_BUDGET = 10**7

PROVENANCE_COMPUTED = "computed"
PROVENANCE_USER = "user-supplied"


class BudgetExceeded(RuntimeError):
    """The requested enumeration is larger than the configured budget."""


def gaussian_binomial(n: int, k: int) -> int:
    """Number of k-dimensional subspaces of F_2^n."""
    if k < 0 or k > n:
        return 0
    num = 1
    den = 1
    for i in range(k):
        num *= (1 << n) - (1 << i)
        den *= (1 << k) - (1 << i)
    return num // den


def enumerate_subspaces(
    n: int, k: int, budget: int = DEFAULT_SUBSPACE_BUDGET
) -> Iterator[LinearCode]:
    """Every k-dimensional subspace of F_2^n exactly once, as canonical RREF
    generators.  Pivot sets advance in colexicographic order and the free
    entries count up, so the stream order is deterministic.
    """
    total = gaussian_binomial(n, k)
    if total > budget:
        raise BudgetExceeded(f"{total} subspaces of dimension {k} in F_2^{n} exceed budget {budget}")
    if n < 1:
        raise ValueError("ambient length must be at least 1")
    if k == 0:
        yield codes.zero_code(n)
        return
    pivot_sets = sorted(combinations(range(n), k), key=lambda s: tuple(reversed(s)))
    for pivots in pivot_sets:
        pivot_set = set(pivots)
        free = [
            (i, j)
            for i in range(k)
            for j in range(pivots[i] + 1, n)
            if j not in pivot_set
        ]
        base = tuple(1 << p for p in pivots)
        for counter in range(1 << len(free)):
            rows = list(base)
            c = counter
            while c:
                low = c & -c
                i, j = free[low.bit_length() - 1]
                rows[i] |= 1 << j
                c ^= low
            yield LinearCode(n, k, BitMatrix(k, n, tuple(rows)))


@dataclass
class DlTable:
    """Best minimum distances d_L(n, k), each entry tagged with provenance
    ('computed' here, or 'user-supplied' from a table file)."""

    entries: dict[tuple[int, int], tuple[int, str]] = field(default_factory=dict)

    def get(self, n: int, k: int) -> Optional[int]:
        hit = self.entries.get((n, k))
        return hit[0] if hit else None

    def provenance(self, n: int, k: int) -> Optional[str]:
        hit = self.entries.get((n, k))
        return hit[1] if hit else None

    def set(self, n: int, k: int, d: int, provenance: str) -> None:
        if provenance not in (PROVENANCE_COMPUTED, PROVENANCE_USER):
            raise ValueError(f"unknown provenance {provenance!r}")
        self._check_monotone(n, k, d)
        self.entries[(n, k)] = (d, provenance)

    def _check_monotone(self, n: int, k: int, d: int) -> None:
        # d_L decreases in k and increases in n.
        above = self.get(n, k - 1)
        if above is not None and above < d:
            raise ValueError(f"d_L({n},{k})={d} exceeds d_L({n},{k - 1})={above}")
        below = self.get(n, k + 1)
        if below is not None and below > d:
            raise ValueError(f"d_L({n},{k})={d} is below d_L({n},{k + 1})={below}")
        shorter = self.get(n - 1, k)
        if shorter is not None and shorter > d:
            raise ValueError(f"d_L({n},{k})={d} is below d_L({n - 1},{k})={shorter}")
        longer = self.get(n + 1, k)
        if longer is not None and longer < d:
            raise ValueError(f"d_L({n},{k})={d} exceeds d_L({n + 1},{k})={longer}")

    def save(self, path) -> None:
        lines = [
            f"{n} {k} {d} {prov}"
            for (n, k), (d, prov) in sorted(self.entries.items())
        ]
        with open(path, "w", encoding="ascii") as fh:
            fh.write("\n".join(lines) + ("\n" if lines else ""))

    @classmethod
    def load(cls, path) -> "DlTable":
        table = cls()
        with open(path, "r", encoding="ascii") as fh:
            for lineno, raw in enumerate(fh, start=1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split()
                if len(parts) != 4:
                    raise ValueError(f"{path}: line {lineno}: expected 'n k d provenance'")
                n, k, d = (int(x) for x in parts[:3])
                table.set(n, k, d, parts[3])
        return table


def best_distance(
    n: int,
    k: int,
    budget: int = DEFAULT_SUBSPACE_BUDGET,
    table: DlTable | None = None,
) -> int:
    """d_L(n, k) by exhaustive scan; cached into ``table`` when given."""
    if table is not None:
        hit = table.get(n, k)
        if hit is not None:
            return hit
    best = 0
    for code in enumerate_subspaces(n, k, budget):
        d = codes.min_distance(code)
        if d > best:
            best = d
    if table is not None:
        table.set(n, k, best, PROVENANCE_COMPUTED)
    return best


@dataclass(frozen=True)
class OptimalCodesReport:
    """Census of the [n, k] subspaces with minimum distance exactly d."""

    n: int
    k: int
    d: int
    count_total: int
    count_even_like_and_contains_one: int
    witnesses: tuple[LinearCode, ...]  # codes that are odd-like or omit the all-one vector

    @property
    def all_even_like_and_contain_one(self) -> bool:
        return self.count_total == self.count_even_like_and_contains_one


def optimal_codes_report(
    n: int,
    k: int,
    d: int,
    budget: int = DEFAULT_SUBSPACE_BUDGET,
    max_witnesses: int = 16,
) -> OptimalCodesReport:
    total = 0
    good = 0
    witnesses: list[LinearCode] = []
    for code in enumerate_subspaces(n, k, budget):
        if codes.min_distance(code) != d:
            continue
        total += 1
        if codes.is_even_like(code) and codes.contains_all_one(code):
            good += 1
        elif len(witnesses) < max_witnesses:
            witnesses.append(code)
    return OptimalCodesReport(n, k, d, total, good, tuple(witnesses))


@dataclass(frozen=True)
class DlcpResult:
    """Exact optimal security parameter for [n, k] pairs at tiny scale.

    d_lcp equals d_l when some distance-optimal code keeps the all-one
    vector out of its hull (a constructive certificate is attached), and
    d_l - 1 when every optimal code is even-like and contains the all-one
    vector.
    """

    n: int
    k: int
    d_l: int
    d_lcp: int
    certificate: LcpCertificate | None
    witness: LinearCode | None


def d_lcp_exact_tiny(n: int, k: int, budget: int = DEFAULT_SUBSPACE_BUDGET) -> DlcpResult:
    best = 0
    witness: LinearCode | None = None
    all_blocked = True
    for code in enumerate_subspaces(n, k, budget):
        d = codes.min_distance(code)
        if d > best:
            best = d
            witness = None
            all_blocked = True
        if d == best:
            # 1 in hull(C) iff C contains the all-one vector and is even-like.
            blocked = codes.is_even_like(code) and codes.contains_all_one(code)
            if not blocked and witness is None:
                witness = code
                all_blocked = False
    if all_blocked or witness is None:
        return DlcpResult(n, k, best, best - 1, None, None)
    cert = lcp.hull_shift_pair(witness, 0)
    cert = lcp.with_security_parameter(cert, witness, witness)
    return DlcpResult(n, k, best, best, cert, witness)


def lcp_security_search(
    n: int,
    k: int,
    target_d: int,
    budget: int = DEFAULT_SUBSPACE_BUDGET,
    seed: int = 0,
) -> Optional[tuple[LcpCertificate, tuple[LinearCode, LinearCode]]]:
    """Find C with d(C) >= target_d and the all-one vector outside hull(C),
    then close it into a verified pair (C, (sigma(C))-dual).

    Exhaustive below the subspace budget, seeded random sampling above;
    returns None when the budget runs out with no witness.
    """
    def attempt(code: LinearCode):
        if codes.min_distance(code) < target_d:
            return None
        if codes.is_even_like(code) and codes.contains_all_one(code):
            return None
        cert = lcp.hull_shift_pair(code, 0)
        cert = lcp.with_security_parameter(cert, code, code)
        pair = (code, codes.dual(codes.permute(code, cert.sigma)))
        return cert, pair

    if gaussian_binomial(n, k) <= budget:
        for code in enumerate_subspaces(n, k, budget):
            hit = attempt(code)
            if hit is not None:
                return hit
        return None
    rng = random.Random(seed)
    for _ in range(budget):
        rows = [rng.getrandbits(n) for _ in range(k)]
        code = codes.from_generator(BitMatrix(k, n, tuple(r & ((1 << n) - 1) for r in rows)))
        if code.k != k:
            continue
        hit = attempt(code)
        if hit is not None:
            return hit
    return None


@dataclass(frozen=True)
class GuendaReport:
    """Existence, per target dimension, of an intersection pair of codes
    with the stated parameters."""

    n: int
    k1: int
    k2: int
    d1: int
    d2: int
    count1: int
    count2: int
    exists: dict[int, bool]
    witnesses: dict[int, tuple[LinearCode, LinearCode]]

    @property
    def ell_range(self) -> range:
        low = max(0, self.k1 + self.k2 - self.n)
        return range(low, min(self.k1, self.k2) + 1)


def guenda_conjecture_check(
    n: int,
    k1: int,
    k2: int,
    d1: int,
    d2: int,
    budget: int = DEFAULT_SUBSPACE_BUDGET,
) -> GuendaReport:
    """Exhaustively decide, for each ell in [k1+k2-n, min(k1,k2)] clipped at
    0, whether codes C1 of exact parameters [n,k1,d1] and C2 of [n,k2,d2]
    exist with dim(C1 meet C2) = ell."""
    codes1 = [c for c in enumerate_subspaces(n, k1, budget) if codes.min_distance(c) == d1]
    if (k2, d2) == (k1, d1):
        codes2 = codes1
    else:
        codes2 = [c for c in enumerate_subspaces(n, k2, budget) if codes.min_distance(c) == d2]
    duals2 = [transpose(codes.dual(c).generator) for c in codes2]
    low = max(0, k1 + k2 - n)
    high = min(k1, k2)
    exists = {ell: False for ell in range(low, high + 1)}
    witnesses: dict[int, tuple[LinearCode, LinearCode]] = {}
    missing = len(exists)
    for c1 in codes1:
        g1 = c1.generator
        for c2, h2t in zip(codes2, duals2):
            ell = k1 - rank(multiply(g1, h2t))
            if ell in exists and not exists[ell]:
                exists[ell] = True
                witnesses[ell] = (c1, c2)
                missing -= 1
                if missing == 0:
                    return GuendaReport(
                        n, k1, k2, d1, d2, len(codes1), len(codes2), exists, witnesses
                    )
    return GuendaReport(n, k1, k2, d1, d2, len(codes1), len(codes2), exists, witnesses)
