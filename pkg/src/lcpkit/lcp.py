"""Coordinate permutations that steer the intersection of a code pair.

For binary [n,k] codes C1, C2 write cross(C1, C2) = C1 meet C2-dual.  The
machinery here finds a permutation sigma with

    dim( C1 meet (sigma(C2))-dual ) = target

for every feasible target, by composing single transpositions that each
lower the dimension by exactly one.  Target 0 (a linear complementary pair)
is reachable iff the all-one vector lies in neither cross(C1, C2) nor
cross(C2, C1); that obstruction is permutation-invariant, so when it holds
no sigma exists and ``ConditionViolated`` is raised.  Prepending a zero
coordinate to both codes always clears the obstruction, hence
``build_lcp_padded`` never fails.

Every certificate is re-verified from scratch (subspace intersection via
the codes module, not the step trace) before being returned.  Each step is
chosen from an explicit case analysis on a block-normalized generator pair,
then checked by recomputation; should the analysis ever disagree with the
recomputation, the step is rescued by exhaustive transposition scan and a
warning is logged, so a transcription bug turns into noise, not a wrong
certificate.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from itertools import permutations as _all_permutations
from typing import Iterator, NamedTuple, Optional

from .gf2 import (
    BitMatrix,
    DimensionMismatch,
    Permutation,
    _lsb_index,
    apply_permutation,
    compose,
    identity_permutation,
    inverse,
    multiply,
    rank,
    rref,
    transpose,
    transposition,
)
from . import codes
from .codes import LinearCode

__all__ = [
    "CASE_LABELS",
    "ConditionViolated",
    "InternalConsistencyError",
    "LcpCertificate",
    "ReductionStep",
    "StandardForm",
    "UnequalDimensions",
    "build_lcp",
    "build_lcp_padded",
    "cross_intersection",
    "ell_pair",
    "exists_permutation_oracle",
    "final_step",
    "format_certificate",
    "front_cycle",
    "hull_shift_pair",
    "parse_certificate",
    "reduce_once",
    "standard_form",
    "verify_certificate",
    "with_security_parameter",
]

logger = logging.getLogger(__name__)

CASE_LABELS = ("Case1", "Subcase2_1", "Subcase2_2", "FinalStep", "HullShift")


class UnequalDimensions(ValueError):
    """The pair construction is only defined for equal-dimension codes."""


class InternalConsistencyError(RuntimeError):
    """A step predicted by the case analysis failed recomputation and no
    rescue was found; indicates a bug, never expected in normal operation."""


class ConditionViolated(Exception):
    """No permutation of C2 can make (C1, (sigma(C2))-dual) complementary.

    Happens exactly when the all-one vector lies in C1 meet C2-dual or in
    C2 meet C1-dual; both memberships are reported, along with the common
    dimension of the two cross intersections.
    """

    def __init__(self, one_in_c1_c2dual: bool, one_in_c2_c1dual: bool, intersection_dim: int):
        self.one_in_c1_c2dual = one_in_c1_c2dual
        self.one_in_c2_c1dual = one_in_c2_c1dual
        self.intersection_dim = intersection_dim
        sides = []
        if one_in_c1_c2dual:
            sides.append("C1 meet dual(C2)")
        if one_in_c2_c1dual:
            sides.append("C2 meet dual(C1)")
        super().__init__(
            "all-one vector lies in " + " and ".join(sides)
            + f"; cross intersection dimension {intersection_dim}"
        )


@dataclass(frozen=True)
class ReductionStep:
    """One recorded step: a transposition (swap=(i,j), 0-based, in the
    coordinates current at that step) or a front cycle (swap=length)."""

    case_label: str
    swap: tuple[int, int] | int
    dim_before: int
    dim_after: int

    def __post_init__(self) -> None:
        if self.case_label not in CASE_LABELS:
            raise ValueError(f"unknown case label {self.case_label!r}")
        if self.case_label == "HullShift":
            if not (0 <= self.dim_after <= self.dim_before):
                raise ValueError("hull shift must not raise the dimension")
        elif self.dim_after != self.dim_before - 1:
            raise ValueError("a transposition step must lower the dimension by exactly 1")


@dataclass(frozen=True)
class LcpCertificate:
    """A permutation sigma with dim(C1 meet (sigma(C2))-dual) = final_dim,
    plus the step trace that produced it.  ``verified`` means the dimension
    was recomputed from (C1, C2, sigma) alone."""

    n: int
    k: int
    sigma: Permutation
    trace: tuple[ReductionStep, ...]
    final_dim: int
    verified: bool
    security_parameter: int | None = None


class StandardForm(NamedTuple):
    """Block-normalized generators for a pair with cross dimension h.

    ``pi`` moves a set of h independent columns of cross(C2, C1) to the
    front.  ``g2`` generates pi(C2) with rows (I_h | A2) then (O | B2),
    the top block generating pi(C2) meet (pi(C1))-dual.  ``g1`` generates
    pi(C1) with its top h rows generating pi(C1) meet (pi(C2))-dual.
    """

    pi: Permutation
    g2: BitMatrix
    g1: BitMatrix
    h: int


def cross_intersection(c1: LinearCode, c2: LinearCode) -> LinearCode:
    """C1 meet dual(C2)."""
    return codes.intersection(c1, codes.dual(c2))


def _cross_dim_fast(c1: LinearCode, c2: LinearCode) -> int:
    """dim(C1 meet dual(C2)) = k1 - rank(G1 @ G2^T)."""
    return c1.k - rank(multiply(c1.generator, transpose(c2.generator)))


def _extend_with_rows(base: list[int], candidates) -> list[int]:
    """Residuals of candidate rows that grow the span of ``base`` (base is
    extended with reduced rows; returns the added rows in insertion order)."""
    work = list(base)
    pivots = [_lsb_index(r) for r in work]
    added = []
    for r in candidates:
        for p, b in zip(pivots, work):
            if (r >> p) & 1:
                r ^= b
        if r == 0:
            continue
        work.append(r)
        pivots.append(_lsb_index(r))
        added.append(r)
    return added


def standard_form(c1: LinearCode, c2: LinearCode) -> StandardForm:
    """Normalize a pair with h = dim(C2 meet C1-dual) >= 1 into the block
    shape the reduction cases operate on; all block facts are re-checked
    by rank computations before returning."""
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    if c1.k != c2.k:
        raise UnequalDimensions("block normalization needs equal dimensions")
    n, k = c1.n, c1.k
    cross2 = cross_intersection(c2, c1)
    h = cross2.k
    if h == 0:
        raise ValueError("cross intersection is trivial; nothing to normalize")

    # Its RREF pivots are the lexicographically first independent column set.
    pivots = list(cross2.pivots)
    rest = [j for j in range(n) if j not in set(pivots)]
    images = [0] * n
    for t, j in enumerate(pivots + rest):
        images[j] = t
    pi = Permutation(tuple(images))

    top2_m, top2_pivots = rref(apply_permutation(cross2.generator, pi))
    if top2_pivots != tuple(range(h)):
        raise InternalConsistencyError("front columns of the moved basis are not I_h")
    c2_pi = codes.permute(c2, pi)
    # Rows of pi(C2) cleared on the first h coordinates span the (O | B2) part.
    cleared = []
    for r in c2_pi.generator.rows:
        for t in range(h):
            if (r >> t) & 1:
                r ^= top2_m.rows[t]
        cleared.append(r)
    bottom2 = _extend_with_rows(list(top2_m.rows), cleared)
    g2 = BitMatrix(k, n, tuple(top2_m.rows) + tuple(bottom2))

    cross1 = cross_intersection(c1, c2)
    if cross1.k != h:
        raise InternalConsistencyError("cross intersection dimensions disagree")
    top1_rows, _ = rref(apply_permutation(cross1.generator, pi))
    c1_pi = codes.permute(c1, pi)
    bottom1 = _extend_with_rows(list(top1_rows.rows), c1_pi.generator.rows)
    g1 = BitMatrix(k, n, tuple(top1_rows.rows) + tuple(bottom1))

    top2 = BitMatrix(h, n, g2.rows[:h])
    top1 = BitMatrix(h, n, g1.rows[:h])
    if not multiply(top2, transpose(g1)).is_zero():
        raise InternalConsistencyError("(I_h A2) is not orthogonal to the G1 block")
    if not multiply(g2, transpose(top1)).is_zero():
        raise InternalConsistencyError("top of G1 is not orthogonal to the G2 block")
    if codes.from_generator(g2) != c2_pi or codes.from_generator(g1) != c1_pi:
        raise InternalConsistencyError("block generators span the wrong codes")
    return StandardForm(pi, g2, g1, h)


def _column_prefix(m: BitMatrix, j: int, depth: int) -> int:
    """Column j of m restricted to the first ``depth`` rows, packed."""
    out = 0
    for i in range(depth):
        out |= ((m.rows[i] >> j) & 1) << i
    return out


def _rescue_transposition(c1: LinearCode, c2: LinearCode, target: int) -> Permutation:
    n = c1.n
    for i in range(n):
        for j in range(i + 1, n):
            tau = transposition(n, i, j)
            if _cross_dim_fast(c1, codes.permute(c2, tau)) == target:
                return tau
    raise InternalConsistencyError(f"no transposition reaches cross dimension {target}")


def reduce_once(c1: LinearCode, c2: LinearCode) -> tuple[Permutation, ReductionStep]:
    """One transposition lowering dim(C1 meet C2-dual) from h >= 2 to h-1.

    The candidate pair comes from a case split on the top-left block A1 of
    the normalized G1 (two differing columns; A1 zero; A1 of rank one), with
    lexicographically smallest admissible indices.  The pair is conjugated
    back through the normalizing permutation, so the returned value is a
    transposition in the pair's own coordinates, and the drop to h-1 is
    recomputed before returning.
    """
    sf = standard_form(c1, c2)
    h, n = sf.h, c1.n
    if h < 2:
        raise ValueError("reduction step needs cross dimension at least 2")

    a1_cols = [_column_prefix(sf.g1, j, h) for j in range(h)]
    label = None
    pair = None
    for i in range(h):
        for j in range(i + 1, h):
            if a1_cols[i] != a1_cols[j]:
                label, pair = "Case1", (i, j)
                break
        if pair:
            break
    if pair is None:
        d = a1_cols[0]
        label = "Subcase2_1" if d == 0 else "Subcase2_2"
        # Need col_j(B1) != d and col_i(I_h) != col_j(A2).  The scan runs
        # over every i < h, not only i <= 1; hits beyond the first two rows
        # are logged since the narrow bound is not trusted.
        for i in range(h):
            e_i = 1 << i
            for j in range(n - h):
                if _column_prefix(sf.g1, h + j, h) == d:
                    continue
                if _column_prefix(sf.g2, h + j, h) == e_i:
                    continue
                pair = (i, h + j)
                break
            if pair:
                break
        if pair is not None and pair[0] > 1:
            logger.warning(
                "subcase column scan needed i=%d; the i<=2 shortcut would have failed", pair[0]
            )

    pi_inv = inverse(sf.pi)
    if pair is not None:
        a, b = sorted((pi_inv(pair[0]), pi_inv(pair[1])))
        tau = transposition(n, a, b)
        if _cross_dim_fast(c1, codes.permute(c2, tau)) == h - 1:
            return tau, ReductionStep(label, (a, b), h, h - 1)
        logger.warning("case %s pair %s failed recomputation; scanning all transpositions", label, pair)
    else:
        logger.warning("case analysis produced no candidate pair; scanning all transpositions")
    tau = _rescue_transposition(c1, c2, h - 1)
    a, b = _transposed_points(tau)
    return tau, ReductionStep(label or "Case1", (a, b), h, h - 1)


def _transposed_points(tau: Permutation) -> tuple[int, int]:
    moved = [i for i, j in enumerate(tau.images) if i != j]
    return moved[0], moved[1]


def final_step(c1: LinearCode, c2: LinearCode) -> Permutation:
    """The closing transposition for a pair at cross dimension exactly 1.

    With C1 meet C2-dual = {0, a} and C2 meet C1-dual = {0, b}, any positions
    i < j with a_i != a_j and b_i != b_j kill the intersection; such a pair
    exists whenever neither a nor b is the all-one vector.
    """
    cross1 = cross_intersection(c1, c2)
    cross2 = cross_intersection(c2, c1)
    if cross1.k != 1 or cross2.k != 1:
        raise ValueError("final step needs cross dimension exactly 1")
    a = cross1.generator.rows[0]
    b = cross2.generator.rows[0]
    n = c1.n
    ones = (1 << n) - 1
    if a == ones or b == ones:
        raise ConditionViolated(a == ones, b == ones, 1)
    for i in range(n):
        for j in range(i + 1, n):
            if ((a >> i) ^ (a >> j)) & 1 and ((b >> i) ^ (b >> j)) & 1:
                tau = transposition(n, i, j)
                if _cross_dim_fast(c1, codes.permute(c2, tau)) == 0:
                    return tau
                logger.warning("final-step pair (%d, %d) failed recomputation", i, j)
    return _rescue_transposition(c1, c2, 0)


def _check_pair(c1: LinearCode, c2: LinearCode) -> int:
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    if c1.k != c2.k:
        raise UnequalDimensions(
            f"pair construction is defined for equal dimensions; got k1={c1.k}, k2={c2.k}"
        )
    return _cross_dim_fast(c1, c2)


def _condition_obstruction(c1: LinearCode, c2: LinearCode, h: int) -> Optional[ConditionViolated]:
    one1 = codes.contains_all_one(cross_intersection(c1, c2))
    one2 = codes.contains_all_one(cross_intersection(c2, c1))
    if one1 or one2:
        return ConditionViolated(one1, one2, h)
    return None


def _finish(
    c1: LinearCode,
    c2: LinearCode,
    sigma: Permutation,
    trace: list[ReductionStep],
    target: int,
) -> LcpCertificate:
    final = cross_intersection(c1, codes.permute(c2, sigma)).k
    if final != target:
        raise InternalConsistencyError(f"certificate re-verification got {final}, wanted {target}")
    return LcpCertificate(c1.n, c1.k, sigma, tuple(trace), final, True)


def build_lcp(c1: LinearCode, c2: LinearCode) -> LcpCertificate:
    """Compose transpositions until (C1, (sigma(C2))-dual) is an LCP.

    Raises ``ConditionViolated`` when the all-one vector sits in either
    cross intersection (then no sigma exists at this length) and
    ``UnequalDimensions`` for k1 != k2 pairs, which are out of scope.
    """
    h = _check_pair(c1, c2)
    obstruction = _condition_obstruction(c1, c2, h)
    if obstruction is not None:
        raise obstruction
    n = c1.n
    sigma = identity_permutation(n)
    current = c2
    trace: list[ReductionStep] = []
    d = h
    while d >= 2:
        tau, step = reduce_once(c1, current)
        sigma = compose(tau, sigma)
        current = codes.permute(current, tau)
        trace.append(step)
        d = step.dim_after
    if d == 1:
        tau = final_step(c1, current)
        i, j = _transposed_points(tau)
        sigma = compose(tau, sigma)
        current = codes.permute(current, tau)
        trace.append(ReductionStep("FinalStep", (i, j), 1, 0))
    return _finish(c1, c2, sigma, trace, 0)


def ell_pair(c1: LinearCode, c2: LinearCode, ell: int) -> LcpCertificate:
    """A certificate with dim(C1 meet (sigma(C2))-dual) equal to ell.

    Feasible for 1 <= ell <= h (h the starting cross dimension) with no
    side condition, and for ell = 0 under the all-one condition.
    """
    if ell < 0:
        raise ValueError("target dimension must be nonnegative")
    if ell == 0:
        return build_lcp(c1, c2)
    h = _check_pair(c1, c2)
    if ell > h:
        raise ValueError(f"target {ell} exceeds the cross intersection dimension {h}")
    sigma = identity_permutation(c1.n)
    current = c2
    trace: list[ReductionStep] = []
    d = h
    while d > ell:
        tau, step = reduce_once(c1, current)
        sigma = compose(tau, sigma)
        current = codes.permute(current, tau)
        trace.append(step)
        d = step.dim_after
    return _finish(c1, c2, sigma, trace, ell)


def build_lcp_padded(c1: LinearCode, c2: LinearCode) -> LcpCertificate:
    """LCP for ({0} x C1, {0} x C2) at length n+1; never fails, because the
    padded codes cannot contain the all-one vector of length n+1."""
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    if c1.k != c2.k:
        raise UnequalDimensions(
            f"pair construction is defined for equal dimensions; got k1={c1.k}, k2={c2.k}"
        )
    return build_lcp(codes.zero_extend(c1), codes.zero_extend(c2))


def front_cycle(n: int, length: int) -> Permutation:
    """The cycle sending (c_1..c_i, rest) to (c_i, c_1..c_{i-1}, rest) for
    i = length; identity beyond the first ``length`` coordinates."""
    if not 1 <= length <= n:
        raise ValueError("cycle length out of range")
    images = list(range(n))
    for t in range(length - 1):
        images[t] = t + 1
    images[length - 1] = 0
    return Permutation(tuple(images))


def hull_shift_pair(c: LinearCode, ell: int) -> LcpCertificate:
    """A sigma with dim(C meet (sigma(C))-dual) = ell, driven by the hull.

    For 1 <= ell <= h = dim(hull(C)) the permutation is explicit: normalize
    so a hull basis fills the front block, then apply the front cycle of
    length h-ell+1 (the gram matrix of the cycled generator gains exactly
    h-ell rank).  For ell = 0 this defers to ``build_lcp(C, C)``, which
    requires the all-one vector to be outside the hull.
    """
    hl = codes.hull(c)
    h = hl.k
    if ell == 0:
        if codes.contains_all_one(hl):
            raise ConditionViolated(True, True, h)
        return build_lcp(c, c)
    if ell > h:
        raise ValueError(f"target {ell} exceeds the hull dimension {h}")
    n, k = c.n, c.k
    sf = standard_form(c, c)
    length = h - ell + 1
    cyc = front_cycle(n, length)
    # Rank law for the normalized generator: the cycled gram matrix has
    # rank (k - h) + (length - 1).
    got = rank(multiply(sf.g2, transpose(apply_permutation(sf.g2, cyc))))
    if got != k - h + length - 1:
        raise InternalConsistencyError(
            f"front-cycle gram rank {got}, expected {k - h + length - 1}"
        )
    sigma = compose(inverse(sf.pi), compose(cyc, sf.pi))
    trace = [ReductionStep("HullShift", length, h, ell)]
    return _finish(c, c, sigma, trace, ell)


def exists_permutation_oracle(
    c1: LinearCode,
    c2: LinearCode,
    ell: int,
    sample_budget: int | None = None,
    rng=None,
) -> Optional[Permutation]:
    """Ground-truth search for sigma with dim(C1 meet (sigma(C2))-dual) = ell.

    Exhausts all n! permutations for n <= 8; above that a sample budget and
    rng must be supplied.  Returns the first witness found, or None.
    """
    if c1.n != c2.n:
        raise DimensionMismatch("codes have different lengths")
    n = c1.n
    g1 = c1.generator.rows
    g2 = c2.generator.rows
    k1 = c1.k
    k2 = c2.k
    target_rank = k1 - ell
    if not 0 <= target_rank <= min(k1, k2):
        return None

    def dim_matches(images: tuple[int, ...]) -> bool:
        permuted = []
        for row in g2:
            out = 0
            r = row
            while r:
                i = _lsb_index(r)
                out |= 1 << images[i]
                r &= r - 1
            permuted.append(out)
        gram = []
        for a in g1:
            x = 0
            for jdx, b in enumerate(permuted):
                x |= ((a & b).bit_count() & 1) << jdx
            gram.append(x)
        rk = 0
        for c in range(k2):
            piv = None
            for idx in range(rk, len(gram)):
                if (gram[idx] >> c) & 1:
                    piv = idx
                    break
            if piv is None:
                continue
            gram[rk], gram[piv] = gram[piv], gram[rk]
            for idx in range(len(gram)):
                if idx != rk and (gram[idx] >> c) & 1:
                    gram[idx] ^= gram[rk]
            rk += 1
        return rk == target_rank

    if sample_budget is None:
        if n > 8:
            raise ValueError("exhaustive search is limited to n <= 8; pass sample_budget")
        source: Iterator[tuple[int, ...]] = _all_permutations(range(n))
    else:
        if rng is None:
            raise ValueError("sampling needs an rng")

        def _samples():
            base = list(range(n))
            for _ in range(sample_budget):
                rng.shuffle(base)
                yield tuple(base)

        source = _samples()

    for images in source:
        if dim_matches(images):
            return Permutation(images)
    return None


def verify_certificate(c1: LinearCode, c2: LinearCode, cert: LcpCertificate) -> bool:
    """Recompute the intersection dimension from the generators and sigma
    alone; the trace is not consulted."""
    if cert.n != c1.n or c1.n != c2.n or cert.sigma.n != c1.n:
        return False
    return cross_intersection(c1, codes.permute(c2, cert.sigma)).k == cert.final_dim


def with_security_parameter(
    cert: LcpCertificate, c1: LinearCode, c2: LinearCode
) -> LcpCertificate:
    """Attach min{d(C1), d(C2)} (= min{d(C1), d of the pair's dual member),
    unchanged under sigma) to the certificate."""
    value = min(codes.min_distance(c1), codes.min_distance(c2))
    return replace(cert, security_parameter=value)


# ---------------------------------------------------------------------------
# certificate text format: 'key: value' lines in any order, one 'step:' line
# per trace entry (file order preserved), '#' comments ignored.


def format_certificate(cert: LcpCertificate) -> str:
    lines = [
        f"n: {cert.n}",
        f"k: {cert.k}",
        "sigma: " + " ".join(str(j) for j in cert.sigma.images),
        f"final_dim: {cert.final_dim}",
        f"verified: {'true' if cert.verified else 'false'}",
    ]
    if cert.security_parameter is not None:
        lines.append(f"security_parameter: {cert.security_parameter}")
    for step in cert.trace:
        if isinstance(step.swap, tuple):
            swap = f"swap={step.swap[0]},{step.swap[1]}"
        else:
            swap = f"shift={step.swap}"
        lines.append(
            f"step: label={step.case_label} {swap} "
            f"dim_before={step.dim_before} dim_after={step.dim_after}"
        )
    return "\n".join(lines) + "\n"


class CertificateFormatError(ValueError):
    """A certificate text document is malformed."""


def parse_certificate(text: str) -> LcpCertificate:
    fields: dict[str, str] = {}
    steps: list[ReductionStep] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise CertificateFormatError(f"line {lineno}: expected 'key: value'")
        key, _, value = line.partition(":")
        key = key.strip()
        value = value.strip()
        if key == "step":
            steps.append(_parse_step(value, lineno))
        elif key in fields:
            raise CertificateFormatError(f"line {lineno}: duplicate key {key!r}")
        else:
            fields[key] = value
    try:
        n = int(fields["n"])
        k = int(fields["k"])
        images = tuple(int(t) for t in fields["sigma"].split())
        final_dim = int(fields["final_dim"])
        verified = fields["verified"] == "true"
    except KeyError as exc:
        raise CertificateFormatError(f"missing field {exc.args[0]!r}") from None
    security = int(fields["security_parameter"]) if "security_parameter" in fields else None
    if len(images) != n:
        raise CertificateFormatError("sigma image list length disagrees with n")
    return LcpCertificate(n, k, Permutation(images), tuple(steps), final_dim, verified, security)


def _parse_step(value: str, lineno: int) -> ReductionStep:
    parts: dict[str, str] = {}
    for token in value.split():
        if "=" not in token:
            raise CertificateFormatError(f"line {lineno}: bad step token {token!r}")
        key, _, val = token.partition("=")
        parts[key] = val
    try:
        label = parts["label"]
        swap: tuple[int, int] | int
        if "shift" in parts:
            swap = int(parts["shift"])
        else:
            a, _, b = parts["swap"].partition(",")
            swap = (int(a), int(b))
        return ReductionStep(label, swap, int(parts["dim_before"]), int(parts["dim_after"]))
    except (KeyError, ValueError) as exc:
        raise CertificateFormatError(f"line {lineno}: malformed step ({exc})") from None
