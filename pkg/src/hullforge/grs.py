"""Generalized Reed-Solomon codes and their extended variant.

A GRS code is the set of words (v_1 f(a_1), ..., v_n f(a_n)) for polynomials
f of degree < k over distinct evaluation points a_i and nonzero column
multipliers v_i; the extended code appends the coefficient of x^(k-1) as one
extra coordinate.  Both are MDS, which this module can confirm exhaustively
at small scale (every k-column minor nonsingular, brute-force minimum
distance) as an independent check on the structural claim.

Message convention: message coordinate i is the coefficient of x^(i-1), so
the extended coordinate equals the last message coordinate.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Sequence

import numpy as np

from . import poly
from .errors import (
    DuplicatePointsError,
    MalformedDescriptorError,
    ShapeMismatchError,
    TooLargeError,
    ZeroMultiplierError,
)
from .ffield import FieldCtx, FieldElement, field_from_json, field_to_json
from .linalg import MatFq, matmul, null_space, rref

MINOR_BUDGET = 10**6
BRUTE_FORCE_BUDGET = 1 << 20


@dataclass(frozen=True)
class GrsSpec:
    """Evaluation points, multipliers, dimension and the extended flag."""

    ctx: FieldCtx
    a: tuple[FieldElement, ...]
    v: tuple[FieldElement, ...]
    k: int
    extended: bool = False

    def __post_init__(self):
        n = len(self.a)
        if len(self.v) != n:
            raise ShapeMismatchError("a and v must have equal length")
        codes = [el.code for el in self.a]
        if len(set(codes)) != n:
            raise DuplicatePointsError("evaluation points must be pairwise distinct")
        if any(el.code == 0 for el in self.v):
            raise ZeroMultiplierError("column multipliers must be nonzero")
        top = n + 1 if self.extended else n
        if not 1 <= self.k <= top:
            raise ValueError(f"dimension k = {self.k} outside [1, {top}]")
        for el in (*self.a, *self.v):
            if el.ctx is not self.ctx:
                raise ValueError("spec elements belong to a different field context")

    @property
    def n(self) -> int:
        """Number of evaluation points."""
        return len(self.a)

    @property
    def length(self) -> int:
        return self.n + 1 if self.extended else self.n


class LinearCode:
    """A linear code presented by a full-row-rank generator matrix."""

    __slots__ = ("gen", "n", "k", "_parity")

    def __init__(self, gen: MatFq):
        rk = rref(gen)[1]
        if rk != gen.rows:
            raise ValueError(f"generator rows are dependent (rank {rk} of {gen.rows})")
        self.gen = gen
        self.n = gen.cols
        self.k = gen.rows
        self._parity: MatFq | None = None

    @property
    def parity(self) -> MatFq:
        """Cached basis of the Euclidean dual (the parity-check matrix)."""
        if self._parity is None:
            self._parity = null_space(self.gen)
        return self._parity

    def __repr__(self) -> str:
        return f"LinearCode([{self.n}, {self.k}] over GF({self.gen.ctx.q}))"


def grs_generator(spec: GrsSpec) -> LinearCode:
    """The canonical k x length generator: entry (i, j) is v_j * a_j^i, with an
    extra (0, ..., 0, 1) column in the extended case."""
    ctx = spec.ctx
    a = np.array([el.code for el in spec.a], dtype=np.int64)
    v = np.array([el.code for el in spec.v], dtype=np.int64)
    rows = np.empty((spec.k, spec.n), dtype=np.int64)
    row = v
    for i in range(spec.k):
        rows[i] = row
        if i + 1 < spec.k:
            row = ctx.mul_arr(row, a)
    if spec.extended:
        extra = np.zeros((spec.k, 1), dtype=np.int64)
        extra[spec.k - 1, 0] = 1
        rows = np.hstack([rows, extra])
    return LinearCode(MatFq(ctx, rows))


def compute_u(ctx: FieldCtx, a: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """u_i = prod_{j != i} (a_i - a_j)^(-1); the empty product (n = 1) is 1."""
    n = len(a)
    codes = np.array([el.code for el in a], dtype=np.int64)
    if len(set(codes.tolist())) != n:
        raise DuplicatePointsError("evaluation points must be pairwise distinct")
    if n == 1:
        return (ctx.one,)
    diff = ctx.sub_arr(codes[:, None], codes[None, :])
    np.fill_diagonal(diff, 1)
    prod_rows = []
    for i in range(n):
        row = diff[i]
        acc = 1
        for c in row.tolist():
            acc = ctx.mul(acc, c)
        prod_rows.append(ctx.inv(acc))
    return tuple(FieldElement(ctx, c) for c in prod_rows)


def encode(code: LinearCode, message: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """message . generator; equals the multiplier-weighted evaluation of the
    message polynomial for GRS generators."""
    if len(message) != code.k:
        raise ShapeMismatchError(f"message length {len(message)} != k = {code.k}")
    ctx = code.gen.ctx
    row = MatFq(ctx, np.array([[el.code for el in message]], dtype=np.int64))
    out = matmul(row, code.gen)
    return tuple(FieldElement(ctx, int(c)) for c in out.codes[0])


def evaluate_message_polynomial(spec: GrsSpec, message: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
    """Independent encoding oracle: Horner-evaluate f at each point and scale.

    Used in tests to cross-check matrix encoding; kept here so the message
    convention lives in one place.
    """
    ctx = spec.ctx
    word = [spec.v[i] * poly.eval_at(ctx, message, spec.a[i]) for i in range(spec.n)]
    if spec.extended:
        word.append(poly.coefficient(ctx, list(message), spec.k - 1))
    return tuple(word)


def mds_check_minors(code: LinearCode, budget: int = MINOR_BUDGET) -> bool:
    """True iff every k-column submatrix of the generator has rank k."""
    n, k = code.n, code.k
    if comb(n, k) > budget:
        raise TooLargeError(f"{comb(n, k)} minors exceed the budget of {budget}")
    ctx = code.gen.ctx
    for cols in combinations(range(n), k):
        sub = MatFq(ctx, code.gen.codes[:, cols])
        if rref(sub)[1] != k:
            return False
    return True


def min_distance_bruteforce(code: LinearCode, budget: int = BRUTE_FORCE_BUDGET) -> int:
    """Minimum Hamming weight over all q^k - 1 nonzero codewords."""
    ctx = code.gen.ctx
    q, k = ctx.q, code.k
    if q**k > budget:
        raise TooLargeError(f"{q}^{k} codewords exceed the budget of {budget}")
    total = q**k
    best = code.n
    chunk = 4096
    gen = code.gen
    for lo in range(1, total, chunk):
        hi = min(total, lo + chunk)
        idx = np.arange(lo, hi, dtype=np.int64)
        msgs = np.empty((hi - lo, k), dtype=np.int64)
        for j in range(k):
            msgs[:, j] = idx % q
            idx //= q
        words = matmul(MatFq(ctx, msgs), gen)
        weights = np.count_nonzero(words.codes, axis=1)
        best = min(best, int(weights.min()))
    return best


# ---------------------------------------------------------------------------
# Code descriptor JSON: points/multipliers as discrete logs, null for zero.
# ---------------------------------------------------------------------------

def spec_to_json(spec: GrsSpec) -> dict:
    ctx = spec.ctx
    return {
        "field": field_to_json(ctx),
        "a": [None if el.code == 0 else ctx.dlog(el.code) for el in spec.a],
        "v": [ctx.dlog(el.code) for el in spec.v],
        "k": spec.k,
        "extended": spec.extended,
    }


def spec_from_json(obj: dict) -> GrsSpec:
    try:
        ctx = field_from_json(obj["field"])
        a = tuple(
            ctx.zero if d is None else ctx.alpha_pow(int(d)) for d in obj["a"]
        )
        v_raw = obj["v"]
        if any(d is None for d in v_raw):
            raise ZeroMultiplierError("column multipliers must be nonzero")
        v = tuple(ctx.alpha_pow(int(d)) for d in v_raw)
        k = int(obj["k"])
        extended = bool(obj["extended"])
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedDescriptorError(f"bad code descriptor: {exc}") from exc
    try:
        return GrsSpec(ctx, a, v, k, extended)
    except (DuplicatePointsError, ZeroMultiplierError, ShapeMismatchError, ValueError) as exc:
        raise MalformedDescriptorError(f"bad code descriptor: {exc}") from exc
