"""Dense exact linear algebra over GF(q).

Matrices hold a read-only numpy grid of element codes tied to one FieldCtx.
Everything is exact: Gaussian elimination uses the deterministic
first-nonzero pivot in column order, so reduced forms, ranks and null-space
bases are reproducible across runs.  Operations allocate fresh matrices and
never mutate inputs, so values are safe to share between threads.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .errors import MalformedDescriptorError, MixedFieldsError, ShapeMismatchError
from .ffield import FieldCtx, FieldElement


class MatFq:
    """An immutable rows x cols matrix over a single field context."""

    __slots__ = ("ctx", "codes")

    def __init__(self, ctx: FieldCtx, codes: np.ndarray):
        arr = np.array(codes, dtype=np.int64, copy=True)
        if arr.ndim != 2:
            raise ShapeMismatchError(f"matrix data must be 2-D, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= ctx.q):
            raise ValueError("matrix entry code out of range for the field")
        arr.setflags(write=False)
        self.ctx = ctx
        self.codes = arr

    @classmethod
    def zeros(cls, ctx: FieldCtx, rows: int, cols: int) -> "MatFq":
        return cls(ctx, np.zeros((rows, cols), dtype=np.int64))

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "MatFq":
        return cls(ctx, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, ctx: FieldCtx, rows: Sequence[Sequence[FieldElement]]) -> "MatFq":
        data = [[el.code for el in row] for row in rows]
        arr = np.array(data, dtype=np.int64) if data else np.zeros((0, 0), dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(len(data), 0)
        return cls(ctx, arr)

    @property
    def rows(self) -> int:
        return self.codes.shape[0]

    @property
    def cols(self) -> int:
        return self.codes.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.codes.shape  # type: ignore[return-value]

    def element(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, int(self.codes[i, j]))

    def row_elements(self, i: int) -> list[FieldElement]:
        return [FieldElement(self.ctx, int(c)) for c in self.codes[i]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, MatFq)
            and other.ctx is self.ctx
            and other.codes.shape == self.codes.shape
            and bool(np.array_equal(other.codes, self.codes))
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.codes.shape, self.codes.tobytes()))

    def __repr__(self) -> str:
        return f"MatFq(GF({self.ctx.q}), {self.rows}x{self.cols})"


def _same_ctx(*mats: MatFq) -> FieldCtx:
    ctx = mats[0].ctx
    for m in mats[1:]:
        if m.ctx is not ctx:
            raise MixedFieldsError("matrices belong to different field contexts")
    return ctx


def rref(m: MatFq) -> tuple[MatFq, int, tuple[int, ...]]:
    """Reduced row echelon form with deterministic first-nonzero pivoting.

    Returns (reduced matrix, rank, pivot column indices).
    """
    ctx = m.ctx
    a = m.codes.copy()
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            a[[r, pr]] = a[[pr, r]]
        pivot_inv = ctx.inv(int(a[r, c]))
        a[r] = ctx.mul_arr(a[r], np.int64(pivot_inv))
        others = np.nonzero(a[:, c])[0]
        others = others[others != r]
        if others.size:
            update = ctx.mul_arr(a[others, c][:, None], a[r][None, :])
            a[others] = ctx.sub_arr(a[others], update)
        pivots.append(c)
        r += 1
    return MatFq(ctx, a), r, tuple(pivots)


def rank(m: MatFq) -> int:
    return rref(m)[1]


def null_space(m: MatFq) -> MatFq:
    """Basis B of the right kernel: m . B^T = 0, rank(B) = cols - rank(m)."""
    ctx = m.ctx
    reduced, rk, pivots = rref(m)
    cols = m.cols
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    pivot_arr = np.array(pivots, dtype=np.intp)
    for bi, f in enumerate(free):
        basis[bi, f] = 1
        if rk:
            basis[bi, pivot_arr] = ctx.neg_arr(reduced.codes[:rk, f])
    return MatFq(ctx, basis)


def transpose(m: MatFq) -> MatFq:
    return MatFq(m.ctx, m.codes.T)


def vstack(a: MatFq, b: MatFq) -> MatFq:
    ctx = _same_ctx(a, b)
    if a.cols != b.cols:
        raise ShapeMismatchError(f"cannot stack {a.shape} on {b.shape}")
    return MatFq(ctx, np.vstack([a.codes, b.codes]))


def matmul(a: MatFq, b: MatFq) -> MatFq:
    """Exact product over the shared field."""
    ctx = _same_ctx(a, b)
    if a.cols != b.rows:
        raise ShapeMismatchError(f"cannot multiply {a.shape} by {b.shape}")
    r, t = a.shape
    c = b.cols
    if t == 0 or r == 0 or c == 0:
        return MatFq.zeros(ctx, r, c)
    out = np.empty((r, c), dtype=np.int64)
    # chunk rows so the intermediate (chunk, t, c, e) digit tensor stays small
    chunk = max(1, 500_000 // max(1, t * c))
    for lo in range(0, r, chunk):
        hi = min(r, lo + chunk)
        prods = ctx.mul_arr(a.codes[lo:hi, :, None], b.codes[None, :, :])
        out[lo:hi] = ctx.sum_arr(prods, axis=1)
    return MatFq(ctx, out)


def entrywise_frobenius(m: MatFq, j: int) -> MatFq:
    """Every entry raised to the p^j power (j >= 0; j = e acts as identity)."""
    if j < 0:
        raise ValueError("frobenius power index must be nonnegative")
    return MatFq(m.ctx, m.ctx.power_p_arr(m.codes, j))


def intersection_dim(a: MatFq, b: MatFq) -> int:
    """dim(rowspace(a) ^ rowspace(b)) = rank a + rank b - rank of the stack."""
    _same_ctx(a, b)
    if a.cols != b.cols:
        raise ShapeMismatchError("row spaces live in different ambient dimensions")
    return rank(a) + rank(b) - rank(vstack(a, b))


def intersection_basis(a: MatFq, b: MatFq) -> MatFq:
    """A canonical basis of rowspace(a) ^ rowspace(b).

    Requires both inputs to have independent rows.  Solves z . stack(a, b) = 0
    for z = (x, y); each solution yields the intersection vector x . a, and the
    collected vectors are reduced to a deterministic rref basis.
    """
    ctx = _same_ctx(a, b)
    stacked = vstack(a, b)
    kernel = null_space(transpose(stacked))
    if kernel.rows == 0:
        return MatFq.zeros(ctx, 0, a.cols)
    x_part = MatFq(ctx, kernel.codes[:, : a.rows])
    candidates = matmul(x_part, a)
    reduced, rk, _ = rref(candidates)
    return MatFq(ctx, reduced.codes[:rk])


def row_space_equal(a: MatFq, b: MatFq) -> bool:
    """Whether two matrices span the same row space (via canonical rref)."""
    _same_ctx(a, b)
    if a.cols != b.cols:
        return False
    ra, rka, _ = rref(a)
    rb, rkb, _ = rref(b)
    return rka == rkb and bool(np.array_equal(ra.codes[:rka], rb.codes[:rkb]))


# ---------------------------------------------------------------------------
# JSON: entries serialized as coefficient vectors.
# ---------------------------------------------------------------------------

def matrix_to_json(m: MatFq) -> dict:
    ctx = m.ctx
    entries = [
        [list(ctx.code_to_coeffs(int(code))) for code in row] for row in m.codes
    ]
    return {"rows": m.rows, "cols": m.cols, "entries": entries}


def matrix_from_json(ctx: FieldCtx, obj: dict) -> MatFq:
    try:
        rows = int(obj["rows"])
        cols = int(obj["cols"])
        entries = obj["entries"]
        codes = np.zeros((rows, cols), dtype=np.int64)
        for i in range(rows):
            for j in range(cols):
                codes[i, j] = ctx.coeffs_to_code([int(c) % ctx.p for c in entries[i][j]])
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise MalformedDescriptorError(f"bad matrix descriptor: {exc}") from exc
    return MatFq(ctx, codes)
