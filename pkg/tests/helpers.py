"""Shared test utilities: independent oracles and random object builders."""

from __future__ import annotations

import numpy as np

from hullforge.ffield import FieldCtx, FieldElement
from hullforge.grs import GrsSpec, LinearCode
from hullforge.linalg import MatFq


def brute_force_order(ctx: FieldCtx, x: FieldElement) -> int:
    """Order by repeated multiplication; independent of the dlog machinery."""
    assert x.code != 0
    t = 1
    acc = x
    while acc != ctx.one:
        acc = acc * x
        t += 1
        assert t <= ctx.q
    return t


def rowspace_codewords(m: MatFq) -> set[tuple[int, ...]]:
    """Every word in the row space, by exhaustive combination (q^rows words)."""
    ctx = m.ctx
    words = {tuple([0] * m.cols)}
    for i in range(m.rows):
        row = m.codes[i]
        multiples = [ctx.mul_arr(np.full(m.cols, c, dtype=np.int64), row) for c in range(ctx.q)]
        words = {
            tuple(int(x) for x in ctx.add_arr(np.array(w, dtype=np.int64), mult))
            for w in words
            for mult in multiples
        }
    return words


def random_matrix(ctx: FieldCtx, rng, rows: int, cols: int) -> MatFq:
    codes = np.array(
        [[rng.randrange(ctx.q) for _ in range(cols)] for _ in range(rows)],
        dtype=np.int64,
    ).reshape(rows, cols)
    return MatFq(ctx, codes)


def random_code(ctx: FieldCtx, rng, n: int, k: int) -> LinearCode:
    """A random [n, k] code (resample until the generator has full rank)."""
    from hullforge.linalg import rref

    while True:
        m = random_matrix(ctx, rng, k, n)
        if rref(m)[1] == k:
            return LinearCode(m)


def random_grs_spec(ctx: FieldCtx, rng, n: int, k: int, extended: bool = False) -> GrsSpec:
    points = rng.sample(range(ctx.q), n)
    mults = [rng.randrange(1, ctx.q) for _ in range(n)]
    return GrsSpec(
        ctx,
        tuple(ctx.from_code(c) for c in points),
        tuple(ctx.from_code(c) for c in mults),
        k,
        extended,
    )
