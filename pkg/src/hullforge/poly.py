"""Polynomials over a field context, as lists of FieldElement coefficients.

Coefficient lists are constant-term first; the zero polynomial is the empty
list (degree -1).  These are cold-path helpers for witness checks and
encoding oracles, so clarity beats vectorisation here.
"""

from __future__ import annotations

from typing import Sequence

from .ffield import FieldCtx, FieldElement

Poly = list[FieldElement]


def trim(coeffs: Sequence[FieldElement]) -> Poly:
    out = list(coeffs)
    while out and out[-1].code == 0:
        out.pop()
    return out


def degree(coeffs: Sequence[FieldElement]) -> int:
    return len(trim(coeffs)) - 1


def coefficient(ctx: FieldCtx, coeffs: Sequence[FieldElement], i: int) -> FieldElement:
    return coeffs[i] if 0 <= i < len(coeffs) else ctx.zero


def eval_at(ctx: FieldCtx, coeffs: Sequence[FieldElement], x: FieldElement) -> FieldElement:
    """Horner evaluation."""
    acc = ctx.zero
    for c in reversed(list(coeffs)):
        acc = acc * x + c
    return acc


def add(ctx: FieldCtx, a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Poly:
    n = max(len(a), len(b))
    return trim(
        [coefficient(ctx, a, i) + coefficient(ctx, b, i) for i in range(n)]
    )


def scale(ctx: FieldCtx, a: Sequence[FieldElement], s: FieldElement) -> Poly:
    return trim([c * s for c in a])


def mul(ctx: FieldCtx, a: Sequence[FieldElement], b: Sequence[FieldElement]) -> Poly:
    a, b = trim(a), trim(b)
    if not a or not b:
        return []
    out = [ctx.zero] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai.code:
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
    return trim(out)


def from_roots(ctx: FieldCtx, roots: Sequence[FieldElement]) -> Poly:
    """The monic polynomial with exactly the given roots (empty -> constant 1)."""
    out: Poly = [ctx.one]
    for r in roots:
        out = mul(ctx, out, [-r, ctx.one])
    return out


def frobenius_coeffs(ctx: FieldCtx, coeffs: Sequence[FieldElement], l: int) -> Poly:
    """Coefficient-wise p^l power: f = sum f_i x^i maps to sum f_i^(p^l) x^i."""
    return trim([FieldElement(ctx, ctx.power_p(c.code, l)) for c in coeffs])


def interpolate(
    ctx: FieldCtx, xs: Sequence[FieldElement], ys: Sequence[FieldElement]
) -> Poly:
    """Lagrange interpolation through distinct nodes, O(n^2).

    Builds the master product once, then peels off each (x - x_i) by synthetic
    division and scales by the inverse of the node's derivative value.
    """
    n = len(xs)
    if n != len(ys):
        raise ValueError("xs and ys must have equal length")
    if n == 0:
        return []
    master = from_roots(ctx, xs)
    out = [ctx.zero] * n
    for i in range(n):
        # master / (x - xs[i]) by synthetic division
        quotient = [ctx.zero] * n
        carry = master[n]  # leading 1
        for j in range(n - 1, -1, -1):
            quotient[j] = carry
            carry = master[j] + carry * xs[i]
        denom = eval_at(ctx, quotient, xs[i])
        w = ys[i] / denom
        if w.code:
            for j in range(n):
                out[j] = out[j] + quotient[j] * w
    return trim(out)
