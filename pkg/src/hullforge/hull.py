"""Galois duals, hull computation, and polynomial membership witnesses.

The level-l Galois dual of a code C is computed as the kernel of the
generator with every entry raised to the p^(e-l) power.  The hull
C ^ C-dual is measured two independent ways on every call:

* stacked: dim C + dim C-dual - dim(C + C-dual), with an explicit basis
  extracted from the stacked kernel, and
* rank: (n - k) - rank(H . H-dagger), where H is the parity-check matrix and
  H-dagger its entrywise p^(e-l) power transposed.

The two dimensions agree as a matter of theorem; a disagreement raises
MethodDisagreementError because it can only mean an implementation bug.

Witnesses: a codeword built from a message polynomial f lies in the Galois
dual iff a polynomial g with bounded degree matches the value constraints
v_i^(p^l + 1) f^(p^l)(a_i) = u_i g(a_i) (plus a trailing-coefficient
condition in the extended case).  witness_solve recovers the unique
candidate g by interpolation and validates it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import poly
from .errors import DegreeViolationError, MethodDisagreementError
from .ffield import FieldElement, GaloisLevel
from .grs import GrsSpec, LinearCode, compute_u
from .linalg import (
    MatFq,
    entrywise_frobenius,
    intersection_basis,
    intersection_dim,
    matmul,
    matrix_to_json,
    null_space,
    rank,
    rref,
    transpose,
)


@dataclass(frozen=True)
class HullReport:
    """Measured hull dimension with both computation methods and a basis."""

    l: GaloisLevel
    dim_stacked: int
    dim_rank: int
    basis: MatFq

    @property
    def dim(self) -> int:
        return self.dim_stacked

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "dim": self.dim,
            "basis": matrix_to_json(self.basis),
            "methods": {"stacked": self.dim_stacked, "rankHH": self.dim_rank},
        }


@dataclass(frozen=True)
class HullWitness:
    """A (f, g) certificate for Galois-dual membership at level l.

    ``c`` optionally records the factor polynomial the construction theorems
    build f from; it is provenance only and not used by the check.
    """

    l: GaloisLevel
    f: tuple[FieldElement, ...]
    g: tuple[FieldElement, ...]
    c: tuple[FieldElement, ...] | None = None


def galois_dual(code: LinearCode, l: GaloisLevel) -> LinearCode:
    """Generator of the level-l Galois dual; its dimension is n - k."""
    ctx = code.gen.ctx
    ctx.check_level(l)
    powered = entrywise_frobenius(code.gen, ctx.e - l)
    return LinearCode(null_space(powered))


def hull_compute(code: LinearCode, l: GaloisLevel) -> HullReport:
    """Measure dim(C ^ C-dual) by both methods and extract a basis."""
    ctx = code.gen.ctx
    ctx.check_level(l)
    dual = galois_dual(code, l)

    dim_stacked = intersection_dim(code.gen, dual.gen)
    basis = intersection_basis(code.gen, dual.gen)

    h = code.parity
    h_dagger = transpose(entrywise_frobenius(h, ctx.e - l))
    dim_rank = (code.n - code.k) - rank(matmul(h, h_dagger))

    if dim_stacked != dim_rank or basis.rows != dim_stacked:
        raise MethodDisagreementError(
            f"hull dimension methods disagree: stacked={dim_stacked}, "
            f"rank={dim_rank}, basis rows={basis.rows}"
        )

    # every basis row must annihilate both parity matrices:
    # membership in C, and membership in the dual via the Galois form.
    if basis.rows:
        if np.any(matmul(basis, transpose(h)).codes):
            raise MethodDisagreementError("hull basis row escapes the code")
        frob_basis = entrywise_frobenius(basis, l)
        if np.any(matmul(frob_basis, transpose(code.gen)).codes):
            raise MethodDisagreementError("hull basis row escapes the Galois dual")

    return HullReport(l=l, dim_stacked=dim_stacked, dim_rank=dim_rank, basis=basis)


def _witness_targets(
    spec: GrsSpec, f: Sequence[FieldElement], l: GaloisLevel
) -> list[FieldElement]:
    """The forced values u_i g(a_i) = v_i^(p^l + 1) f^(p^l)(a_i)."""
    ctx = spec.ctx
    t = ctx.p**l + 1
    out = []
    for i in range(spec.n):
        vf = spec.v[i] ** t
        out.append(vf * (poly.eval_at(ctx, f, spec.a[i]) ** (ctx.p**l)))
    return out


def membership_witness_check(spec: GrsSpec, w: HullWitness) -> bool:
    """Verify the value constraints tying f to g (Galois-dual membership)."""
    ctx = spec.ctx
    ctx.check_level(w.l)
    f = list(w.f)
    g = list(w.g)
    if poly.degree(f) > spec.k - 1:
        raise DegreeViolationError(f"deg f = {poly.degree(f)} exceeds k - 1 = {spec.k - 1}")
    g_bound = spec.n - spec.k if spec.extended else spec.n - spec.k - 1
    if poly.degree(g) > g_bound:
        raise DegreeViolationError(f"deg g = {poly.degree(g)} exceeds {g_bound}")
    targets = _witness_targets(spec, f, w.l)
    u = compute_u(ctx, spec.a)
    for i in range(spec.n):
        if targets[i] != u[i] * poly.eval_at(ctx, g, spec.a[i]):
            return False
    if spec.extended:
        fk1 = poly.coefficient(ctx, f, spec.k - 1) ** (ctx.p**w.l)
        gnk = poly.coefficient(ctx, g, spec.n - spec.k)
        if fk1 != -gnk:
            return False
    return True


def witness_solve(
    spec: GrsSpec, f: Sequence[FieldElement], l: GaloisLevel
) -> Optional[tuple[FieldElement, ...]]:
    """The unique consistent g when the codeword of f lies in the Galois dual.

    Interpolates the candidate through the n forced values, then checks the
    degree bound (and the trailing-coefficient condition when extended);
    returns None when no valid g exists.
    """
    ctx = spec.ctx
    ctx.check_level(l)
    f = list(f)
    if poly.degree(f) > spec.k - 1:
        raise DegreeViolationError(f"deg f = {poly.degree(f)} exceeds k - 1 = {spec.k - 1}")
    u = compute_u(ctx, spec.a)
    targets = _witness_targets(spec, f, l)
    ys = [targets[i] / u[i] for i in range(spec.n)]
    g = poly.interpolate(ctx, list(spec.a), ys)
    g_bound = spec.n - spec.k if spec.extended else spec.n - spec.k - 1
    if poly.degree(g) > g_bound:
        return None
    if spec.extended:
        fk1 = poly.coefficient(ctx, f, spec.k - 1) ** (ctx.p**l)
        gnk = poly.coefficient(ctx, g, spec.n - spec.k)
        if fk1 != -gnk:
            return None
    return tuple(g)
