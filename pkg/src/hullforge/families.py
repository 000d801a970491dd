"""Construction families producing GRS codes with a prescribed hull dimension.

Nine variants are supported, in three groups:

* T1a / T1b: evaluation points are the powers of a primitive n-th root of
  unity (n dividing q - 1, resp. p^l - 1, the latter putting the root inside
  the subfield GF(p^l)).  The hull dimension is dialed by modifying the last
  z - 1 column multipliers away from (p^l + 1)-th roots of unity, where
  z = k - h; h = k instead solves v_i^(p^l + 1) = u_i outright, which makes
  the code Galois self-orthogonal.

* T2: points drawn from the subfield GF(p^l) itself; multipliers solve
  v_i^(p^l + 1) = u_i, and the first z = k - h of them are scaled by a fixed
  beta whose (p^l + 1)-th power is not 1.

* T3n / T3n1 / T3n2 and T4n / T4n1 / T4n2: points form a product of two
  cyclic subgroups (T3) or a union of cosets of a subgroup (T4); multipliers
  solve v_i^(p^l + 1) = a_i^(-1) u_i.  The n1 variants append the point 0,
  the n2 variants additionally pass to the extended code, shifting the
  reachable hull range (h <= k - 1 for lengths n and n + 2, h <= k for
  length n + 1).

Every builder checks its closed-form u values against the direct product
definition and the subfield membership of a_i^(-1) u_i, and ``construct``
measures the hull of the emitted code, raising TheoremMismatchError if the
measurement ever differs from the requested h.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Sequence

from .errors import (
    DuplicatePointsError,
    MalformedDescriptorError,
    MethodDisagreementError,
    NoScalingElementError,
    PredicateFailedError,
    TheoremMismatchError,
)
from .ffield import (
    FieldCtx,
    FieldElement,
    GaloisLevel,
    field_new,
    galois_norm_preimage,
    nth_root_of_unity,
    power_preimage,
)
from .grs import GrsSpec, LinearCode, compute_u, grs_generator
from .hull import HullReport, hull_compute


class Family(str, Enum):
    T1A = "T1a"
    T1B = "T1b"
    T2 = "T2"
    T3N = "T3n"
    T3N1 = "T3n1"
    T3N2 = "T3n2"
    T4N = "T4n"
    T4N1 = "T4n1"
    T4N2 = "T4n2"

    @property
    def length_offset(self) -> int:
        """Code length minus the base point-set size n."""
        if self in (Family.T3N1, Family.T4N1):
            return 1
        if self in (Family.T3N2, Family.T4N2):
            return 2
        return 0


_SUBGROUP_FAMILIES = (Family.T3N, Family.T3N1, Family.T3N2)
_COSET_FAMILIES = (Family.T4N, Family.T4N1, Family.T4N2)


@dataclass(frozen=True)
class FamilyRequest:
    """One construction request; ``n`` is the base point-set size (optional
    and cross-checked for T3*/T4*, where it is determined by the extras)."""

    family: Family
    p: int
    e: int
    l: GaloisLevel
    k: int
    h: int
    n: int | None = None
    x1: int | None = None
    x2: int | None = None
    r: int | None = None
    m: int | None = None

    def to_json(self) -> dict:
        out = {"family": self.family.value, "p": self.p, "e": self.e, "l": self.l,
               "k": self.k, "h": self.h}
        for name in ("n", "x1", "x2", "r", "m"):
            value = getattr(self, name)
            if value is not None:
                out[name] = value
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "FamilyRequest":
        try:
            return cls(
                family=Family(obj["family"]),
                p=int(obj["p"]),
                e=int(obj["e"]),
                l=int(obj["l"]),
                k=int(obj["k"]),
                h=int(obj["h"]),
                n=int(obj["n"]) if obj.get("n") is not None else None,
                x1=int(obj["x1"]) if obj.get("x1") is not None else None,
                x2=int(obj["x2"]) if obj.get("x2") is not None else None,
                r=int(obj["r"]) if obj.get("r") is not None else None,
                m=int(obj["m"]) if obj.get("m") is not None else None,
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedDescriptorError(f"bad family request: {exc}") from exc


@dataclass(frozen=True)
class SubgroupPointSet:
    """A structured evaluation-point set with closed-form u values."""

    points: tuple[FieldElement, ...]
    u: tuple[FieldElement, ...]
    provenance: dict


@dataclass(frozen=True)
class FamilyConstruction:
    """The outcome of ``construct``: spec, code, measured hull, provenance."""

    request: FamilyRequest
    spec: GrsSpec
    expected_hull_dim: int
    code: LinearCode
    hull: HullReport
    provenance: dict


# ---------------------------------------------------------------------------
# Number-theoretic predicates (each evaluated two independent ways).
# ---------------------------------------------------------------------------

def lemma5_predicate(ctx: FieldCtx, x1: int, x2: int) -> bool:
    """Whether ord(alpha^x1) and ord(alpha^x2) are coprime.

    Evaluated both via actual element orders and via the divisibility test
    (q - 1) | lcm(x1, x2); the two must agree.
    """
    if x1 < 1 or x2 < 1:
        raise ValueError("x1 and x2 must be positive")
    qm1 = ctx.q - 1
    by_orders = math.gcd(
        ctx.order(ctx.alpha_pow_code(x1)), ctx.order(ctx.alpha_pow_code(x2))
    ) == 1
    by_divisibility = math.lcm(x1, x2) % qm1 == 0
    if by_orders != by_divisibility:
        raise MethodDisagreementError(
            f"order-gcd test ({by_orders}) != lcm-divisibility test ({by_divisibility})"
        )
    return by_orders


def lemma7_predicate(ctx: FieldCtx, l: GaloisLevel, x1: int, x2: int) -> bool:
    """Whether the subgroup-product point set is admissible at level l.

    Condition set (1): (q-1) | lcm(x1, x2) and gcd(x2, q-1) | x1 (p^l - 1).
    Condition set (2): (q-1) | lcm(x1, x2) and (q-1)/(p^l - 1) | x1.
    Both are evaluated and must agree.
    """
    if x1 < 1 or x2 < 1:
        raise ValueError("x1 and x2 must be positive")
    if l < 1 or ctx.e % l:
        raise ValueError(f"level l = {l} must be >= 1 and divide e = {ctx.e}")
    qm1 = ctx.q - 1
    pl = ctx.p**l
    lcm_ok = math.lcm(x1, x2) % qm1 == 0
    side1 = lcm_ok and (x1 * (pl - 1)) % math.gcd(x2, qm1) == 0
    side2 = lcm_ok and x1 % (qm1 // (pl - 1)) == 0
    if side1 != side2:
        raise MethodDisagreementError(
            f"condition sets disagree for (x1={x1}, x2={x2}, l={l}): {side1} vs {side2}"
        )
    return side1


# ---------------------------------------------------------------------------
# Point-set builders.
# ---------------------------------------------------------------------------

def _check_closed_u(
    ctx: FieldCtx,
    points: Sequence[FieldElement],
    closed: Sequence[FieldElement],
    l: GaloisLevel,
) -> tuple[FieldElement, ...]:
    direct = compute_u(ctx, points)
    for i, (c, d) in enumerate(zip(closed, direct)):
        if c != d:
            raise MethodDisagreementError(f"closed-form u[{i}] differs from direct product")
    for i in range(len(points)):
        ratio = direct[i] / points[i]
        if not ctx.in_subfield(ratio.code, l):
            raise MethodDisagreementError(
                f"a_i^-1 u_i escapes GF({ctx.p}^{l}) at index {i}"
            )
    return direct


def build_pointset_eq6(
    ctx: FieldCtx, l: GaloisLevel, x1: int, x2: int, r: int
) -> SubgroupPointSet:
    """Points xi1^s xi2^t for s = 1..r, t = 1..r2, where xi_i = alpha^x_i and
    r2 = ord(xi2); lexicographic in (s, t)."""
    if not lemma7_predicate(ctx, l, x1, x2):
        raise PredicateFailedError(
            f"(x1={x1}, x2={x2}) fails the admissibility conditions at level {l}"
        )
    qm1 = ctx.q - 1
    ord1 = qm1 // math.gcd(x1, qm1)
    r2 = qm1 // math.gcd(x2, qm1)
    if not 1 <= r <= ord1:
        raise PredicateFailedError(f"r = {r} outside [1, ord(xi1) = {ord1}]")
    points: list[FieldElement] = []
    bases = [ctx.alpha_pow(x1 * s * r2) for s in range(1, r + 1)]
    r2_inv = ctx.scalar(r2).inverse()
    coset_factor = []
    for s in range(1, r + 1):
        denom = ctx.one
        for s2 in range(1, r + 1):
            if s2 != s:
                denom = denom * (bases[s - 1] - bases[s2 - 1])
        coset_factor.append(bases[s - 1].inverse() * r2_inv * denom.inverse())
        for t in range(1, r2 + 1):
            points.append(ctx.alpha_pow(x1 * s + x2 * t))
    if len({el.code for el in points}) != len(points):
        raise DuplicatePointsError("subgroup product points collide (predicate bug)")
    closed = [points[(s - 1) * r2 + (t - 1)] * coset_factor[s - 1]
              for s in range(1, r + 1) for t in range(1, r2 + 1)]
    u = _check_closed_u(ctx, points, closed, l)
    provenance = {
        "kind": "subgroup-product",
        "x1": x1,
        "x2": x2,
        "r1": r,
        "r2": r2,
        "xi1_dlog": x1 % qm1,
        "xi2_dlog": x2 % qm1,
    }
    return SubgroupPointSet(tuple(points), u, provenance)


def eq6_extended_weight(ctx: FieldCtx, ps: SubgroupPointSet) -> FieldElement:
    """Closed form for the weight at the appended zero point of a
    subgroup-product set: (-1)^n xi1^(-r1(r1+1)r2/2) xi2^(-r2(r2+1)r1/2)."""
    x1 = ps.provenance["x1"]
    x2 = ps.provenance["x2"]
    r1 = ps.provenance["r1"]
    r2 = ps.provenance["r2"]
    n = r1 * r2
    exp = -(x1 * (r1 * (r1 + 1) // 2) * r2) - (x2 * (r2 * (r2 + 1) // 2) * r1)
    sign = ctx.scalar(-1) ** n
    return sign * ctx.alpha_pow(exp % (ctx.q - 1))


def build_pointset_coset(
    ctx: FieldCtx, l: GaloisLevel, m: int, r: int
) -> SubgroupPointSet:
    """Points from r distinct cosets eta_s H of the order-m subgroup H, with
    coset representatives eta_s = theta2^s; lexicographic in (s, t)."""
    if l < 1 or ctx.e % (2 * l):
        raise PredicateFailedError(f"level l = {l} requires 2l | e = {ctx.e}")
    qm1 = ctx.q - 1
    if m < 1 or qm1 % m:
        raise PredicateFailedError(f"m = {m} must divide q - 1 = {qm1}")
    pl = ctx.p**l
    y = qm1 // (pl - 1)
    m2 = math.gcd(m, y)
    m1 = m // m2
    if (pl - 1) % m1:
        raise MethodDisagreementError("m1 does not divide p^l - 1 (theory violated)")
    if not 1 <= r <= (pl - 1) // m1:
        raise PredicateFailedError(f"r = {r} outside [1, (p^l - 1)/m1 = {(pl - 1) // m1}]")
    theta1_dlog = qm1 // m
    theta2_dlog = y // m2
    etas = [ctx.alpha_pow(theta2_dlog * s) for s in range(1, r + 1)]
    for i in range(r):
        for j in range(i + 1, r):
            if ((etas[i] / etas[j]) ** m) == ctx.one:
                raise MethodDisagreementError("coset representatives collide")
    points: list[FieldElement] = []
    bases = [eta**m for eta in etas]
    m_inv = ctx.scalar(m).inverse()
    theta1 = ctx.alpha_pow(theta1_dlog)
    coset_factor = []
    for s in range(1, r + 1):
        denom = ctx.one
        for s2 in range(1, r + 1):
            if s2 != s:
                denom = denom * (bases[s - 1] - bases[s2 - 1])
        coset_factor.append(bases[s - 1].inverse() * m_inv * denom.inverse())
        for t in range(1, m + 1):
            points.append(etas[s - 1] * theta1**t)
    if len({el.code for el in points}) != len(points):
        raise DuplicatePointsError("coset points collide (predicate bug)")
    closed = [points[(s - 1) * m + (t - 1)] * coset_factor[s - 1]
              for s in range(1, r + 1) for t in range(1, m + 1)]
    u = _check_closed_u(ctx, points, closed, l)
    provenance = {
        "kind": "coset-union",
        "m": m,
        "r": r,
        "m1": m1,
        "m2": m2,
        "y": y,
        "theta1_dlog": theta1_dlog,
        "theta2_dlog": theta2_dlog,
        "eta_dlogs": [theta2_dlog * s % qm1 for s in range(1, r + 1)],
    }
    return SubgroupPointSet(tuple(points), u, provenance)


# ---------------------------------------------------------------------------
# Construction.
# ---------------------------------------------------------------------------

def _scaling_element(ctx: FieldCtx, l: GaloisLevel) -> FieldElement:
    """Smallest power alpha^s (s >= 1) whose (p^l + 1)-th power is not 1."""
    t = ctx.p**l + 1
    if (ctx.q - 1) <= 1 or t % (ctx.q - 1) == 0:
        raise NoScalingElementError(
            f"every element of GF({ctx.q})* is a (p^l + 1)-th root of unity"
        )
    for s in range(1, ctx.q):
        beta = ctx.alpha_pow(s)
        if beta**t != ctx.one:
            return beta
    raise NoScalingElementError("no scaling element found")  # pragma: no cover


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise PredicateFailedError(message)


def _root_of_unity_family(req: FamilyRequest, ctx: FieldCtx) -> tuple[GrsSpec, dict]:
    """Common construction for T1a / T1b."""
    p, e, l, k, h = req.p, req.e, req.l, req.k, req.h
    ctx.check_level(l)
    _require(req.n is not None, f"{req.family.value} requires the length n")
    n = req.n
    pl = p**l
    if req.family is Family.T1A:
        _require((ctx.q - 1) % n == 0, f"n = {n} must divide q - 1 = {ctx.q - 1}")
        _require(k >= 1, "k must be at least 1")
        # proof-level degree bound, equivalent to k <= floor((p^l + n - 1)/(p^l + 1))
        _require(pl * (k - 1) <= n - k - 1,
                 f"k = {k} exceeds the family bound for n = {n}, p^l = {pl}")
    else:
        _require(l >= 1 and e % l == 0, f"level l = {l} must be >= 1 and divide e = {e}")
        _require((pl - 1) % n == 0, f"n = {n} must divide p^l - 1 = {pl - 1}")
        _require(k >= 1, "k must be at least 1")
        _require(2 * k <= n, f"k = {k} exceeds floor(n/2) = {n // 2}")
    _require(0 <= h <= k, f"h = {h} outside [0, {k}]")
    z = k - h

    root = nth_root_of_unity(ctx, n)
    a = [root**i for i in range(n)]
    n_inv = ctx.scalar(n).inverse()
    u = [n_inv * root**i for i in range(n)]
    for closed, direct in zip(u, compute_u(ctx, a)):
        if closed != direct:
            raise MethodDisagreementError("root-of-unity closed-form u disagrees")

    provenance: dict = {"z": z, "root_dlog": ctx.dlog(root.code)}
    if z == 0:
        t = pl + 1
        if req.family is Family.T1B:
            v = [galois_norm_preimage(ctx, ui, l) for ui in u]
        else:
            v = [power_preimage(ctx, ui, t) for ui in u]
        provenance["free_multiplier_dlog"] = None
        provenance["scaled_indices"] = []
    else:
        v = [ctx.one] * n
        if z >= 2:
            w = _scaling_element(ctx, l)
            for j in range(n - z + 1, n):
                v[j] = w
            provenance["free_multiplier_dlog"] = ctx.dlog(w.code)
            provenance["scaled_indices"] = list(range(n - z + 1, n))
        else:
            provenance["free_multiplier_dlog"] = None
            provenance["scaled_indices"] = []
    return GrsSpec(ctx, tuple(a), tuple(v), k), provenance


def _subfield_family(req: FamilyRequest, ctx: FieldCtx) -> tuple[GrsSpec, dict]:
    """Construction T2: points inside GF(p^l)."""
    p, e, l, k, h = req.p, req.e, req.l, req.k, req.h
    _require(p % 2 == 1, "this family requires odd characteristic")
    _require(l >= 1 and e % (2 * l) == 0, f"level l = {l} requires 2l | e = {e}")
    _require(req.n is not None, "T2 requires the length n")
    n = req.n
    pl = p**l
    _require(2 <= n <= pl, f"n = {n} outside [2, p^l = {pl}]")
    _require(1 <= k <= n // 2, f"k = {k} outside [1, floor(n/2) = {n // 2}]")
    _require(0 <= h <= k, f"h = {h} outside [0, {k}]")
    z = k - h

    codes = ctx.subfield_codes(l)[:n]
    a = [FieldElement(ctx, c) for c in codes]
    u = compute_u(ctx, a)
    for i, ui in enumerate(u):
        if not ctx.in_subfield(ui.code, l):
            raise MethodDisagreementError(f"u[{i}] escapes the subfield")
    v = [galois_norm_preimage(ctx, ui, l) for ui in u]
    provenance: dict = {"z": z, "v_base_dlogs": [ctx.dlog(x.code) for x in v]}
    if z >= 1:
        beta = _scaling_element(ctx, l)
        v = [beta * v[i] if i < z else v[i] for i in range(n)]
        provenance["beta_dlog"] = ctx.dlog(beta.code)
        provenance["scaled_indices"] = list(range(z))
    else:
        provenance["beta_dlog"] = None
        provenance["scaled_indices"] = []
    return GrsSpec(ctx, tuple(a), tuple(v), k), provenance


def _structured_family(req: FamilyRequest, ctx: FieldCtx) -> tuple[GrsSpec, dict]:
    """Constructions T3* (subgroup product) and T4* (coset union)."""
    p, e, l, k, h = req.p, req.e, req.l, req.k, req.h
    _require(p % 2 == 1, "this family requires odd characteristic")
    _require(l >= 1 and e % (2 * l) == 0, f"level l = {l} requires 2l | e = {e}")

    if req.family in _SUBGROUP_FAMILIES:
        _require(req.x1 is not None and req.x2 is not None and req.r is not None,
                 f"{req.family.value} requires x1, x2 and r")
        ps = build_pointset_eq6(ctx, l, req.x1, req.x2, req.r)
    else:
        _require(req.m is not None and req.r is not None,
                 f"{req.family.value} requires m and r")
        ps = build_pointset_coset(ctx, l, req.m, req.r)

    n = len(ps.points)
    if req.n is not None:
        _require(req.n == n, f"supplied n = {req.n} but the point set has size {n}")
    pl = p**l
    _require(k >= 1, "k must be at least 1")
    _require(pl * (k - 1) <= n - k,
             f"k = {k} exceeds the family bound for n = {n}, p^l = {pl}")

    offset = req.family.length_offset
    if offset == 0:
        _require(0 <= h <= k - 1, f"h = {h} outside [0, {k - 1}]")
        z = k - 1 - h
        targets = [ps.u[i] / ps.points[i] for i in range(n)]
        a = list(ps.points)
        extended = False
    else:
        top = k if offset == 1 else k - 1
        _require(0 <= h <= top, f"h = {h} outside [0, {top}]")
        z = k - h if offset == 1 else k - 1 - h
        a = list(ps.points) + [ctx.zero]
        w = compute_u(ctx, a)
        for i in range(n):
            if w[i] != ps.u[i] / ps.points[i]:
                raise MethodDisagreementError(
                    "appended-zero weights disagree with a_i^-1 u_i"
                )
        if ps.provenance["kind"] == "subgroup-product":
            if w[n] != eq6_extended_weight(ctx, ps):
                raise MethodDisagreementError(
                    "closed-form weight at the zero point disagrees"
                )
        for i, wi in enumerate(w):
            if not ctx.in_subfield(wi.code, l):
                raise MethodDisagreementError(f"weight w[{i}] escapes the subfield")
        targets = list(w)
        extended = offset == 2
    v = [galois_norm_preimage(ctx, t, l) for t in targets]
    provenance: dict = {
        "z": z,
        "pointset": ps.provenance,
        "v_base_dlogs": [ctx.dlog(x.code) for x in v],
    }
    if z >= 1:
        beta = _scaling_element(ctx, l)
        v = [beta * v[i] if i < z else v[i] for i in range(len(v))]
        provenance["beta_dlog"] = ctx.dlog(beta.code)
        provenance["scaled_indices"] = list(range(z))
    else:
        provenance["beta_dlog"] = None
        provenance["scaled_indices"] = []
    return GrsSpec(ctx, tuple(a), tuple(v), k, extended), provenance


def construct(req: FamilyRequest) -> FamilyConstruction:
    """Build the requested code, measure its hull, and assert it equals h."""
    ctx = field_new(req.p, req.e)
    ctx.check_level(req.l)
    if req.family in (Family.T1A, Family.T1B):
        spec, provenance = _root_of_unity_family(req, ctx)
    elif req.family is Family.T2:
        spec, provenance = _subfield_family(req, ctx)
    else:
        spec, provenance = _structured_family(req, ctx)

    code = grs_generator(spec)
    hull = hull_compute(code, req.l)
    if hull.dim != req.h:
        raise TheoremMismatchError(
            f"{req.family.value} request {req.to_json()} produced hull dimension "
            f"{hull.dim}, expected {req.h}"
        )
    provenance = {"family": req.family.value, "request": req.to_json(), **provenance}
    return FamilyConstruction(
        request=req,
        spec=spec,
        expected_hull_dim=req.h,
        code=code,
        hull=hull,
        provenance=provenance,
    )
