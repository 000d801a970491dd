import pytest

from hullforge.eaqecc import (
    EaqeccParams,
    closed_form_tuple,
    derive_eaqecc,
    dual_side_eaqecc,
    emit_from_construction,
    singleton_verdict,
    theorem_family_emit,
)
from hullforge.errors import BoundViolatedError
from hullforge.families import Family, FamilyRequest, construct


def test_derive_table1_row():
    built = construct(FamilyRequest(Family.T1A, 2, 6, 2, k=10, h=1, n=63))
    params = derive_eaqecc(built.code, 2, d=54)
    assert params.tuple() == (63, 9, 54, 52)
    assert params.q == 64
    assert params.mds


def test_derive_table3_row():
    built = construct(FamilyRequest(Family.T3N, 3, 4, 1, k=20, h=6, x1=160, x2=3, r=1))
    params = derive_eaqecc(built.code, 1, d=61)
    assert params.tuple() == (80, 14, 61, 54)


def test_derive_stabilizer_case_c_zero():
    # hull dim = n - k makes the entanglement cost vanish
    built = construct(FamilyRequest(Family.T1B, 3, 4, 2, k=4, h=4, n=8))
    params = derive_eaqecc(built.code, 2, d=5)
    assert params.c == 0
    assert params.tuple() == (8, 0, 5, 0)


def test_singleton_verdict_examples():
    p1 = EaqeccParams(n=63, k=9, d=54, c=52, q=64)
    assert singleton_verdict(p1) == {"slack": 0, "mds": True}
    p2 = EaqeccParams(n=25, k=8, d=17, c=15, q=390625)
    assert singleton_verdict(p2) == {"slack": 0, "mds": True}
    p3 = EaqeccParams(n=10, k=4, d=1, c=0, q=9)
    assert singleton_verdict(p3) == {"slack": 6, "mds": False}
    assert not p3.mds


def test_params_invariants():
    with pytest.raises(BoundViolatedError):
        EaqeccParams(n=10, k=4, d=9, c=2, q=9)  # negative slack
    with pytest.raises(BoundViolatedError):
        EaqeccParams(n=10, k=1, d=1, c=10, q=9)  # c > n - 1


def test_theorem_family_emit_table2_row():
    params = theorem_family_emit(FamilyRequest(Family.T2, 5, 8, 2, k=12, h=12, n=25))
    assert params.tuple() == (25, 0, 14, 1)
    assert params.mds


def test_theorem_family_emit_table3_extended_row():
    params = theorem_family_emit(
        FamilyRequest(Family.T3N2, 3, 4, 1, k=20, h=19, x1=160, x2=3, r=1)
    )
    assert params.tuple() == (82, 1, 63, 43)


def test_theorem_family_emit_h_equals_k_plus_one_length():
    # closed form at h = k for the length n+1 variant: [[n+1, 0, n-k+2, n-k+1]]
    req = FamilyRequest(Family.T4N1, 3, 4, 1, k=3, h=3, m=10, r=2)
    params = theorem_family_emit(req)
    n, k = 20, 3
    assert params.tuple() == (n + 1, 0, n - k + 2, n - k - k + 1)


def test_closed_form_tuple_shapes():
    req = FamilyRequest(Family.T3N, 3, 4, 1, k=5, h=2, x1=160, x2=3, r=1)
    assert closed_form_tuple(req, 80) == (80, 3, 76, 73)
    req = FamilyRequest(Family.T3N1, 3, 4, 1, k=5, h=2, x1=160, x2=3, r=1)
    assert closed_form_tuple(req, 80) == (81, 3, 77, 74)
    req = FamilyRequest(Family.T3N2, 3, 4, 1, k=5, h=2, x1=160, x2=3, r=1)
    assert closed_form_tuple(req, 80) == (82, 3, 78, 75)


def test_emitted_params_satisfy_singleton_with_zero_slack():
    requests = [
        FamilyRequest(Family.T1A, 3, 2, 1, k=2, h=0, n=8),
        FamilyRequest(Family.T2, 5, 2, 1, k=2, h=1, n=5),
        FamilyRequest(Family.T4N2, 3, 4, 1, k=3, h=1, m=10, r=2),
    ]
    for req in requests:
        params = theorem_family_emit(req)
        assert singleton_verdict(params)["slack"] == 0
        assert 0 <= params.c <= params.n - 1


def test_dual_side_euclidean_and_hermitian_match_primal(rng):
    from helpers import random_grs_spec
    from hullforge.ffield import field_new
    from hullforge.grs import grs_generator

    ctx = field_new(3, 4)
    for l in (0, 2):
        spec = random_grs_spec(ctx, rng, 8, 3)
        code = grs_generator(spec)
        params = dual_side_eaqecc(code, l)
        assert params.provenance["hull_primal"] == params.provenance["hull_dual"]
        assert params.d == 4  # k + 1
        assert params.tuple()[0] == 8


def test_dual_side_other_levels_logged(rng):
    from helpers import random_grs_spec
    from hullforge.ffield import field_new
    from hullforge.grs import grs_generator

    ctx = field_new(3, 4)
    spec = random_grs_spec(ctx, rng, 8, 3)
    code = grs_generator(spec)
    params = dual_side_eaqecc(code, 1)
    prov = params.provenance
    assert {"l", "hull_primal", "hull_dual"} <= set(prov)
    hd = prov["hull_dual"]
    assert params.tuple() == (8, 8 - 3 - hd, 4, 3 - hd)


def test_dual_side_rejects_degenerate_dimensions(f9):
    from hullforge.grs import LinearCode
    from hullforge.linalg import MatFq

    full = LinearCode(MatFq.identity(f9, 4))
    with pytest.raises(ValueError):
        dual_side_eaqecc(full, 0)


def test_params_json():
    params = EaqeccParams(n=63, k=9, d=54, c=52, q=64, provenance={"family": "T1a"})
    blob = params.to_json()
    assert blob["n"] == 63 and blob["mds"] is True
    assert blob["provenance"]["family"] == "T1a"
    assert str(params) == "[[63,9,54;52]]_64"
