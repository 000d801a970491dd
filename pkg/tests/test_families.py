import json

import pytest

from hullforge.errors import (
    NoPreimageError,
    NoScalingElementError,
    PredicateFailedError,
)
from hullforge.families import (
    Family,
    FamilyRequest,
    _scaling_element,
    build_pointset_coset,
    build_pointset_eq6,
    construct,
    eq6_extended_weight,
    lemma5_predicate,
    lemma7_predicate,
)
from hullforge.ffield import frobenius
from hullforge.grs import compute_u, spec_to_json


def test_lemma5_examples(f81, f9):
    assert lemma5_predicate(f81, 80, 80)  # both orders are 1
    assert lemma5_predicate(f81, 160, 3)
    assert not lemma5_predicate(f9, 2, 2)


def test_lemma5_agreement_grid(f9):
    # the predicate itself cross-checks its two implementations on every call
    for x1 in range(1, 17):
        for x2 in range(1, 17):
            lemma5_predicate(f9, x1, x2)


def test_lemma7_examples(f81):
    assert lemma7_predicate(f81, 1, 160, 3)
    assert lemma7_predicate(f81, 1, 80, 80)
    assert not lemma7_predicate(f81, 1, 7, 80)


def test_lemma7_agreement_grid(f25):
    for x1 in range(1, 49):
        for x2 in range(1, 49):
            lemma7_predicate(f25, 1, x1, x2)


def test_predicates_agree_exhaustively_f81(f81):
    # both predicates cross-check their two implementations internally
    for x1 in range(1, 161):
        for x2 in range(1, 161):
            lemma5_predicate(f81, x1, x2)
            lemma7_predicate(f81, 1, x1, x2)
            lemma7_predicate(f81, 2, x1, x2)


def test_eq6_pointset_f81(f81):
    ps = build_pointset_eq6(f81, 1, 160, 3, 1)
    assert len(ps.points) == 80
    assert len({x.code for x in ps.points}) == 80
    assert ps.provenance["r2"] == 80


def test_eq6_pointset_trivial_second_group(f81):
    # x2 = q - 1 collapses the inner group: points are xi1^1 .. xi1^r
    ps = build_pointset_eq6(f81, 1, 40, 80, 2)
    assert len(ps.points) == 2
    assert [x.code for x in ps.points] == [f81.alpha_pow(40).code, f81.alpha_pow(80).code]
    assert ps.u == compute_u(f81, ps.points)


def test_eq6_pointset_f25_closed_form(f25):
    ps = build_pointset_eq6(f25, 1, 6, 8, 2)
    assert len(ps.points) == 6  # r2 = 24/gcd(8,24) = 3, n = 2*3
    assert ps.u == compute_u(f25, ps.points)


def test_eq6_rejects_bad_parameters(f81):
    with pytest.raises(PredicateFailedError):
        build_pointset_eq6(f81, 1, 7, 80, 1)  # fails the divisibility conditions
    with pytest.raises(PredicateFailedError):
        build_pointset_eq6(f81, 1, 160, 3, 2)  # r exceeds ord(xi1) = 1


def test_eq6_extended_weight_closed_form(f81, f25):
    for ctx, l, x1, x2, r in ((f81, 1, 160, 3, 1), (f25, 1, 6, 8, 2), (f81, 1, 40, 16, 2)):
        ps = build_pointset_eq6(ctx, l, x1, x2, r)
        with_zero = list(ps.points) + [ctx.zero]
        w = compute_u(ctx, with_zero)
        n = len(ps.points)
        # appended-zero weights: w_i = a_i^(-1) u_i on the original points
        for i in range(n):
            assert w[i] == ps.u[i] / ps.points[i]
        assert w[n] == eq6_extended_weight(ctx, ps)


def test_coset_pointset_f81(f81):
    ps = build_pointset_coset(f81, 1, 40, 1)
    assert len(ps.points) == 40
    assert ps.provenance["m1"] == 1 and ps.provenance["m2"] == 40


def test_coset_pointset_trivial_subgroup(f81):
    ps = build_pointset_coset(f81, 1, 1, 2)
    assert len(ps.points) == 2
    # H = {1}: the points are exactly the coset representatives
    assert [x.code for x in ps.points] == [
        f81.alpha_pow(d).code for d in ps.provenance["eta_dlogs"]
    ]


def test_coset_pointset_m8_r2_subfield_property(f81):
    ps = build_pointset_coset(f81, 1, 8, 2)
    assert len(ps.points) == 16
    for a, u in zip(ps.points, ps.u):
        ratio = u / a
        assert frobenius(f81, ratio, 1) == ratio
        assert ratio.code != 0


def test_coset_rejects_bad_parameters(f81, f27):
    with pytest.raises(PredicateFailedError):
        build_pointset_coset(f81, 1, 7, 1)  # 7 does not divide 80
    with pytest.raises(PredicateFailedError):
        build_pointset_coset(f81, 1, 40, 3)  # r exceeds (p^l - 1)/m1 = 2
    with pytest.raises(PredicateFailedError):
        build_pointset_coset(f27, 1, 13, 1)  # 2l does not divide e


def test_subgroup_u_is_subfield_multiple_of_point(f81):
    for ps in (build_pointset_eq6(f81, 1, 160, 3, 1), build_pointset_coset(f81, 1, 40, 2)):
        for a, u in zip(ps.points, ps.u):
            ratio = u / a
            assert frobenius(f81, ratio, 1) == ratio and ratio.code != 0


def test_construct_t1a_table_row():
    built = construct(FamilyRequest(Family.T1A, 2, 6, 2, k=10, h=1, n=63))
    assert built.hull.dim == 1
    assert built.spec.length == 63 and built.spec.k == 10


def test_construct_t1_hull_range(f9):
    # all admissible h for a small instance, including the self-orthogonal top
    for h in range(0, 3):
        req = FamilyRequest(Family.T1A, 3, 4, 1, k=3, h=h, n=16)
        assert construct(req).hull.dim == h


def test_construct_t1b_small():
    for h in range(0, 5):
        req = FamilyRequest(Family.T1B, 3, 4, 2, k=4, h=h, n=8)
        assert construct(req).hull.dim == h


def test_construct_t2_q58_self_orthogonal():
    req = FamilyRequest(Family.T2, 5, 8, 2, k=9, h=9, n=25)
    built = construct(req)
    assert built.hull.dim == 9


def test_construct_t4n1_table_row():
    req = FamilyRequest(Family.T4N1, 3, 4, 1, k=9, h=1, m=40, r=1)
    built = construct(req)
    assert built.spec.length == 41
    assert built.hull.dim == 1


def test_construct_all_nine_families_small():
    requests = [
        FamilyRequest(Family.T1A, 3, 2, 1, k=2, h=1, n=8),
        FamilyRequest(Family.T1B, 3, 4, 2, k=3, h=2, n=8),
        FamilyRequest(Family.T2, 5, 2, 1, k=2, h=2, n=5),
        FamilyRequest(Family.T3N, 5, 2, 1, k=2, h=1, x1=6, x2=8, r=4),
        FamilyRequest(Family.T3N1, 5, 2, 1, k=2, h=2, x1=6, x2=8, r=4),
        FamilyRequest(Family.T3N2, 5, 2, 1, k=2, h=0, x1=6, x2=8, r=4),
        FamilyRequest(Family.T4N, 3, 4, 1, k=3, h=1, m=10, r=2),
        FamilyRequest(Family.T4N1, 3, 4, 1, k=3, h=3, m=10, r=2),
        FamilyRequest(Family.T4N2, 3, 4, 1, k=3, h=2, m=10, r=2),
    ]
    for req in requests:
        built = construct(req)
        assert built.hull.dim == req.h, req
        assert built.spec.length == (built.code.n)


def test_admissibility_rejections():
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T1A, 2, 6, 2, k=99, h=1, n=63))
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T1A, 2, 6, 2, k=10, h=11, n=63))
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T1A, 2, 6, 2, k=10, h=1, n=62))  # 62 does not divide 63
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T2, 2, 6, 2, k=2, h=0, n=4))  # even characteristic
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T2, 3, 3, 1, k=2, h=0, n=3))  # 2l does not divide e
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T3N, 3, 4, 1, k=20, h=20, x1=160, x2=3, r=1))  # h > k-1
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T3N, 3, 4, 1, k=2, h=1, x1=160, x2=3, r=1, n=79))  # n mismatch
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T4N, 3, 4, 1, k=3, h=1, m=10))  # missing r
    with pytest.raises(PredicateFailedError):
        construct(FamilyRequest(Family.T1B, 3, 4, 3, k=2, h=1, n=8))  # l = 3 does not divide e


def test_t1a_h_equals_k_requires_power_solvability(f9):
    # over GF(9) with l = 1, u_i = 8^(-1) alpha^i is not always a 4th power
    with pytest.raises(NoPreimageError):
        construct(FamilyRequest(Family.T1A, 3, 2, 1, k=2, h=2, n=8))


def test_scaling_element_absent_in_f4(f4):
    # q - 1 = 3 divides p^l + 1 = 3: every unit is a cube
    with pytest.raises(NoScalingElementError):
        _scaling_element(f4, 1)


def test_construct_deterministic():
    req = FamilyRequest(Family.T4N, 3, 4, 1, k=9, h=1, m=40, r=1)
    a = construct(req)
    b = construct(req)
    assert spec_to_json(a.spec) == spec_to_json(b.spec)
    assert json.dumps(a.provenance, sort_keys=True) == json.dumps(b.provenance, sort_keys=True)


def test_request_json_round_trip():
    req = FamilyRequest(Family.T3N2, 3, 4, 1, k=5, h=2, x1=160, x2=3, r=1)
    again = FamilyRequest.from_json(json.loads(json.dumps(req.to_json())))
    assert again == req


def test_t1_bound_forms_agree_exhaustively():
    # floor((p^l + n - 1)/(p^l + 1)) >= k is the same as p^l (k-1) <= n-k-1
    for pl in (2, 3, 4, 5, 8, 9, 25):
        for n in range(2, 100):
            for k in range(1, n + 1):
                floor_form = k <= (pl + n - 1) // (pl + 1)
                explicit = pl * (k - 1) <= n - k - 1
                assert floor_form == explicit
