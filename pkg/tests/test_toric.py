"""Engine tests: ray sets, group actions, the threshold computation, fan
constructors, and the fan text format."""

import random
from fractions import Fraction

import pytest
from conftest import (conjugate_group, inverse_unimodular, random_unimodular,
                      transform_rays)

from toriclct.errors import (DegenerateSubdivision, FanNotComplete,
                             GroupDoesNotPreserveFan, GroupNotClosed,
                             NotWellFormed, ParseError)
from toriclct.geometry import fixed_subspace
from toriclct.toric import (GroupAction, RaySet, ToricLctReport,
                            bundle_lct_closed_form, check_well_formed,
                            dual_polytope, format_fan, parse_fan, product_fan,
                            projective_space_fan, projectivized_bundle_fan,
                            star_subdivide, toric_lct, wps_fan)

F = Fraction

P1 = projective_space_fan(1)
P2 = projective_space_fan(2)
P3 = projective_space_fan(3)

SWAP2 = ((0, 1), (1, 0))
ROT3 = ((0, -1), (1, -1))  # order-3 rotation of the P2 fan
NEG2 = ((-1, 0), (0, -1))
EYE2 = ((1, 0), (0, 1))


# ---------------------------------------------------------------------------
# ray sets and groups


def test_rayset_rejects_zero():
    with pytest.raises(ValueError):
        RaySet(((0, 0), (1, 0)))


def test_rayset_rejects_duplicates():
    with pytest.raises(ValueError):
        RaySet(((1, 0), (1, 0)))


def test_rayset_rejects_mixed_dims():
    with pytest.raises(ValueError):
        RaySet(((1, 0), (1,)))


def test_rayset_normalizes_with_warning():
    with pytest.warns(RuntimeWarning):
        rays = RaySet(((2, 4), (0, 1), (-1, -1)))
    assert (1, 2) in set(rays)


def test_group_rejects_non_unimodular():
    with pytest.raises(ValueError):
        GroupAction((EYE2, ((2, 0), (0, 1))))


def test_group_requires_identity():
    with pytest.raises(GroupNotClosed):
        GroupAction((NEG2,))


def test_group_requires_closure():
    rot4 = ((0, -1), (1, 0))  # rot4 squared is -identity, which is missing
    with pytest.raises(GroupNotClosed):
        GroupAction((EYE2, rot4))


def test_generate_s3():
    g = GroupAction.generate([SWAP2, ROT3])
    assert len(g) == 6


def test_generate_infinite_hits_cap():
    shear = ((1, 1), (0, 1))
    with pytest.raises(GroupNotClosed):
        GroupAction.generate([shear], cap=100)


# ---------------------------------------------------------------------------
# the threshold computation


def test_dual_polytope_p1():
    poly = dual_polytope(P1)
    assert [(h.normal, h.offset) for h in poly.halfspaces] == [
        ((1,), -1), ((-1,), -1)]


def test_lct_p2():
    report = toric_lct(P2)
    assert report.lct == F(1, 3)
    assert report.max_pairing == 2
    assert report.witness_vertex == (-1, -1)
    assert report.witness_ray == (-1, -1)


def test_lct_p112():
    rays = RaySet(((1, 0), (0, 1), (-1, -2)))
    report = toric_lct(rays)
    assert report.lct == F(1, 4)
    assert report.max_pairing == 3
    # the maximum is attained at (3,-1) against ray (1,0) as well; the
    # reported witness is the lexicographically smallest attaining pair
    assert 3 * 1 + (-1) * 0 == report.max_pairing
    assert (report.witness_vertex, report.witness_ray) == ((-1, -1), (-1, -2))


def test_lct_incomplete_fan():
    with pytest.raises(FanNotComplete):
        toric_lct(RaySet(((1, 0), (0, 1))))


def test_lct_p1_with_sign_flip():
    group = GroupAction((((1,),), ((-1,),)))
    assert toric_lct(P1, group).lct == 1
    assert toric_lct(P1).lct == F(1, 2)


def test_lct_p2_full_symmetry():
    group = GroupAction.generate([SWAP2, ROT3])
    report = toric_lct(P2, group)
    assert report.lct == 1
    assert report.max_pairing == 0
    assert report.witness_vertex == (0, 0)


def test_lct_p2_swap_only():
    # fixed line (1,1): the restricted maximum still reaches 2
    group = GroupAction((EYE2, SWAP2))
    assert toric_lct(P2, group).lct == F(1, 3)


def test_lct_is_one_iff_fixed_space_trivial():
    cases = [
        (P1, GroupAction((((1,),), ((-1,),)))),
        (P2, GroupAction.generate([SWAP2, ROT3])),
        (P2, GroupAction((EYE2, SWAP2))),
        (product_fan(P1, P1), GroupAction((EYE2, NEG2))),
        (product_fan(P1, P1), GroupAction.generate([SWAP2])),
    ]
    for rays, group in cases:
        value = toric_lct(rays, group).lct
        assert (value == 1) == (fixed_subspace(group.elements) == [])


def test_group_must_preserve_rays():
    rays = RaySet(((1, 0), (0, 1), (-1, -2)))
    with pytest.raises(GroupDoesNotPreserveFan):
        toric_lct(rays, GroupAction((EYE2, SWAP2)))


def test_group_dimension_mismatch():
    with pytest.raises(ValueError):
        toric_lct(P3, GroupAction((EYE2,)))


def test_report_consistency_enforced():
    with pytest.raises(ValueError):
        ToricLctReport(lct=F(1, 2), max_pairing=F(2),
                       witness_vertex=(F(1),), witness_ray=(2,))


def test_equivariant_monotonicity_smoke():
    plain = toric_lct(P2).lct
    sub = toric_lct(P2, GroupAction((EYE2, SWAP2))).lct
    full = toric_lct(P2, GroupAction.generate([SWAP2, ROT3])).lct
    assert plain <= sub <= full


def test_unimodular_invariance_smoke():
    rng = random.Random(17)
    for _ in range(10):
        u = random_unimodular(rng, 2)
        assert toric_lct(transform_rays(u, P2)).lct == F(1, 3)


def test_conjugated_group_invariance():
    rng = random.Random(19)
    group = GroupAction.generate([SWAP2, ROT3])
    for _ in range(5):
        u = random_unimodular(rng, 2)
        conj = conjugate_group(u, inverse_unimodular(u), group)
        assert toric_lct(transform_rays(u, P2), conj).lct == 1


# ---------------------------------------------------------------------------
# fan constructors


def test_projective_space_fans():
    assert tuple(P1) == ((1,), (-1,))
    assert tuple(P2) == ((1, 0), (0, 1), (-1, -1))
    assert len(P3) == 4
    assert tuple(sum(c) for c in zip(*P3)) == (0, 0, 0)
    with pytest.raises(ValueError):
        projective_space_fan(0)


def test_lct_projective_spaces():
    for n in range(1, 5):
        assert toric_lct(projective_space_fan(n)).lct == F(1, n + 1)


def test_product_fan_p1_p1():
    assert set(product_fan(P1, P1)) == {(1, 0), (-1, 0), (0, 1), (0, -1)}


def test_product_fan_p1_p2():
    fan = product_fan(P1, P2)
    assert len(fan) == 5 and fan.dim == 3
    assert toric_lct(fan).lct == F(1, 3)


def test_product_fan_p1_cubed():
    fan = product_fan(product_fan(P1, P1), P1)
    assert toric_lct(fan).lct == F(1, 2)


def test_bundle_fan_rays():
    fan = projectivized_bundle_fan(2, (1,))
    assert set(fan) == {(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1),
                        (-1, -1, -1)}


def test_bundle_fan_engine_values():
    assert toric_lct(projectivized_bundle_fan(2, (1,))).lct == F(1, 4)
    assert toric_lct(projectivized_bundle_fan(2, (2,))).lct == F(1, 5)


def test_bundle_untwisted_matches_product():
    fan = projectivized_bundle_fan(1, (0, 0))
    assert toric_lct(fan).lct == toric_lct(product_fan(P1, P2)).lct


def test_bundle_closed_form():
    assert bundle_lct_closed_form(2, (1,)) == F(1, 4)
    assert bundle_lct_closed_form(3, (0,)) == F(1, 4)
    assert bundle_lct_closed_form(1, (1, 1, 1)) == F(1, 5)
    with pytest.raises(ValueError):
        bundle_lct_closed_form(1, ())
    with pytest.raises(ValueError):
        bundle_lct_closed_form(2, (-1,))


def test_bundle_holds_outside_fano_range():
    # P(O + O(-3)) over P1 is not Fano, yet the formula still matches
    fan = projectivized_bundle_fan(1, (3,))
    assert toric_lct(fan).lct == bundle_lct_closed_form(1, (3,)) == F(1, 5)


def test_star_subdivide_blowup_of_p3_line():
    fan = star_subdivide(P3, [(1, 0, 0), (0, 1, 0)])
    assert (1, 1, 0) in set(fan)
    assert toric_lct(fan).lct == F(1, 4)


def test_star_subdivide_f1():
    fan = star_subdivide(P2, [(1, 0), (0, 1)])
    assert set(fan) == {(1, 0), (0, 1), (-1, -1), (1, 1)}
    assert toric_lct(fan).lct == F(1, 3)


def test_star_subdivide_degenerate_cases():
    with pytest.raises(DegenerateSubdivision):
        star_subdivide(P1, [(1,), (-1,)])
    with pytest.raises(DegenerateSubdivision):
        star_subdivide(P2, [(1, 0), (1, 0)])
    with pytest.raises(ValueError):
        star_subdivide(P2, [(5, 7)])
    f1 = star_subdivide(P2, [(1, 0), (0, 1)])
    with pytest.raises(DegenerateSubdivision):
        star_subdivide(f1, [(1, 0), (0, 1)])


def test_wps_fan_values():
    assert toric_lct(wps_fan((1, 1, 1))).lct == F(1, 3)
    assert toric_lct(wps_fan((1, 1, 2))).lct == F(1, 4)
    assert toric_lct(wps_fan((1, 1, 2, 3))).lct == F(1, 7)


def test_wps_fan_relation():
    for weights in ((1, 1, 2), (1, 2, 3), (1, 1, 2, 3), (2, 3, 5)):
        rays = tuple(wps_fan(weights))
        n = len(weights) - 1
        for i in range(n):
            assert sum(w * v[i] for w, v in zip(weights, rays)) == 0


def test_well_formedness():
    check_well_formed((1, 1))
    with pytest.raises(NotWellFormed):
        check_well_formed((2, 2, 3))
    with pytest.raises(ValueError):
        check_well_formed((0, 1))
    with pytest.raises(ValueError):
        check_well_formed((3,))


# ---------------------------------------------------------------------------
# fan text format


def test_format_parse_round_trip():
    text = format_fan(P2)
    rays, group = parse_fan(text)
    assert tuple(rays) == tuple(P2) and group is None
    assert format_fan(rays) == text


def test_format_parse_round_trip_with_group():
    g = GroupAction.generate([SWAP2, ROT3])
    text = format_fan(P2, g)
    rays, group = parse_fan(text)
    assert tuple(rays) == tuple(P2)
    assert group is not None and group.elements == g.elements
    assert format_fan(rays, group) == text


def test_parse_fan_comments_and_blanks():
    rays, group = parse_fan("# a comment\n1,0\n# another\n0,1\n-1,-1\n")
    assert tuple(rays) == ((1, 0), (0, 1), (-1, -1)) and group is None


def test_parse_fan_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_fan("1,0\nnope\n-1,-1\n")
    with pytest.raises(ParseError, match="line 3"):
        parse_fan("1,0\n0,1\n1,2,3\n")
    with pytest.raises(ParseError):
        parse_fan("")
    with pytest.raises(ParseError, match="line 5"):
        parse_fan("1,0\n\n1,0,0,1\n\n1,0,0,1\n")
    with pytest.raises(ParseError, match="entries"):
        parse_fan("1,0\n0,1\n-1,-1\n\n1,0\n")
