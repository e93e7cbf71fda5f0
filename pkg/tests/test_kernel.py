from fractions import Fraction as Fr

import pytest
from hypothesis import assume, given

from cevian_lab.errors import (IdenticalLines, IdenticalPoints, InfinitePoint,
                               InvalidRatio, NotCollinear, NotInterior)
from cevian_lab.kernel import (HLine, HPoint, concurrent, det3, division_ratio,
                               fmt_rational, incident, join, meet,
                               parse_rational, point, section_point,
                               signed_area)

from . import strategies as s_


def test_join_axis():
    assert join(HPoint(0, 0, 1), HPoint(1, 0, 1)) == HLine(0, 1, 0)


def test_join_identical():
    with pytest.raises(IdenticalPoints):
        join(HPoint(0, 0, 1), HPoint(0, 0, 1))
    with pytest.raises(IdenticalPoints):
        join(HPoint(1, 2, 1), HPoint(2, 4, 2))


def test_join_diagonal():
    assert join(HPoint(0, 0, 1), HPoint(1, 1, 1)) == HLine(1, -1, 0)


def test_meet_axes():
    assert meet(HLine(0, 1, 0), HLine(1, 0, 0)) == HPoint(0, 0, 1)


def test_meet_parallels_at_infinity():
    X = meet(HLine(0, 1, 0), HLine(0, 1, -1))
    assert X == HPoint(1, 0, 0)
    assert not X.is_finite


def test_meet_identical():
    with pytest.raises(IdenticalLines):
        meet(HLine(1, 2, 3), HLine(-2, -4, -6))


def test_medians_meet_at_centroid():
    A, B, C = point(0, 0), point(1, 0), point(0, 1)
    D, E = point(Fr(1, 2), Fr(1, 2)), point(0, Fr(1, 2))
    assert meet(join(A, D), join(B, E)).xy == (Fr(1, 3), Fr(1, 3))


@pytest.mark.parametrize("P, Q, ratio, expected", [
    ((0, 0), (1, 0), 1, (Fr(1, 2), 0)),
    ((0, 0), (3, 0), 2, (2, 0)),
    ((4, 0), (1, 3), 2, (2, 2)),
])
def test_section_point(P, Q, ratio, expected):
    assert section_point(point(*P), point(*Q), ratio).xy == expected


def test_section_point_altitude_foot():
    # foot of the altitude from A(0,0) onto BC in A(0,0), B(4,0), C(1,3)
    X = section_point(point(4, 0), point(1, 3), 2)
    x, y = X.xy
    assert x * (1 - 4) + y * (3 - 0) == 0


def test_section_point_errors():
    with pytest.raises(InvalidRatio):
        section_point(point(0, 0), point(1, 0), 0)
    with pytest.raises(InvalidRatio):
        section_point(point(0, 0), point(1, 0), -1)
    with pytest.raises(InfinitePoint):
        section_point(HPoint(1, 0, 0), point(1, 0), 1)


def test_division_ratio_examples():
    assert division_ratio(point(0, 0), point(1, 0), point(Fr(1, 2), 0)) == 1
    assert division_ratio(point(0, 0), point(3, 0), point(2, 0)) == 2
    P, Q = point(1, 1), point(4, 7)
    assert division_ratio(P, Q, section_point(P, Q, Fr(7, 5))) == Fr(7, 5)


def test_division_ratio_errors():
    with pytest.raises(NotCollinear):
        division_ratio(point(0, 0), point(1, 0), point(Fr(1, 2), 1))
    with pytest.raises(NotInterior):
        division_ratio(point(0, 0), point(1, 0), point(2, 0))
    with pytest.raises(NotInterior):
        division_ratio(point(0, 0), point(1, 0), point(0, 0))


def test_signed_area_examples():
    assert signed_area(point(0, 0), point(1, 0), point(0, 1)) == Fr(1, 2)
    assert signed_area(point(0, 0), point(1, 0), point(2, 0)) == 0
    assert signed_area(point(0, 0), point(0, 1), point(1, 0)) == Fr(-1, 2)
    # scaled homogeneous triples describe the same points
    assert signed_area(HPoint(0, 0, 3), HPoint(2, 0, 2), HPoint(0, -5, -5)) == Fr(1, 2)
    with pytest.raises(InfinitePoint):
        signed_area(HPoint(1, 0, 0), point(1, 0), point(0, 1))


def test_incident():
    assert incident(HPoint(0, 0, 1), HLine(0, 1, 0))
    assert not incident(HPoint(1, 1, 1), HLine(0, 1, 0))


@given(s_.triangles)
def test_centroid_on_medians(tri):
    A, B, C = tri
    (ax, ay), (bx, by), (cx, cy) = A.xy, B.xy, C.xy
    G = point((ax + bx + cx) / 3, (ay + by + cy) / 3)
    for V, P, Q in ((A, B, C), (B, C, A), (C, A, B)):
        assert incident(G, join(V, section_point(P, Q, 1)))


def test_concurrent_examples():
    A, B, C = point(0, 0), point(1, 0), point(0, 1)
    medians = [join(V, section_point(P, Q, 1)) for V, P, Q in ((A, B, C), (B, C, A), (C, A, B))]
    assert concurrent(*medians)
    assert not concurrent(HLine(0, 1, 0), HLine(1, 0, 0), HLine(1, 1, -1))
    with pytest.raises(IdenticalLines):
        concurrent(HLine(0, 1, 0), HLine(0, 2, 0), HLine(1, 0, 0))


def test_altitudes_concurrent():
    A, B, C = point(0, 0), point(4, 0), point(1, 3)
    # exact feet: on BC at ratio 2 (see above), on CA and AB by projection
    foot_a = section_point(B, C, 2)
    foot_b = point(Fr(4, 10), Fr(12, 10))   # projection of B onto line through (0,0),(1,3)
    foot_c = point(1, 0)
    alts = [join(A, foot_a), join(B, foot_b), join(C, foot_c)]
    assert concurrent(*alts)
    assert meet(alts[0], alts[1]).xy == (1, 1)


def test_parse_rational():
    assert parse_rational("3/6") == Fr(1, 2)
    assert parse_rational("-4") == -4
    assert fmt_rational(Fr(4, 2)) == "2/1"
    for bad in ("1.5", "1e3", "1/0", "abc", ""):
        with pytest.raises(InvalidRatio):
            parse_rational(bad)


def test_floats_rejected():
    with pytest.raises(TypeError):
        point(0.5, 1)


def test_zero_triple_rejected():
    with pytest.raises(ValueError):
        HPoint(0, 0, 0)


# -- properties ----------------------------------------------------------

@given(s_.hpoints, s_.hpoints, s_.nonzero_rationals, s_.nonzero_rationals)
def test_join_scale_invariance(P, Q, k, m):
    assume(P != Q)
    assert join(P.scaled(k), Q.scaled(m)) == join(P, Q)


@given(s_.hlines, s_.hlines, s_.hlines, s_.nonzero_rationals)
def test_concurrent_scale_invariance(l, m, n, k):
    assume(l != m and m != n and l != n)
    assert concurrent(l.scaled(k), m, n) == concurrent(l, m, n)


@given(s_.hpoints, s_.hlines, s_.nonzero_rationals)
def test_incident_scale_invariance(P, l, k):
    assert incident(P.scaled(k), l) == incident(P, l) == incident(P, l.scaled(k))


@given(s_.hpoints, s_.hpoints, s_.hpoints)
def test_join_meet_duality(P, Q, R):
    assume(det3(P.coords, Q.coords, R.coords) != 0)
    assert meet(join(P, Q), join(P, R)) == P


@given(s_.finite_points, s_.finite_points, s_.positive_rationals)
def test_section_division_round_trip(P, Q, r):
    assume(P != Q)
    assert division_ratio(P, Q, section_point(P, Q, r)) == r


@given(s_.finite_points, s_.finite_points, s_.finite_points, s_.rationals, s_.rationals)
def test_area_antisymmetry_and_translation(P, Q, R, dx, dy):
    assert signed_area(P, Q, R) == -signed_area(Q, P, R)
    shift = lambda X: point(X.xy[0] + dx, X.xy[1] + dy)
    assert signed_area(shift(P), shift(Q), shift(R)) == signed_area(P, Q, R)


@given(s_.hlines, s_.hlines, s_.hlines)
def test_concurrent_iff_meet_incident(l, m, n):
    assume(l != m and m != n and l != n)
    assert concurrent(l, m, n) == incident(meet(l, m), n)


@given(s_.hpoints, s_.nonzero_rationals)
def test_projective_equality_and_hash(P, k):
    Q = P.scaled(k)
    assert P == Q
    assert hash(P) == hash(Q)
