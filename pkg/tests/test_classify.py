# import dependencies
import numpy as np
import pytest

import exceptions
import weight_factories
from circular_set import Circle, ClosedDisc, OpenDisc
from classify import classify, point_spectrum_candidates, residual_index
from report import IndexEntry
from set_kinds import SpectralSet, Status
from spaces import (
    SPACES,
    AnnulusHardy,
    Bergman,
    Bloch,
    Dirichlet,
    DiscAlgebra,
    EllOneA,
    HardyBanach,
    Hinf,
    PolydiscAlgebra,
    PolydiscBergman,
    SmoothCnA,
    SobolevWnA,
    parse_space,
)
from weights import Polynomial, Taylor, rotated

golden = weight_factories.golden

# the single component of an exact set, radii compared approximately
def only_component( report, kind ):

    entry = report[ kind ]

    assert entry.status is Status.EXACT
    assert len( entry.value.components ) == 1

    return entry.value.components[ 0 ]

#
def assert_component( component, kind, radius ):

    assert isinstance( component, kind )
    assert component.r == pytest.approx( radius, rel=1e-12 )

#
def test_bergman_invertible_weight():

    report = classify( Bergman( 2 ), weight_factories.z_minus_two, golden )

    for kind in ( SpectralSet.SIGMA, SpectralSet.SIGMA_1, SpectralSet.SIGMA_AP, SpectralSet.SIGMA_5 ):

        assert only_component( report, kind ) == Circle( 2.0 )

    assert report[ SpectralSet.SIGMA_R ].value.is_empty
    assert report.citations == [ "Thm 7.3(1)" ]

#
def test_bergman_residual_disc():

    report = classify( Bergman( 2 ), weight_factories.residual_pair, golden )

    for kind in ( SpectralSet.SIGMA_AP, SpectralSet.SIGMA_1, SpectralSet.SIGMA_3 ):

        assert_component( only_component( report, kind ), Circle, 2.0 )

    for kind in ( SpectralSet.SIGMA, SpectralSet.SIGMA_4 ):

        assert_component( only_component( report, kind ), ClosedDisc, 2.0 )

    assert_component( only_component( report, SpectralSet.SIGMA_R ), OpenDisc, 2.0 )
    assert len( report.index_map ) == 1
    assert report.index_map[ 0 ].index == -1
    assert report.consistency_violations() == []

#
def test_bergman_weight_vanishing_on_the_circle():

    report = classify( Bergman( 2 ), weight_factories.z_minus_one, golden )

    assert_component( only_component( report, SpectralSet.SIGMA ), ClosedDisc, 1.0 )
    assert_component( only_component( report, SpectralSet.SIGMA_1 ), ClosedDisc, 1.0 )
    assert report.citations == [ "Thm 7.3(3)" ]

# every one-variable space agrees on weights invertible in the disc algebra
@pytest.mark.parametrize( "space", [
    DiscAlgebra(), Hinf(), HardyBanach(), Bergman( 2 ), Bergman( 3 ), Bloch(), Dirichlet( 2 ),
    SmoothCnA( 2 ), SobolevWnA( 1 ), EllOneA(),
] )
def test_cross_space_coherence( space ):

    report = classify( space, weight_factories.z_minus_two, golden )

    assert only_component( report, SpectralSet.SIGMA ) == Circle( 2.0 )
    assert only_component( report, SpectralSet.SIGMA_AP ) == Circle( 2.0 )
    assert not report.has_unknown

#
def test_reduced_spaces_cite_their_reduction():

    assert classify( SmoothCnA( 1 ), weight_factories.z_minus_two, golden ).citations[ 0 ] == "Thm 7.12"
    assert classify( SobolevWnA( 1 ), weight_factories.z_minus_two, golden ).citations[ :2 ] == [ "Thm 7.13", "Cor 7.2" ]

#
def test_disc_algebra_residual_case():

    report = classify( DiscAlgebra(), weight_factories.residual_pair, golden )

    assert report[ SpectralSet.SIGMA_3 ].citation == "Ex 6.3(a)"
    assert_component( only_component( report, SpectralSet.SIGMA_3 ), Circle, 2.0 )
    assert_component( only_component( report, SpectralSet.SIGMA_4 ), ClosedDisc, 2.0 )

#
def test_hinf_finite_blaschke_factor():

    report = classify( Hinf(), weight_factories.residual_pair, golden )

    assert_component( only_component( report, SpectralSet.SIGMA_3 ), Circle, 2.0 )
    assert report[ SpectralSet.SIGMA_3 ].citation == "Cor 6.6(4)"

#
def test_rational_weight_classification():

    report = classify( Bergman( 2 ), weight_factories.shifted_ratio, golden )

    assert only_component( report, SpectralSet.SIGMA ) == Circle( 2.0 )

#
def test_ell_one_weight_vanishing_on_the_circle_is_partial():

    report = classify( EllOneA(), weight_factories.z_minus_one, golden )

    assert report.has_unknown
    assert report[ SpectralSet.SIGMA_AP ].status is Status.UNKNOWN
    assert report.open_flags == [ "Problem 7.2(a)" ]
    assert_component( only_component( report, SpectralSet.SIGMA ), ClosedDisc, 1.0 )

#
def test_ell_one_without_the_lambda_class_brackets_the_radius():

    w = Taylor( [ 2.0, -1.0 ], 0.0, [ "ell1A" ] )
    report = classify( EllOneA(), w, golden )

    assert report.open_flags == [ "Problem 7.2(b)" ]
    assert report[ SpectralSet.SIGMA ].status is Status.BOUNDS
    assert report[ SpectralSet.SIGMA ].upper.max_radius == pytest.approx( 3.0 )

#
def test_annulus_boundary_circles_merge():

    report = classify( AnnulusHardy( 0.5, 2 ), weight_factories.z_minus_two, golden )

    assert only_component( report, SpectralSet.SIGMA_1 ) == Circle( 2.0 )
    assert only_component( report, SpectralSet.SIGMA ) == Circle( 2.0 )

#
def test_annulus_with_an_inner_zero():

    report = classify( AnnulusHardy( 0.25, 2 ), weight_factories.residual_pair, golden )

    assert report[ SpectralSet.SIGMA_1 ].value.boundary_radii() == pytest.approx( [ 1.0, 2.0 ] )
    assert [ entry.index for entry in report.index_map ] == [ -1, "unknown" ]
    assert "Problem 6.2" in report.open_flags
    assert report.consistency_violations() == []

#
def test_polydisc_residual_case():

    report = classify( PolydiscBergman( 2, 2 ), weight_factories.bidisc_residual, weight_factories.golden_torus )

    assert_component( only_component( report, SpectralSet.SIGMA ), ClosedDisc, 1.0 )
    assert_component( only_component( report, SpectralSet.SIGMA_3 ), ClosedDisc, 1.0 )
    assert report.index_map == [ IndexEntry( OpenDisc( report.index_map[ 0 ].component.r ), "-inf" ) ]

#
def test_polydisc_reads_one_variable_polynomials():

    report = classify( PolydiscAlgebra( 2 ), weight_factories.z_minus_two, weight_factories.golden_torus )

    assert_component( only_component( report, SpectralSet.SIGMA ), Circle, 2.0 )

#
def test_periodic_rotations_are_rejected():

    with pytest.raises( exceptions.PreconditionError, match="non-periodic" ):

        classify( Bergman( 2 ), weight_factories.z_minus_two, weight_factories.cube_root )

    with pytest.raises( exceptions.PreconditionError ):

        classify( PolydiscAlgebra( 2 ), weight_factories.z_minus_two, golden )

#
def test_missing_tags_are_rejected():

    with pytest.raises( exceptions.PreconditionError, match="tagged" ):

        classify( EllOneA(), Taylor( [ 2.0 ], 0.0 ), golden )

# the report does not change when the weight is rotated
def test_rotating_the_weight_keeps_the_spectra():

    for w in ( weight_factories.z_minus_two, weight_factories.residual_pair, weight_factories.z_minus_one ):

        plain = classify( Bergman( 2 ), w, golden )
        turned = classify( Bergman( 2 ), rotated( w, np.exp( 1.3j ) ), golden )

        assert turned.sets == plain.sets

#
def test_point_spectrum_candidates():

    alpha = golden.value

    assert point_spectrum_candidates( weight_factories.z_minus_two, golden, 3 ) == pytest.approx(
        [ -2, -2 * alpha, -2 * alpha ** 2 ]
    )
    assert point_spectrum_candidates( weight_factories.z, golden, 3 ) == []
    assert point_spectrum_candidates( weight_factories.one, golden, 2 ) == pytest.approx( [ 1, alpha ] )

#
def test_torus_point_spectrum_candidates():

    found = point_spectrum_candidates( weight_factories.bidisc_residual, weight_factories.golden_torus, 3 )

    assert found[ 0 ] == -0.5
    assert len( found ) == 3

#
@pytest.mark.parametrize( "space, w, rotation, expected", [
    ( Hinf(), weight_factories.residual_pair, golden, -1 ),
    ( Hinf(), weight_factories.origin_double, golden, -2 ),
    ( Bergman( 2 ), weight_factories.residual_pair, golden, -1 ),
    ( PolydiscBergman( 2, 2 ), weight_factories.bidisc_residual, weight_factories.golden_torus, "-inf" ),
] )
def test_residual_index( space, w, rotation, expected ):

    assert residual_index( space, w, rotation ) == expected

#
def test_residual_index_outside_the_residual_case():

    with pytest.raises( exceptions.PreconditionError ):

        residual_index( Hinf(), weight_factories.z_minus_two, golden )

#
def test_parse_space():

    assert parse_space( { "variant": "bergman", "p": 2 } ) == Bergman( 2 )
    assert set( SPACES ) >= { "bergman", "bloch", "ell1a", "annulus_hardy", "polydisc_bergman" }

    for document in (
        { "p": 2 },
        { "variant": "ball_algebra" },
        { "variant": "bergman", "q": 2 },
        { "variant": "bergman", "p": 0.5 },
        { "variant": "annulus_hardy", "R": 1.5 },
        { "variant": "polydisc_algebra", "dim": 1 },
    ):

        with pytest.raises( exceptions.MalformedInput ):

            parse_space( document )
