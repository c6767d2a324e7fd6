# import dependencies
import numpy as np
import pytest

import exceptions
import weight_factories
from analysis import geometric_mean
from angles import NamedIrrational, RawRadians, RootOfUnity, RotationVector
from ergodic import (
    Verdict,
    ap_membership,
    group_rotation_radius,
    orbit_products,
    polynomial_radius,
    polynomial_radius_cases,
)
from weight_gen import weight_corpus
from weights import BoundarySamples, MultiPolynomial, Polynomial

golden = weight_factories.golden

#
def test_orbit_products_of_unimodular_weights():

    ones = orbit_products( weight_factories.one, golden, 1.0, 5 )

    assert ones.forward_mods == pytest.approx( np.ones( 5 ) )
    assert ones.backward_mods == pytest.approx( np.ones( 5 ) )

    rotation = orbit_products( weight_factories.z, golden, 1.0, 3 )

    assert rotation.forward_mods == pytest.approx( np.ones( 3 ) )

# the Birkhoff average of log|w| approaches the mean of log|w|
def test_orbit_average_tracks_the_geometric_mean():

    orbit = orbit_products( weight_factories.z_minus_two, golden, 1.0, 100 )

    assert orbit.forward_log[ -1 ] / 100 == pytest.approx( np.log( 2.0 ), abs=0.1 )

#
def test_orbit_products_reject_mismatched_inputs():

    with pytest.raises( exceptions.PreconditionError ):

        orbit_products( weight_factories.bidisc_residual, golden, 1.0, 5 )

    with pytest.raises( exceptions.PreconditionError ):

        orbit_products( weight_factories.one, golden, 1.0, 0 )

#
def test_constant_weight_membership():

    assert ap_membership( weight_factories.one, golden, 1.0 ).verdict is Verdict.CERTIFIED_IN
    assert ap_membership( weight_factories.one, golden, 0.5 ).verdict is Verdict.CERTIFIED_OUT

# the orbit test reproduces the circle of radius 2 for ( z - 2 )( z - 1/2 )
@pytest.mark.parametrize( "lam, verdict", [
    ( 2.0, Verdict.CERTIFIED_IN ),
    ( 1.2, Verdict.CERTIFIED_OUT ),
    ( 1.5, Verdict.CERTIFIED_OUT ),
    ( 2.5, Verdict.CERTIFIED_OUT ),
] )
def test_residual_pair_membership( lam, verdict ):

    result = ap_membership( weight_factories.residual_pair, golden, lam, n_max=200, grid_size=4096 )

    assert result.verdict is verdict

    if verdict is Verdict.CERTIFIED_IN:

        assert abs( result.witness ) == pytest.approx( 1.0 )

#
def test_membership_preconditions():

    with pytest.raises( exceptions.PreconditionError ):

        ap_membership( weight_factories.one, golden, 0.0 )

    with pytest.raises( exceptions.PreconditionError ):

        ap_membership( weight_factories.one, RootOfUnity( 1, 3 ), 1.0 )

#
def test_radius_with_an_irrational_rotation():

    assert group_rotation_radius( weight_factories.z_minus_two, golden ) == pytest.approx( 2.0 )

# prod_j ( alpha^j t - 2 ) = t^3 - 8 whose modulus peaks at 9
def test_radius_with_a_cube_root_of_unity():

    radius = group_rotation_radius( weight_factories.z_minus_two, RootOfUnity( 1, 3 ) )

    assert radius == pytest.approx( 9.0 ** ( 1.0 / 3.0 ), abs=1e-6 )

#
def test_radius_on_the_torus():

    w = MultiPolynomial.lift( weight_factories.z_minus_two, 2 )

    assert group_rotation_radius( w, weight_factories.golden_torus ) == pytest.approx( 2.0 )

#
def test_radius_rejects_relations_and_undeclared_angles():

    related = RotationVector( ( golden, NamedIrrational( "sqrt2" ) ), ( ( 1, -1 ), ) )

    with pytest.raises( exceptions.PreconditionError ):

        group_rotation_radius( weight_factories.bidisc_residual, related )

    with pytest.raises( exceptions.PreconditionError ):

        group_rotation_radius( weight_factories.z_minus_two, RawRadians( 1.0 ) )

#
@pytest.mark.parametrize( "moduli, expected", [
    ( [ 2.0, 3.0 ], 6.0 ),
    ( [ 0.5, 0.3 ], 1.0 ),
    ( [ 2.0, 0.5 ], 2.0 ),
] )
def test_polynomial_radius_cases( moduli, expected ):

    assert polynomial_radius_cases( moduli ) == pytest.approx( expected )

#
def test_polynomial_radius_needs_an_invertible_weight():

    with pytest.raises( exceptions.PreconditionError, match="not invertible" ):

        polynomial_radius_cases( [ 2.0, 1.0 ] )

    with pytest.raises( TypeError ):

        polynomial_radius( weight_factories.shifted_ratio )

# geometric mean, ergodic radius and the root-modulus cases coincide
def test_three_radius_formulas_agree():

    for w in weight_corpus( 200, seed=5 ):

        mean = geometric_mean( w )

        assert group_rotation_radius( w, golden ) == pytest.approx( mean, rel=1e-8 )
        assert polynomial_radius( w ) == pytest.approx( mean, rel=1e-8 )

#
def test_radius_is_invariant_under_rotating_the_weight():

    w = Polynomial( [ 1.0, -2.5, 1.0 ] )
    turned = Polynomial( w.coeffs * np.exp( 0.7j ) ** np.arange( 3 ) )

    assert group_rotation_radius( turned, golden ) == pytest.approx( group_rotation_radius( w, golden ) )

# the radius formula on sampled weights needs declared Riemann integrability
def test_sampled_weight_radius_needs_integrability():

    values = 2.0 - np.exp( 2j * np.pi * np.arange( 1024 ) / 1024 )

    with pytest.raises( exceptions.PreconditionError, match="riemann_integrable" ):

        group_rotation_radius( BoundarySamples( values ), golden )

    assert group_rotation_radius( BoundarySamples( values, [ "continuous" ] ), golden ) == pytest.approx( 2.0, rel=1e-9 )

# for w = 2 the orbit slack is n_max |log|lambda| - log 2|, so tol_ap and 2 tol_ap bound the undecided band
@pytest.mark.parametrize( "shift, verdict", [
    ( 0.5e-3, Verdict.CERTIFIED_IN ),
    ( -0.5e-3, Verdict.CERTIFIED_IN ),
    ( 1.5e-3, Verdict.INCONCLUSIVE ),
    ( -1.5e-3, Verdict.INCONCLUSIVE ),
    ( 3e-3, Verdict.CERTIFIED_OUT ),
    ( -3e-3, Verdict.CERTIFIED_OUT ),
] )
def test_membership_margin_band( shift, verdict ):

    lam = 2.0 * np.exp( shift )

    assert ap_membership( Polynomial( [ 2.0 ] ), golden, lam, n_max=50, grid_size=64 ).verdict is verdict
