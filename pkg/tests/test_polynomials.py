# import dependencies
import numpy as np
import pytest

import polynomials

#
def test_trim_drops_trailing_zeros():

    assert polynomials.trim( [ 1, 2, 0, 0 ] ).tolist() == [ 1, 2 ]
    assert polynomials.trim( [ 0, 0 ] ).tolist() == [ 0 ]
    assert polynomials.degree( [ 0, 0, 3, 0 ] ) == 2

#
def test_roots_split_off_the_origin():

    found = polynomials.roots( [ 0, 0, -2, 1 ] )

    assert sorted( np.abs( found ).tolist() ) == pytest.approx( [ 0.0, 0.0, 2.0 ] )
    assert np.count_nonzero( found == 0 ) == 2

#
def test_roots_of_a_constant_are_empty():

    assert polynomials.roots( [ 5 ] ).size == 0

#
def test_cluster_groups_nearby_roots():

    groups = polynomials.cluster( np.array( [ 0.5, 0.5 + 1e-9, 2.0 ] ), 1e-7 )

    assert [ multiplicity for _, multiplicity in groups ] == [ 2, 1 ]
    assert groups[ 0 ][ 0 ] == pytest.approx( 0.5 )

# a triple root comes back from eigvals as three nearby roots, wider apart than tol
def test_cluster_keeps_a_triple_root_together():

    coeffs = np.poly( [ 0.5, 0.5, 0.5, 2.0 ] )[ ::-1 ]
    groups = polynomials.cluster( polynomials.roots( coeffs ), 1e-7, coeffs )

    assert sorted( multiplicity for _, multiplicity in groups ) == [ 1, 3 ]
    assert min( abs( centre - 0.5 ) for centre, _ in groups ) < 1e-4

# distinct close roots stay apart
def test_cluster_separates_distinct_roots():

    coeffs = np.poly( [ 0.5, 0.501, 2.0 ] )[ ::-1 ]
    groups = polynomials.cluster( polynomials.roots( coeffs ), 1e-7, coeffs )

    assert [ multiplicity for _, multiplicity in groups ] == [ 1, 1, 1 ]

# log of the Jensen product max( r, |c| ) times the leading coefficient
@pytest.mark.parametrize( "coeffs, r, expected", [
    ( [ -2, 1 ], 1.0, 2.0 ),
    ( [ -2, 1 ], 0.5, 2.0 ),
    ( [ 1, -2.5, 1 ], 1.0, 2.0 ),
    ( [ -0.5, 1 ], 0.25, 0.5 ),
    ( [ 3 ], 1.0, 3.0 ),
] )
def test_log_jensen( coeffs, r, expected ):

    assert np.exp( polynomials.log_jensen( coeffs, r ) ) == pytest.approx( expected, rel=1e-12 )

#
def test_log_jensen_of_zero_is_minus_infinity():

    assert polynomials.log_jensen( [ 0 ] ) == float( "-inf" )
