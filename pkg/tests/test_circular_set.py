# import dependencies
import pytest

import config
import exceptions
from circular_set import (
    EMPTY,
    Circle,
    CircularSet,
    ClosedAnnulus,
    ClosedDisc,
    OpenAnnulus,
    OpenDisc,
    Origin,
    component_from_dict,
)

#
def test_disc_minus_its_rim_is_open():

    disc = CircularSet( [ ClosedDisc( 2.0 ) ] )

    assert disc.difference( CircularSet( [ Circle( 2.0 ) ] ) ).components == [ OpenDisc( 2.0 ) ]
    assert disc.difference( CircularSet( [ OpenDisc( 2.0 ) ] ) ).components == [ Circle( 2.0 ) ]

#
def test_adjacent_pieces_merge():

    merged = CircularSet( [ ClosedDisc( 1.0 ), ClosedAnnulus( 1.0, 2.0 ) ] )

    assert merged.components == [ ClosedDisc( 2.0 ) ]

# radii within the relative merge tolerance are one circle
def test_nearby_circles_merge():

    merged = CircularSet( [ Circle( 2.0 ) ] ).union( CircularSet( [ Circle( 2.0 + 1e-12 ) ] ) )

    assert merged.components == [ Circle( 2.0 ) ]

    with config.using_tolerances( merge_rel=1e-15 ):

        apart = CircularSet( [ Circle( 2.0 ) ] ).union( CircularSet( [ Circle( 2.0 + 1e-12 ) ] ) )

    assert len( apart.components ) == 2

#
def test_annulus_minus_its_boundary():

    ring = CircularSet( [ ClosedAnnulus( 0.5, 2.0 ) ] )
    rims = CircularSet( [ Circle( 0.5 ), Circle( 2.0 ) ] )

    assert ring.difference( rims ).components == [ OpenAnnulus( 0.5, 2.0 ) ]
    assert rims.is_subset( ring )
    assert not ring.is_subset( rims )

#
def test_half_open_ring_splits_into_canonical_pieces():

    ring = CircularSet( [ OpenAnnulus( 1.0, 2.0 ), Circle( 1.0 ) ] )

    assert ring.components == [ Circle( 1.0 ), OpenAnnulus( 1.0, 2.0 ) ]

#
def test_membership_uses_the_modulus_only():

    disc = CircularSet( [ OpenDisc( 2.0 ) ] )

    assert disc.contains( 1.5j )
    assert disc.contains( 0 )
    assert not disc.contains( -2.0 )
    assert CircularSet( [ Circle( 2.0 ) ] ).contains( 2j )

#
def test_boundary_radii_and_extent():

    value = CircularSet( [ Origin(), ClosedAnnulus( 1.0, 3.0 ) ] )

    assert value.boundary_radii() == [ 1.0, 3.0 ]
    assert value.max_radius == 3.0
    assert EMPTY.is_empty
    assert EMPTY.max_radius == 0.0

#
def test_json_form():

    value = CircularSet( [ Origin(), Circle( 2.0 ), OpenAnnulus( 3.0, 4.0 ) ] )

    assert value.to_json() == [ { "origin": True }, { "circle": 2.0 }, { "open_annulus": [ 3.0, 4.0 ] } ]
    assert CircularSet.from_json( value.to_json() ) == value

#
@pytest.mark.parametrize( "document", [
    { "circle": -1.0 },
    { "circle": "2" },
    { "open_disc": 0.0 },
    { "closed_annulus": [ 2.0, 1.0 ] },
    { "closed_annulus": 2.0 },
    { "square": 1.0 },
    { "circle": 1.0, "open_disc": 2.0 },
] )
def test_malformed_components( document ):

    with pytest.raises( exceptions.MalformedInput ):

        component_from_dict( document )
