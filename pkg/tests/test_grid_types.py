# import dependencies
import numpy as np
import pytest

import exceptions
from grid_types import (
    CSV_HEADER,
    grid_from_csv,
    grid_points,
    grid_to_csv,
    new_grid,
    polar_points,
    read_grid_csv,
    write_grid_csv,
)

#
def test_polar_points_go_circle_by_circle():

    points = polar_points( [ 1.0, 2.0 ], 4 )

    assert points.shape == ( 8, )
    np.testing.assert_allclose( np.abs( points ), [ 1.0 ] * 4 + [ 2.0 ] * 4 )
    np.testing.assert_allclose( points[ :4 ], [ 1.0, 1j, -1.0, -1j ], atol=1e-15 )

# a half-turn offset puts the points between the unshifted ones
def test_polar_points_offset():

    points = polar_points( [ 1.0 ], 4, offset=0.5 )

    np.testing.assert_allclose( np.angle( points[ 0 ] ), np.pi / 4 )

@pytest.mark.parametrize( "radii, angles", [ ( [], 4 ), ( [ 1.0 ], 0 ) ] )
def test_polar_points_needs_radii_and_angles( radii, angles ):

    with pytest.raises( exceptions.PreconditionError ):

        polar_points( radii, angles )

#
def test_csv_keeps_every_digit():

    grid = new_grid( np.array( [ 1.0 / 3.0 + 2j / 7.0, -0.1 ] ), np.array( [ np.pi, 0.0 ] ) )
    text = grid_to_csv( grid )

    assert text.splitlines()[ 0 ] == CSV_HEADER
    assert len( text.splitlines() ) == 3

    again = grid_from_csv( text )

    np.testing.assert_array_equal( grid_points( again ), grid_points( grid ) )
    np.testing.assert_array_equal( again[ "gap" ], grid[ "gap" ] )

#
def test_grid_file_on_disk( tmp_path ):

    grid = new_grid( polar_points( [ 0.5 ], 3 ), np.ones( 3 ) )
    path = tmp_path / "grid.csv"
    write_grid_csv( grid, path )

    np.testing.assert_array_equal( read_grid_csv( path )[ "gap" ], np.ones( 3 ) )

@pytest.mark.parametrize( "text", [
    "",
    "x,y,z\n1,2,3\n",
    CSV_HEADER + "\n",
    CSV_HEADER + "\n1,2\n",
    CSV_HEADER + "\n1,two,3\n",
    CSV_HEADER + "\n1,2,nan\n",
] )
def test_malformed_grid_text( text ):

    with pytest.raises( exceptions.MalformedInput ):

        grid_from_csv( text )

#
def test_missing_grid_file( tmp_path ):

    with pytest.raises( exceptions.MalformedInput ):

        read_grid_csv( tmp_path / "nowhere.csv" )

#
def test_unwritable_grid_file( tmp_path ):

    grid = new_grid( polar_points( [ 1.0 ], 2 ), np.zeros( 2 ) )

    with pytest.raises( exceptions.MalformedInput ):

        write_grid_csv( grid, tmp_path / "missing" / "grid.csv" )
