# import dependencies
import numpy as np

import color
import weight_factories
from classify import classify
from grid_types import new_grid, polar_points
from render_functions import heat_color, plot_extent, render_svg
from spaces import Bergman

#
def _report( w ):

    return classify( Bergman( 2 ), w, weight_factories.golden )

# the largest radius lands on the 160 px circle
def test_spectrum_circle_is_scaled_to_the_plot():

    svg = render_svg( _report( weight_factories.z_minus_two ) )

    assert svg.startswith( '<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400"' )
    assert 'r="160.000"' in svg
    assert svg.endswith( "</svg>\n" )

#
def test_residual_spectrum_is_dashed():

    svg = render_svg( _report( weight_factories.residual_pair ) )
    residual = [ line for line in svg.splitlines() if color.residual_stroke in line ]

    assert residual
    assert all( 'stroke-dasharray="6 4"' in line for line in residual )

# same input, same bytes
def test_rendering_is_deterministic():

    report = _report( weight_factories.residual_pair )
    grid = new_grid( polar_points( [ 1.0, 2.0 ], 8 ), np.linspace( 0.0, 1.0, 16 ) )

    assert render_svg( report, grid ) == render_svg( report, grid )

# heat dots sit under the spectrum, labels on top
def test_layer_order():

    report = _report( weight_factories.z_minus_two )
    grid = new_grid( polar_points( [ 2.0 ], 4 ), np.ones( 4 ) )
    lines = render_svg( report, grid ).splitlines()

    heat = max( i for i, line in enumerate( lines ) if 'r="3.000"' in line )
    spectrum = min( i for i, line in enumerate( lines ) if color.spectrum_stroke in line )
    label = min( i for i, line in enumerate( lines ) if line.startswith( "<text" ) )

    assert lines[ 1 ].startswith( "<rect" )
    assert heat < spectrum < label

#
def test_heat_color_ends():

    assert heat_color( 0.0 ) == "#ff3030"
    assert heat_color( 1.0 ) == "#2040ff"
    assert heat_color( 7.0 ) == heat_color( 1.0 )

#
def test_plot_extent():

    assert plot_extent( None, None ) == 1.0
    assert plot_extent( None, new_grid( np.array( [ 3j ] ), np.zeros( 1 ) ) ) == 3.0
    assert plot_extent( _report( weight_factories.z_minus_two ), None ) == 2.0
