# import dependencies
from __future__ import annotations

from typing import List, Optional, Tuple

import numpy as np

import color # type: ignore
from circular_set import Circle, ClosedAnnulus, ClosedDisc, Component, CircularSet, OpenAnnulus, OpenDisc, Origin # type: ignore
from grid_types import grid_points # type: ignore
from render_order import RenderOrder # type: ignore
from report import SpectrumReport # type: ignore
from set_kinds import SpectralSet # type: ignore

SIZE = 400
CENTER = SIZE / 2
PLOT_RADIUS = 160.0

Element = Tuple[ RenderOrder, str ]

# fixed-point numbers so identical inputs give identical bytes
def _num( value: float ) -> str:

    return f"{ value:.3f}"

#
def _hex( rgb: Tuple[ int, int, int ] ) -> str:

    return "#" + "".join( f"{ int( channel ):02x}" for channel in rgb )

# linear ramp between the heat colours, t = 0 is a vanishing gap
def heat_color( t: float ) -> str:

    t = min( max( t, 0.0 ), 1.0 )
    low, high = np.array( color.heat_low ), np.array( color.heat_high )

    return _hex( tuple( np.rint( low + t * ( high - low ) ) ) )

#
def _circle( r: float, fill: str, stroke: str, dashed: bool = False, width: float = 1.5 ) -> str:

    dash = ' stroke-dasharray="6 4"' if dashed else ""

    return (
        f'<circle cx="{ _num( CENTER ) }" cy="{ _num( CENTER ) }" r="{ _num( r ) }" '
        f'fill="{ fill }" stroke="{ stroke }" stroke-width="{ _num( width ) }"{ dash }/>'
    )

# ring between two radii, drawn as one even-odd path
def _ring( r_in: float, r_out: float, fill: str, stroke: str, dashed: bool = False ) -> str:

    dash = ' stroke-dasharray="6 4"' if dashed else ""
    parts = []

    for r in ( r_out, r_in ):

        left, right = _num( CENTER - r ), _num( CENTER + r )
        parts.append(
            f"M { left } { _num( CENTER ) } A { _num( r ) } { _num( r ) } 0 1 0 { right } { _num( CENTER ) } "
            f"A { _num( r ) } { _num( r ) } 0 1 0 { left } { _num( CENTER ) } Z"
        )

    return f'<path d="{ " ".join( parts ) }" fill="{ fill }" fill-rule="evenodd" stroke="{ stroke }" stroke-width="1.500"{ dash }/>'

# one component of a set, open boundaries dashed
def render_component( component: Component, scale: float, fill: str, stroke: str ) -> str:

    if isinstance( component, Origin ):

        return _circle( 2.5, stroke, stroke )

    if isinstance( component, Circle ):

        return _circle( component.r * scale, "none", stroke, width=2.5 )

    if isinstance( component, ClosedDisc ):

        return _circle( component.r * scale, fill, stroke )

    if isinstance( component, OpenDisc ):

        return _circle( component.r * scale, fill, stroke, dashed=True )

    if isinstance( component, ClosedAnnulus ):

        return _ring( component.r_in * scale, component.r_out * scale, fill, stroke )

    if isinstance( component, OpenAnnulus ):

        return _ring( component.r_in * scale, component.r_out * scale, fill, stroke, dashed=True )

    raise TypeError( f"cannot draw { component!r}" )

#
def render_set( value: CircularSet, scale: float, fill: str, stroke: str ) -> List[ str ]:

    return [ render_component( component, scale, fill, stroke ) for component in value.components ]

# largest radius that has to fit into the plot
def plot_extent( report: Optional[ SpectrumReport ], grid: Optional[ np.ndarray ] ) -> float:

    extent = 0.0

    if report is not None:

        for entry in report.sets.values():

            for value in ( entry.value, entry.upper ):

                if value is not None:

                    extent = max( extent, value.max_radius )

    if grid is not None and grid.size:

        extent = max( extent, float( np.abs( grid_points( grid ) ).max() ) )

    return extent if extent > 0.0 else 1.0

#
def render_heat( grid: np.ndarray, scale: float ) -> List[ Element ]:

    top = float( grid[ "gap" ].max() )
    elements: List[ Element ] = []

    for record in grid:

        t = float( record[ "gap" ] ) / top if top > 0.0 else 0.0
        x = CENTER + float( record[ "re" ] ) * scale
        y = CENTER - float( record[ "im" ] ) * scale
        elements.append(
            ( RenderOrder.HEAT, f'<circle cx="{ _num( x ) }" cy="{ _num( y ) }" r="3.000" fill="{ heat_color( t ) }"/>' )
        )

    return elements

# sigma filled, sigma_ap solid, sigma_r dashed; sets known only up to bounds show their upper enclosure in grey
def render_report( report: SpectrumReport, scale: float ) -> List[ Element ]:

    elements: List[ Element ] = []
    sigma = report[ SpectralSet.SIGMA ]

    if sigma.is_exact:

        elements += [ ( RenderOrder.SPECTRUM, e ) for e in render_set( sigma.value, scale, color.spectrum_fill, color.spectrum_stroke ) ]

    elif sigma.upper is not None:

        elements += [ ( RenderOrder.SPECTRUM, e ) for e in render_set( sigma.upper, scale, color.bounds_fill, color.spectrum_stroke ) ]

    residual = report[ SpectralSet.SIGMA_R ]

    if residual.is_exact:

        for r in residual.value.boundary_radii():

            elements.append( ( RenderOrder.RESIDUAL, _circle( r * scale, "none", color.residual_stroke, dashed=True ) ) )

    approximate = report[ SpectralSet.SIGMA_AP ]

    if approximate.is_exact:

        for r in approximate.value.boundary_radii():

            elements.append( ( RenderOrder.APPROXIMATE, _circle( r * scale, "none", color.approximate_stroke ) ) )

    label = "; ".join( report.citations + report.open_flags )

    if label:

        elements.append(
            ( RenderOrder.LABEL, f'<text x="8.000" y="{ _num( SIZE - 8 ) }" font-size="11" fill="{ color.label_text }">{ _escape( label ) }</text>' )
        )

    return elements

#
def _escape( text: str ) -> str:

    return text.replace( "&", "&amp;" ).replace( "<", "&lt;" ).replace( ">", "&gt;" )

# the whole plot as SVG text, 400 x 400 with the largest radius at 160 px
def render_svg( report: Optional[ SpectrumReport ] = None, grid: Optional[ np.ndarray ] = None ) -> str:

    scale = PLOT_RADIUS / plot_extent( report, grid )
    elements: List[ Element ] = [ ( RenderOrder.BACKGROUND, f'<rect width="{ SIZE }" height="{ SIZE }" fill="{ color.white }"/>' ) ]

    if grid is not None and grid.size:

        elements += render_heat( grid, scale )

    if report is not None:

        elements += render_report( report, scale )

    # stable sort keeps the insertion order inside a layer
    body = "\n".join( text for _, text in sorted( elements, key=lambda element: element[ 0 ].value ) )

    return (
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{ SIZE }" height="{ SIZE }" viewBox="0 0 { SIZE } { SIZE }">\n'
        f"{ body }\n</svg>\n"
    )
