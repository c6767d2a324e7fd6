# import dependencies
from __future__ import annotations

import logging
from typing import Any, Dict, Optional

import exceptions # type: ignore
from analysis import invertibility_profile # type: ignore
from angles import Rotation, RotationVector # type: ignore
from circular_set import OpenDisc # type: ignore
from ergodic import group_rotation_radius # type: ignore
from report import IndexEntry, IndexValue, SetEntry, SpectrumReport # type: ignore
from spaces.base_space import ( # type: ignore
    BaseSpace,
    circle,
    closed_disc,
    make_report,
    residual_disc_sets,
    trichotomy_case,
    uniform_sets,
)
from spaces.trichotomy import check_exponent # type: ignore
from weights import MultiPolynomial, Polynomial, Weight # type: ignore

logger = logging.getLogger( __name__ )

#
def check_dimension( dim: Any ) -> int:

    if isinstance( dim, bool ) or not isinstance( dim, int ) or dim < 2:

        raise exceptions.MalformedInput( f"polydisc dimension must be an integer >= 2, got { dim!r}" )

    return dim

# spaces on the polydisc U^n; every radius comes from the Haar measure of the torus
class PolydiscSpace( BaseSpace ):

    case_citations: Dict[ int, str ] = {}

    def __init__( self, dim: int ) -> None:

        self.dim = check_dimension( dim )

    def parameters( self ) -> Dict[ str, Any ]:

        return { "dim": self.dim }

    def check_rotation( self, alpha: Rotation ) -> None:

        if not isinstance( alpha, RotationVector ) or alpha.dimension != self.dim:

            raise exceptions.PreconditionError( f"{ self.variant } needs a rotation vector with { self.dim } components" )

        if alpha.relations:

            raise exceptions.PreconditionError( "rotations with a nonempty relation lattice are not supported" )

        if alpha.is_periodic:

            raise exceptions.PreconditionError( "every rotation component must be asserted non-periodic" )

    # polynomials in one variable are read as polynomials in z_1
    def lifted( self, w: Weight ) -> MultiPolynomial:

        if isinstance( w, Polynomial ):

            return MultiPolynomial.lift( w, self.dim )

        if not isinstance( w, MultiPolynomial ) or w.dimension != self.dim:

            raise exceptions.PreconditionError( f"{ self.variant } needs a polynomial in { self.dim } variables" )

        return w

    def check_weight( self, w: Weight ) -> None:

        self.lifted( w )

    def invertibility_case( self, w: Weight ) -> Optional[ int ]:

        profile = invertibility_profile( self.lifted( w ) )

        return trichotomy_case( profile.in_disc_algebra, profile.in_continuous_boundary )

    # zeros of a function of several variables are never isolated, so the codimension is infinite
    def index_value( self, w: Weight ) -> IndexValue:

        return "-inf"

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        weight = self.lifted( w )
        case = self.invertibility_case( weight )

        if case is None:

            return self.trichotomy_report( weight, None )

        radius = group_rotation_radius( weight, alpha )
        citation = self.case_citations[ case ]
        logger.info( "%s: case %d ( %s ), radius %.17g", self.variant, case, citation, radius )

        if case == 1:

            return make_report( uniform_sets( SetEntry.exact( circle( radius ), citation ) ) )

        if case == 3:

            return make_report( uniform_sets( SetEntry.exact( closed_disc( radius ), citation ) ) )

        sets = residual_disc_sets( ( radius, radius ), citation, SetEntry.exact( closed_disc( radius ), "Ex 6.3(b)" ) )
        index_map = [ IndexEntry( OpenDisc( radius ), "-inf" ) ]

        return make_report( sets, index_map )

#
class PolydiscAlgebra( PolydiscSpace ):

    variant = "polydisc_algebra"
    case_citations = { 1: "Thm 6.1(4)(I)", 2: "Thm 6.1(4)(III)", 3: "Thm 6.1(4)(II)" }

#
class PolydiscBergman( PolydiscSpace ):

    variant = "polydisc_bergman"
    case_citations = { 1: "Thm 7.5(1)", 2: "Thm 7.5(2)", 3: "Thm 7.5(3)" }

    def __init__( self, dim: int, p: float = 2.0 ) -> None:

        super().__init__( dim )
        self.p = check_exponent( p )

    def parameters( self ) -> Dict[ str, Any ]:

        return { "dim": self.dim, "p": self.p }
