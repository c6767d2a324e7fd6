# import dependencies
from __future__ import annotations

from typing import Any, Dict

import exceptions # type: ignore
from angles import Rotation # type: ignore
from report import SpectrumReport # type: ignore
from spaces.base_space import BaseSpace # type: ignore
from spaces.disc_algebra import DiscAlgebra # type: ignore
from spaces.hardy import HardyBanach # type: ignore
from weights import Weight # type: ignore

#
def check_order( order: Any ) -> int:

    if isinstance( order, bool ) or not isinstance( order, int ) or order < 1:

        raise exceptions.MalformedInput( f"smoothness order must be an integer >= 1, got { order!r}" )

    return order

# spaces of smooth analytic functions; every spectral set equals the one on the reduced space
class ReducedSpace( BaseSpace ):

    theorem = "<abstract>"

    def __init__( self, order: int = 1 ) -> None:

        self.order = check_order( order )

    def parameters( self ) -> Dict[ str, Any ]:

        return { "order": self.order }

    #
    def reduced( self ) -> BaseSpace:

        raise NotImplementedError()

    def invertibility_case( self, w: Weight ):

        return self.reduced().invertibility_case( w )

    def index_value( self, w: Weight ):

        return self.reduced().index_value( w )

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        report = self.reduced().classify( w, alpha )
        report.citations.insert( 0, self.theorem )

        return report

# C^n_A: n times continuously differentiable up to the boundary
class SmoothCnA( ReducedSpace ):

    variant = "smooth_cn"
    theorem = "Thm 7.12"
    required_tags = frozenset( { "disc_algebra" } )

    def reduced( self ) -> BaseSpace:

        return DiscAlgebra()

# W^n_A: n derivatives in a Banach function space on the circle
class SobolevWnA( ReducedSpace ):

    variant = "sobolev_wn"
    theorem = "Thm 7.13"
    required_tags = frozenset( { "H_inf" } )

    def reduced( self ) -> BaseSpace:

        return HardyBanach()
