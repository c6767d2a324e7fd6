# import dependencies
from __future__ import annotations

import logging

import numpy as np

from angles import Rotation # type: ignore
from circular_set import EMPTY # type: ignore
from report import SetEntry, SpectrumReport # type: ignore
from set_kinds import SpectralSet # type: ignore
from spaces.base_space import BaseSpace, circle, closed_disc, make_report, open_disc, outer_radius # type: ignore
from weights import Taylor, Weight, taylor_coefficients # type: ignore

logger = logging.getLogger( __name__ )

NOT_INVERTIBLE_FLAG = "Problem 7.2(a)"
NOT_LAMBDA_FLAG = "Problem 7.2(b)"

# absolutely summable Taylor coefficients with the sum norm
class EllOneA( BaseSpace ):

    variant = "ell1a"
    required_tags = frozenset( { "ell1A" } )
    norm_tag = "sum"
    case_citations = { 1: "Thm 7.17", 2: "Thm 7.17", 3: "Thm 7.17" }

    def monomial_norms( self, count: int ) -> np.ndarray:

        return np.ones( count )

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        if "Lambda_class" not in w.tags:

            return self._radius_bounds( w )

        case = self.invertibility_case( w )

        if case == 1:

            return self.trichotomy_report( w, 1 )

        if case is None:

            return self.trichotomy_report( w, None )

        lo, hi = outer_radius( w )
        rim = circle( lo ) if lo == hi else EMPTY
        logger.warning( "%s: weight not invertible, only the spectrum itself is known", self.variant )

        sets = { kind: SetEntry.unknown( "Thm 7.17", upper=closed_disc( hi ) ) for kind in SpectralSet }
        sets[ SpectralSet.SIGMA ] = SetEntry.bounds( closed_disc( lo ), closed_disc( hi ), "Thm 7.17" )
        sets[ SpectralSet.SIGMA_AP ] = SetEntry.unknown( "Thm 7.17", lower=rim, upper=closed_disc( hi ) )
        sets[ SpectralSet.SIGMA_R ] = SetEntry.unknown( "Thm 7.17", upper=open_disc( hi ) )

        return make_report( sets, open_flags=[ NOT_INVERTIBLE_FLAG ] )

    # without the Lambda condition only rho(T) >= |w_e(0)| and rho(T) <= ||w||_1 are known
    def _radius_bounds( self, w: Weight ) -> SpectrumReport:

        lo, _ = outer_radius( w )

        if isinstance( w, Taylor ):

            norm = w.l1_bound

        else:

            norm = float( np.abs( taylor_coefficients( w, 4096 ) ).sum() )

        logger.warning( "%s: weight outside the Lambda class, spectral radius only bracketed", self.variant )

        sets = { kind: SetEntry.unknown( "Prop 7.16", upper=closed_disc( norm ) ) for kind in SpectralSet }
        sets[ SpectralSet.SIGMA ] = SetEntry.bounds( circle( lo ), closed_disc( norm ), "Prop 7.16" )

        return make_report( sets, open_flags=[ NOT_LAMBDA_FLAG ] )
