# import dependencies
from __future__ import annotations

import logging
from typing import Any, Dict, List, Tuple

import config # type: ignore
import exceptions # type: ignore
from analysis import find_zeros, geometric_mean # type: ignore
from angles import Rotation # type: ignore
from circular_set import CircularSet, OpenAnnulus, OpenDisc # type: ignore
from report import IndexEntry, IndexValue, SetEntry, SpectrumReport # type: ignore
from set_kinds import SpectralSet # type: ignore
from spaces.base_space import BaseSpace, annulus, circle, closed_disc, make_report # type: ignore
from spaces.trichotomy import check_exponent # type: ignore
from weights import Weight # type: ignore

logger = logging.getLogger( __name__ )

INNER_ANNULUS_FLAG = "Problem 6.2"

# Hardy space of the annulus R < |z| < 1, embedded in L^p of its two boundary circles
class AnnulusHardy( BaseSpace ):

    variant = "annulus_hardy"

    def __init__( self, R: float, p: float = 2.0 ) -> None:

        if isinstance( R, bool ) or not isinstance( R, ( int, float ) ) or not 0.0 < R < 1.0:

            raise exceptions.MalformedInput( f"annulus inner radius must lie strictly in (0, 1), got { R!r}" )

        self.R = float( R )
        self.p = check_exponent( p )

    def parameters( self ) -> Dict[ str, Any ]:

        return { "R": self.R, "p": self.p }

    def check_weight( self, w: Weight ) -> None:

        super().check_weight( w )

        if not w.is_rational:

            raise exceptions.PreconditionError( "the annulus classification needs a polynomial or rational weight" )

    # total zero multiplicity on the inner circle, strictly inside the annulus and on the outer circle
    def _zero_split( self, w: Weight ) -> Tuple[ int, int, int ]:

        tol = config.get_tolerances().zero
        inner = middle = outer = 0

        for zero, multiplicity in find_zeros( w, 1.0 ):

            modulus = abs( zero )

            if abs( modulus - 1.0 ) <= tol:

                outer += multiplicity

            elif abs( modulus - self.R ) <= tol:

                inner += multiplicity

            elif modulus > self.R:

                middle += multiplicity

        return inner, middle, outer

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        inner, middle, outer = self._zero_split( w )
        g_outer = geometric_mean( w, 1.0 )
        g_inner = geometric_mean( w, self.R )

        # each boundary circle contributes the spectrum of wU on L^p of that circle
        sigma_1 = ( closed_disc( g_outer ) if outer else circle( g_outer ) ).union(
            closed_disc( g_inner ) if inner else circle( g_inner )
        )
        invertible = not ( inner or middle or outer )
        sigma = annulus( min( g_inner, g_outer ), g_outer ) if invertible else closed_disc( g_outer )
        sigma_r = sigma.difference( sigma_1 )

        logger.info(
            "%s: zeros inner %d, inside %d, outer %d; radii %.17g and %.17g",
            self.variant, inner, middle, outer, g_inner, g_outer,
        )

        index_map: List[ IndexEntry ] = []
        inner_disc = CircularSet()
        open_flags: List[ str ] = []

        for component in sigma_r.components:

            if isinstance( component, OpenDisc ):

                index_map.append( IndexEntry( component, -middle ) )
                inner_disc = CircularSet( [ component ] )

            elif isinstance( component, OpenAnnulus ):

                index_map.append( IndexEntry( component, "unknown" ) )

                if INNER_ANNULUS_FLAG not in open_flags:

                    open_flags.append( INNER_ANNULUS_FLAG )

        boundary = SetEntry.exact( sigma_1, "Ex 7.4(1)" )
        sets = {
            SpectralSet.SIGMA: SetEntry.exact( sigma, "Ex 7.4" ),
            SpectralSet.SIGMA_AP: boundary,
            SpectralSet.SIGMA_R: SetEntry.exact( sigma_r, "Ex 7.4(2)" ),
            SpectralSet.SIGMA_1: boundary,
            SpectralSet.SIGMA_2: boundary,
            # the disc component lies in sigma_4 minus sigma_3, the open annulus is undecided
            SpectralSet.SIGMA_3: SetEntry.bounds( sigma_1, sigma.difference( inner_disc ), "Ex 7.4(2)" ),
            SpectralSet.SIGMA_4: SetEntry.bounds( sigma_1.union( inner_disc ), sigma, "Ex 7.4(2)" ),
            SpectralSet.SIGMA_5: SetEntry.exact( sigma, "Ex 7.4(2)" ),
        }

        return make_report( sets, index_map, open_flags )

    # index on the disc component of the residual spectrum
    def residual_index( self, w: Weight, alpha: Rotation ) -> IndexValue:

        self.check_rotation( alpha )
        self.check_weight( w )

        for entry in self.classify( w, alpha ).index_map:

            if isinstance( entry.component, OpenDisc ):

                return entry.index

        raise exceptions.PreconditionError( "the residual spectrum has no disc component" )
