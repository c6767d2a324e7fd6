# import dependencies
from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from analysis import invertibility_profile, value_at_origin # type: ignore
from angles import Rotation # type: ignore
from circular_set import EMPTY, OpenDisc # type: ignore
from report import IndexEntry, SetEntry, SpectrumReport # type: ignore
from set_kinds import Tri # type: ignore
from spaces.base_space import ( # type: ignore
    BaseSpace,
    annulus,
    blaschke_data,
    circle,
    closed_disc,
    make_report,
    outer_radius,
    residual_disc_sets,
    shaped_entry,
    trichotomy_case,
    uniform_sets,
)
from weights import Weight, boundary_samples # type: ignore

logger = logging.getLogger( __name__ )

# bounded analytic functions on the disc; invertibility is taken in H_inf itself
class Hinf( BaseSpace ):

    variant = "hinf"
    required_tags = frozenset( { "H_inf" } )
    norm_tag = "euclidean"

    # case numbers of this module map onto the items of the corollary
    case_citations = { 1: "Cor 6.6(1)", 2: "Cor 6.6(3)", 3: "Cor 6.6(2)" }

    def invertibility_case( self, w: Weight ) -> Optional[ int ]:

        profile = invertibility_profile( w )

        return trichotomy_case( profile.in_H_inf, profile.in_continuous_boundary )

    # Hardy space proxy: every monomial has norm one
    def monomial_norms( self, count: int ) -> np.ndarray:

        return np.ones( count )

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        case = self.invertibility_case( w )

        if case == 1 and not w.is_rational:

            return self._invertible_bounds( w )

        if case != 2:

            return self.trichotomy_report( w, case )

        citation = self.case_citations[ 2 ]
        radius = outer_radius( w )
        _, finite = blaschke_data( w )

        if finite is Tri.YES:

            sigma_3 = shaped_entry( circle, radius, "Cor 6.6(4)" )

        elif finite is Tri.NO:

            sigma_3 = shaped_entry( closed_disc, radius, "Cor 6.6(4)" )

        else:

            lower = circle( radius[ 0 ] ) if radius[ 0 ] == radius[ 1 ] else EMPTY
            sigma_3 = SetEntry.bounds( lower, closed_disc( radius[ 1 ] ), "Cor 6.6(4)" )

        logger.info( "%s: case 2 ( %s ), finite Blaschke factor %s", self.variant, citation, finite.value )
        index_map = [ IndexEntry( OpenDisc( radius[ 0 ] ), self.index_value( w ) ) ] if radius[ 0 ] > 0.0 else []

        return make_report( residual_disc_sets( radius, citation, sigma_3 ), index_map )

    # invertible weight without closed form: the radius pair is not determined by |w_e(0)| alone
    def _invertible_bounds( self, w: Weight ) -> SpectrumReport:

        modulus = abs( value_at_origin( w ) )
        tail = float( getattr( w, "tail_bound", 0.0 ) )
        moduli = np.abs( boundary_samples( w, 4096 ) )
        r_in = min( max( float( moduli.min() ) - tail, 0.0 ), modulus )
        r_out = max( float( moduli.max() ) + tail, modulus )
        logger.warning( "%s: invertible non-rational weight, reporting bounds between %.6g and %.6g", self.variant, r_in, r_out )

        return make_report( uniform_sets( SetEntry.bounds( circle( modulus ), annulus( r_in, r_out ), self.case_citations[ 1 ] ) ) )

# a Banach space of analytic functions sitting between H_inf and H^1 with the same spectra
class HardyBanach( Hinf ):

    variant = "hardy_banach"

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        report = super().classify( w, alpha )
        report.citations.insert( 0, "Cor 7.2" )

        return report
