# import dependencies
from __future__ import annotations

import logging
from typing import Any, Callable, Dict, FrozenSet, List, Optional, Tuple

import numpy as np

import exceptions # type: ignore
from analysis import ( # type: ignore
    count_zeros,
    factorization_summary,
    geometric_mean_bounds,
    invertibility_profile,
    value_at_origin,
)
from angles import Rotation, RotationAngle # type: ignore
from circular_set import EMPTY, Circle, CircularSet, ClosedAnnulus, ClosedDisc, OpenDisc, Origin # type: ignore
from report import IndexEntry, IndexValue, SetEntry, SpectrumReport # type: ignore
from set_kinds import SpectralSet, Tri # type: ignore
from weights import MultiPolynomial, Taylor, Weight # type: ignore

logger = logging.getLogger( __name__ )

# lower and upper value of a radius, equal when the radius is known exactly
Radius = Tuple[ float, float ]

#
def circle( r: float ) -> CircularSet:

    return CircularSet( [ Circle( r ) if r > 0.0 else Origin() ] )

#
def closed_disc( r: float ) -> CircularSet:

    return CircularSet( [ ClosedDisc( r ) ] )

#
def open_disc( r: float ) -> CircularSet:

    return CircularSet( [ OpenDisc( r ) ] ) if r > 0.0 else EMPTY

#
def annulus( r_in: float, r_out: float ) -> CircularSet:

    return CircularSet( [ ClosedAnnulus( r_in, r_out ) ] ) if r_in > 0.0 else closed_disc( r_out )

# a set of the given shape whose radius is only bracketed
def shaped_entry( shape: Callable[ [ float ], CircularSet ], radius: Radius, citation: str ) -> SetEntry:

    lo, hi = radius

    if lo == hi:

        return SetEntry.exact( shape( lo ), citation )

    if shape is circle:

        return SetEntry.bounds( EMPTY, annulus( lo, hi ), citation )

    return SetEntry.bounds( shape( lo ), shape( hi ), citation )

# every set equal, empty residual spectrum
def uniform_sets( entry: SetEntry ) -> Dict[ SpectralSet, SetEntry ]:

    sets = { kind: entry for kind in SpectralSet }
    sets[ SpectralSet.SIGMA_R ] = SetEntry.exact( EMPTY, entry.citation )

    return sets

# the residual-disc shape: a circle of semi-Fredholm points around an open disc
def residual_disc_sets(
    radius: Radius, citation: str, sigma_3: Optional[ SetEntry ] = None
) -> Dict[ SpectralSet, SetEntry ]:

    rim = shaped_entry( circle, radius, citation )
    disc = shaped_entry( closed_disc, radius, citation )

    return {
        SpectralSet.SIGMA: disc,
        SpectralSet.SIGMA_AP: rim,
        SpectralSet.SIGMA_R: shaped_entry( open_disc, radius, citation ),
        SpectralSet.SIGMA_1: rim,
        SpectralSet.SIGMA_2: rim,
        SpectralSet.SIGMA_3: sigma_3 if sigma_3 is not None else rim,
        SpectralSet.SIGMA_4: disc,
        SpectralSet.SIGMA_5: disc,
    }

# assemble a report, citations in reporting order without repeats
def make_report(
    sets: Dict[ SpectralSet, SetEntry ],
    index_map: Optional[ List[ IndexEntry ] ] = None,
    open_flags: Optional[ List[ str ] ] = None,
) -> SpectrumReport:

    citations: List[ str ] = []

    for kind in SpectralSet:

        citation = sets[ kind ].citation

        if citation and citation not in citations:

            citations.append( citation )

    return SpectrumReport(
        sets=sets, index_map=list( index_map or [] ), citations=citations, open_flags=list( open_flags or [] )
    )

# 1: invertible in the algebra, 2: invertible on the boundary only, 3: not invertible on the boundary
def trichotomy_case( in_algebra: Tri, on_boundary: Tri ) -> Optional[ int ]:

    if in_algebra is Tri.YES:

        return 1

    if on_boundary is Tri.NO:

        return 3

    if on_boundary is Tri.YES and in_algebra is Tri.NO:

        return 2

    return None

# |w_e(0)|, exact for closed form weights and bracketed for Taylor data
def outer_radius( w: Weight ) -> Radius:

    if w.is_rational:

        value = factorization_summary( w ).outer_value_mod

        return value, value

    return geometric_mean_bounds( w )

# degree of the Blaschke factor, and whether w = B w_e with B finite and no singular factor
def blaschke_data( w: Weight ) -> Tuple[ int, Tri ]:

    if w.is_rational:

        summary = factorization_summary( w )
        finite = summary.blaschke_finite and summary.singular_part_present is Tri.NO

        return summary.blaschke_degree, Tri.of( finite )

    if isinstance( w, Taylor ):

        # continuous up to the boundary and zero-free there: the inner factor is a finite Blaschke product
        return count_zeros( w ), Tri.YES if "disc_algebra" in w.tags else Tri.UNKNOWN

    raise exceptions.PreconditionError( f"no Blaschke data for a { w.kind } weight" )

# a function space on which T = wU acts; subclasses state their classification
class BaseSpace:

    variant = "<abstract>"
    required_tags: FrozenSet[ str ] = frozenset()
    norm_tag: Optional[ str ] = None # matrix model norm, None when there is no matrix model
    case_citations: Dict[ int, str ] = {}

    #
    def parameters( self ) -> Dict[ str, Any ]:

        return {}

    #
    def to_dict( self ) -> Dict[ str, Any ]:

        return { "variant": self.variant, **self.parameters() }

    def __repr__( self ) -> str:

        return f"{ type( self ).__name__ }({ self.parameters() })"

    def __eq__( self, other: object ) -> bool:

        return isinstance( other, BaseSpace ) and self.to_dict() == other.to_dict()

    def __hash__( self ) -> int:

        return hash( repr( self ) )

    # the classification theorems all assume a non-periodic rotation of the circle
    def check_rotation( self, alpha: Rotation ) -> None:

        if not isinstance( alpha, RotationAngle ):

            raise exceptions.PreconditionError( f"{ self.variant } needs a scalar rotation angle" )

        if alpha.is_periodic:

            raise exceptions.PreconditionError(
                "rotation is a root of unity or not asserted non-periodic; "
                "every supported classification assumes a non-periodic rotation"
            )

    #
    def check_weight( self, w: Weight ) -> None:

        if isinstance( w, MultiPolynomial ):

            raise exceptions.PreconditionError( f"{ self.variant } needs a one-variable weight" )

        missing = self.required_tags - w.tags

        if missing:

            raise exceptions.PreconditionError( f"{ self.variant } needs a weight tagged { sorted( missing ) }" )

    # which trichotomy case applies to w, None when undecided
    def invertibility_case( self, w: Weight ) -> Optional[ int ]:

        profile = invertibility_profile( w )

        return trichotomy_case( profile.in_disc_algebra, profile.in_continuous_boundary )

    #
    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        raise NotImplementedError()

    # index of lambda I - T on the residual disc
    def index_value( self, w: Weight ) -> IndexValue:

        degree, finite = blaschke_data( w )

        if finite is Tri.YES:

            return -degree

        return "-inf" if finite is Tri.NO else "unknown"

    #
    def residual_index( self, w: Weight, alpha: Rotation ) -> IndexValue:

        self.check_rotation( alpha )
        self.check_weight( w )

        if self.invertibility_case( w ) != 2:

            raise exceptions.PreconditionError( "the residual index is defined in the residual-disc case only" )

        return self.index_value( w )

    # norms of z^k, k < count, in this space
    def monomial_norms( self, count: int ) -> np.ndarray:

        raise exceptions.PreconditionError( f"{ self.variant } has no monomial matrix model" )

    # the three-case classification shared by the uniform algebra and its relatives
    def trichotomy_report( self, w: Weight, case: Optional[ int ] ) -> SpectrumReport:

        if case is None:

            logger.warning( "invertibility of the weight is undecided, every set is unknown" )

            return make_report( { kind: SetEntry.unknown( "invertibility undecided" ) for kind in SpectralSet } )

        citation = self.case_citations[ case ]
        logger.info( "%s: case %d ( %s )", self.variant, case, citation )

        if case == 1:

            modulus = abs( value_at_origin( w ) )

            return make_report( uniform_sets( SetEntry.exact( circle( modulus ), citation ) ) )

        radius = outer_radius( w )

        if case == 3:

            return make_report( uniform_sets( shaped_entry( closed_disc, radius, citation ) ) )

        index_map = [ IndexEntry( OpenDisc( radius[ 0 ] ), self.index_value( w ) ) ] if radius[ 0 ] > 0.0 else []

        return make_report( residual_disc_sets( radius, citation ), index_map )
