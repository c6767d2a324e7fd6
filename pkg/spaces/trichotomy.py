# import dependencies
from __future__ import annotations

from typing import Any, Dict

import numpy as np

import exceptions # type: ignore
from angles import Rotation # type: ignore
from report import SpectrumReport # type: ignore
from spaces.base_space import BaseSpace # type: ignore
from weights import Weight # type: ignore

# exponent p of an L^p type norm
def check_exponent( p: Any ) -> float:

    if isinstance( p, bool ) or not isinstance( p, ( int, float ) ) or not 1.0 <= p < float( "inf" ):

        raise exceptions.MalformedInput( f"space exponent p must be a finite number >= 1, got { p!r}" )

    return float( p )

# spaces whose classification is the disc algebra trichotomy with radii |w(0)| and |w_e(0)|
class TrichotomySpace( BaseSpace ):

    theorem = "<abstract>"

    @property
    def case_citations( self ) -> Dict[ int, str ]: # type: ignore

        return { case: f"{ self.theorem }({ case })" for case in ( 1, 2, 3 ) }

    def classify( self, w: Weight, alpha: Rotation ) -> SpectrumReport:

        return self.trichotomy_report( w, self.invertibility_case( w ) )

#
class Bergman( TrichotomySpace ):

    variant = "bergman"
    theorem = "Thm 7.3"
    required_tags = frozenset( { "disc_algebra" } )

    def __init__( self, p: float = 2.0 ) -> None:

        self.p = check_exponent( p )
        self.norm_tag = "euclidean" if self.p == 2.0 else None

    def parameters( self ) -> Dict[ str, Any ]:

        return { "p": self.p }

    # || z^k ||^2 = pi / ( k + 1 ) for the area measure
    def monomial_norms( self, count: int ) -> np.ndarray:

        if self.p != 2.0:

            raise exceptions.PreconditionError( "the Bergman matrix model needs p = 2" )

        return np.sqrt( np.pi / ( np.arange( count ) + 1.0 ) )

#
class Bloch( TrichotomySpace ):

    variant = "bloch"
    theorem = "Thm 7.8"
    required_tags = frozenset( { "disc_algebra", "multiplier_Bloch" } )

#
class Dirichlet( TrichotomySpace ):

    variant = "dirichlet"
    theorem = "Thm 7.10"
    required_tags = frozenset( { "disc_algebra", "multiplier_Dirichlet" } )

    def __init__( self, p: float = 2.0 ) -> None:

        self.p = check_exponent( p )
        self.norm_tag = "euclidean" if self.p == 2.0 else None

    def parameters( self ) -> Dict[ str, Any ]:

        return { "p": self.p }

    # |x(0)| plus the area norm of x', so || z^k ||^2 = pi k for k >= 1
    def monomial_norms( self, count: int ) -> np.ndarray:

        if self.p != 2.0:

            raise exceptions.PreconditionError( "the Dirichlet matrix model needs p = 2" )

        norms = np.sqrt( np.pi * np.arange( count, dtype=np.float64 ) )
        norms[ 0 ] = 1.0

        return norms
