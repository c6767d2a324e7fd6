# import dependencies
from __future__ import annotations

import logging
from typing import List, Optional, Tuple

import numpy as np
import scipy.linalg
import scipy.special
from numpy.polynomial import polynomial as npoly

logger = logging.getLogger( __name__ )

# coefficient arrays are stored lowest degree first throughout the package

# drop exact trailing zeros, keeping at least the constant term
def trim( coeffs: np.ndarray ) -> np.ndarray:

    coeffs = np.asarray( coeffs, dtype=np.complex128 )
    nonzero = np.flatnonzero( coeffs )

    if nonzero.size == 0:

        return np.zeros( 1, dtype=np.complex128 )

    return coeffs[ : nonzero[ -1 ] + 1 ].copy()

#
def degree( coeffs: np.ndarray ) -> int:

    return trim( coeffs ).size - 1

#
def is_zero( coeffs: np.ndarray ) -> bool:

    return not np.any( np.asarray( coeffs ) )

#
def evaluate( coeffs: np.ndarray, z: np.ndarray ) -> np.ndarray:

    return npoly.polyval( np.asarray( z, dtype=np.complex128 ), coeffs )

#
def derivative( coeffs: np.ndarray ) -> np.ndarray:

    return npoly.polyder( np.asarray( coeffs, dtype=np.complex128 ) )

# all roots with multiplicity, exact zeros at the origin are split off first,
# the rest come from companion-matrix eigenvalues and one Newton step each
def roots( coeffs: np.ndarray ) -> np.ndarray:

    coeffs = trim( coeffs )

    if coeffs.size == 1:

        return np.zeros( 0, dtype=np.complex128 )

    origin = int( np.flatnonzero( coeffs )[ 0 ] )
    reduced = coeffs[ origin: ]
    found = [ np.zeros( origin, dtype=np.complex128 ) ]

    if reduced.size > 1:

        companion = scipy.linalg.companion( reduced[ ::-1 ] )
        estimates = scipy.linalg.eigvals( companion ).astype( np.complex128 )
        found.append( polish( reduced, estimates ) )

    return np.concatenate( found )

# one Newton step per root, kept only where it lowers the residual
def polish( coeffs: np.ndarray, estimates: np.ndarray ) -> np.ndarray:

    slope = derivative( coeffs )
    value = evaluate( coeffs, estimates )
    deriv = evaluate( slope, estimates )

    with np.errstate( divide="ignore", invalid="ignore" ):

        stepped = estimates - value / deriv

    usable = np.isfinite( stepped )
    improved = usable.copy()
    improved[ usable ] = np.abs( evaluate( coeffs, stepped[ usable ] ) ) < np.abs( value[ usable ] )

    return np.where( improved, stepped, estimates )

# a k-fold root comes back from eigvals spread over about ( eps ||p|| / |p^(k) / k!| )^(1/k)
SPREAD_FACTOR = 16.0

# radius inside which size roots around centre count as one root of that multiplicity
def cluster_radius( coeffs: np.ndarray, centre: complex, size: int, tol: float ) -> float:

    if size < 2:

        return tol

    coeffs = np.asarray( coeffs, dtype=np.complex128 )
    scale = float( np.sum( np.abs( coeffs ) * abs( centre ) ** np.arange( coeffs.size ) ) )
    top = abs( complex( evaluate( npoly.polyder( coeffs, size ), centre ) ) ) / scipy.special.factorial( size, exact=True )

    if top == 0.0:

        return tol

    spread = SPREAD_FACTOR * ( np.finfo( np.float64 ).eps * scale / top ) ** ( 1.0 / size )

    return max( tol, float( spread ) )

# group roots into (centre, multiplicity) pairs; without coeffs a group spans at most tol,
# with them a group of k roots may span the spread of a k-fold root
def cluster( found: np.ndarray, tol: float, coeffs: Optional[ np.ndarray ] = None ) -> List[ Tuple[ complex, int ] ]:

    groups: List[ List[ complex ] ] = []

    for root in sorted( np.asarray( found ).tolist(), key=lambda z: ( abs( z ), z.real, z.imag ) ):

        for group in groups:

            candidate = group + [ root ]
            centre = complex( np.mean( candidate ) )
            radius = tol if coeffs is None else cluster_radius( coeffs, centre, len( candidate ), tol )

            if max( abs( z - centre ) for z in candidate ) <= radius:

                group.append( root )
                break

        else:

            groups.append( [ root ] )

    return [ ( complex( np.mean( group ) ), len( group ) ) for group in groups ]

# log of the Mahler-type mean on the circle of radius r (Jensen's formula)
def log_jensen( coeffs: np.ndarray, r: float = 1.0 ) -> float:

    coeffs = trim( coeffs )

    if is_zero( coeffs ):

        return float( "-inf" )

    moduli = np.abs( roots( coeffs ) )

    return float( np.log( abs( coeffs[ -1 ] ) ) + np.sum( np.log( np.maximum( r, moduli ) ) ) )
