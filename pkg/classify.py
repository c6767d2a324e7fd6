# import dependencies
from __future__ import annotations

import itertools
import logging
from typing import Iterator, List, Tuple

import numpy as np

import exceptions # type: ignore
from analysis import value_at_origin # type: ignore
from angles import Rotation, RotationAngle, RotationVector # type: ignore
from report import IndexValue, SpectrumReport # type: ignore
from set_kinds import Status # type: ignore
from spaces import BaseSpace # type: ignore
from weights import MultiPolynomial, Polynomial, Weight # type: ignore

logger = logging.getLogger( __name__ )

# classify the spectra of T = wU on a space
def classify( space: BaseSpace, w: Weight, alpha: Rotation ) -> SpectrumReport:

    space.check_rotation( alpha )
    space.check_weight( w )

    report = space.classify( w, alpha )
    report.inputs_echo = { "space": space.to_dict(), "weight": w.to_dict(), "rotation": alpha.to_dict() }

    for problem in report.consistency_violations():

        logger.warning( "report consistency: %s", problem )

    partial = [ kind.value for kind, entry in report.sets.items() if entry.status is not Status.EXACT ]

    if partial:

        logger.warning( "not exact: %s", ", ".join( partial ) )

    return report

# multi-indices of n variables by increasing total degree
def _multi_indices( n: int ) -> Iterator[ Tuple[ int, ... ] ]:

    for total in itertools.count():

        for index in sorted( itertools.product( range( total + 1 ), repeat=n ), reverse=True ):

            if sum( index ) == total:

                yield index

# the eigenvalue candidates alpha^k w(0); none when w(0) = 0
def point_spectrum_candidates( w: Weight, alpha: Rotation, count: int ) -> List[ complex ]:

    if count < 0:

        raise exceptions.PreconditionError( "candidate count must be nonnegative" )

    if isinstance( alpha, RotationVector ):

        if isinstance( w, Polynomial ):

            w = MultiPolynomial.lift( w, alpha.dimension )

        if not isinstance( w, MultiPolynomial ) or w.dimension != alpha.dimension:

            raise exceptions.PreconditionError( "weight and rotation vector must have the same number of variables" )

        origin = w.constant

        if origin == 0 or count == 0:

            return []

        exponents = np.array( list( itertools.islice( _multi_indices( alpha.dimension ), count ) ) )

        return [ complex( value ) for value in alpha.monomials( exponents ) * origin ]

    if not isinstance( alpha, RotationAngle ):

        raise exceptions.PreconditionError( "unsupported rotation" )

    origin = value_at_origin( w )

    if origin == 0:

        return []

    return [ complex( value ) for value in np.complex128( origin ) * alpha.powers( count ) ]

#
def residual_index( space: BaseSpace, w: Weight, alpha: Rotation ) -> IndexValue:

    return space.residual_index( w, alpha )
