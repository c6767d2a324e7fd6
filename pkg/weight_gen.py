# import dependencies
from __future__ import annotations

from typing import List

import numpy as np

from weights import Polynomial # type: ignore

# zero moduli are drawn log-uniformly between these
MIN_MODULUS = 0.25
MAX_MODULUS = 4.0

# random zeros whose moduli keep min_distance from the unit circle
def random_zeros( rng: np.random.Generator, count: int, min_distance: float = 1e-3 ) -> np.ndarray:

    moduli = np.empty( 0 )

    while moduli.size < count:

        draw = np.exp( rng.uniform( np.log( MIN_MODULUS ), np.log( MAX_MODULUS ), size=count ) )
        moduli = np.concatenate( [ moduli, draw[ np.abs( draw - 1.0 ) >= min_distance ] ] )

    return moduli[ :count ] * np.exp( 2j * np.pi * rng.uniform( size=count ) )

# a polynomial of degree 1 ... max_degree from random zeros and a random leading coefficient
def random_polynomial(
    rng: np.random.Generator, max_degree: int = 6, min_distance: float = 1e-3, origin_zeros: int = 0
) -> Polynomial:

    degree = int( rng.integers( 1, max_degree + 1 ) )
    zeros = random_zeros( rng, degree, min_distance )
    leading = rng.uniform( 0.5, 2.0 ) * np.exp( 2j * np.pi * rng.uniform() )

    # np.poly lists coefficients highest degree first
    coeffs = leading * np.poly( zeros )[ ::-1 ]

    return Polynomial( np.concatenate( [ np.zeros( origin_zeros ), coeffs ] ) )

# a reproducible list of random polynomial weights, each with origin_zeros zeros at 0
def weight_corpus(
    count: int, seed: int, max_degree: int = 6, min_distance: float = 1e-3, origin_zeros: int = 0
) -> List[ Polynomial ]:

    rng = np.random.default_rng( seed )

    return [ random_polynomial( rng, max_degree, min_distance, origin_zeros ) for _ in range( count ) ]
