# import dependencies
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

import numpy as np

import config  # type: ignore

logger = logging.getLogger( __name__ )

T = TypeVar( "T" )
R = TypeVar( "R" )

# apply func to every item on a thread pool, results come back in item order
def parallel_map( func: Callable[ [ T ], R ], items: Sequence[ T ] ) -> List[ R ]:

    workers = min( config.thread_count(), max( len( items ), 1 ) )

    if workers <= 1:

        return [ func( item ) for item in items ]

    logger.debug( "mapping %d items on %d threads", len( items ), workers )

    with ThreadPoolExecutor( max_workers=workers ) as pool:

        return list( pool.map( func, items ) )

# split range( count ) into contiguous index blocks, the split is fixed by count alone
def index_blocks( count: int, block: int = 512 ) -> List[ np.ndarray ]:

    return [ np.arange( start, min( start + block, count ) ) for start in range( 0, count, block ) ]
