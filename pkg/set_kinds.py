# import dependencies
from enum import Enum

# the spectral sets carried by every report, in reporting order
class SpectralSet( Enum ):

    SIGMA = "sigma"
    SIGMA_AP = "sigma_ap"
    SIGMA_R = "sigma_r"
    SIGMA_1 = "sigma_1"
    SIGMA_2 = "sigma_2"
    SIGMA_3 = "sigma_3"
    SIGMA_4 = "sigma_4"
    SIGMA_5 = "sigma_5"

# how much is known about a reported set
class Status( Enum ):

    EXACT = "exact"
    BOUNDS = "bounds"
    UNKNOWN = "unknown"

# three-valued answers of the invertibility tests
class Tri( Enum ):

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    #
    @classmethod
    def of( cls, flag: bool ) -> "Tri":

        return cls.YES if flag else cls.NO
