from enum import auto, Enum

# layers of a spectrum plot, drawn in this order
class RenderOrder( Enum ):

    BACKGROUND = auto()
    HEAT = auto()
    SPECTRUM = auto()
    RESIDUAL = auto()
    APPROXIMATE = auto()
    LABEL = auto()
