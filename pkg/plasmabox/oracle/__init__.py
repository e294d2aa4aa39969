from .rng import *
from .montecarlo import *
from .quadrature import *
