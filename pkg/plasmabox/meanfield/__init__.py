from .closedforms import *
from .meanfield import *
