from .incgamma import *
from .kernel import *
