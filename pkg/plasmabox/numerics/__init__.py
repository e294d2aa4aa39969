from .logvalues import *
from .special import *
from .linalg import *
