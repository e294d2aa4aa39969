from .series import *
from .partition import *
from .decoupling import *
from .predictions import *
