from .errors import *
from .log import *
