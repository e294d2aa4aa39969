from .config import *
from .drivers import *
