from .clusters import *
from .assumptions import *
