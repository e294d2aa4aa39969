from .tools import _check_path, _split_output_path
from .savebox import *
from .savebox import _save_modes, _json_extension, _csv_extension
