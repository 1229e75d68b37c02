from .errors import *
from .logging_config import *
