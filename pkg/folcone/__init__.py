# Make the engine available without prefix.
#
# folconetool.py checks __version__ against the version it was written
# for; bump both together.

from .errors import *
from .options import *
from .misc import *
from .markov import *
from .cone import *
from .foliation import *
from .orbit import *
from .sysfile import *

__version__ = '0.1'
