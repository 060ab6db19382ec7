"options - verbosity levels and tunable limits"
#
# Library functions read their defaults from opts; folconetool.py fills
# it from FOLCONEOPTS and the command line.

import os

VERB_QUIET = 0   # quiet
VERB_NONE = 1    # just output requested data and some info
VERB_DECODE = 2  # report each computed object
VERB_INFO = 3    # more info
VERB_RAW = 4     # raw double description and LP data
VERB_PROG = 5    # program trace

DEFAULT_ENUM_CAP = 1000000
DEFAULT_MAX_RANK = 24
DEFAULT_FACET_HEIGHT = 20

# dictionary to hold all tunables
opts = {
    # budget for periodic strings and lattice boxes, FOLCONE_ENUM_CAP
    'enum_cap': DEFAULT_ENUM_CAP,
    # soft cap on the rank handed to double description, FOLCONE_MAX_RANK
    'max_rank': DEFAULT_MAX_RANK,
    # default height of the facet lattice scan
    'facet_height': DEFAULT_FACET_HEIGHT,
    # where orbits are closed: 'initial' letter or 'any' repeated letter
    'close_mode': 'initial',
    # verbosity level, -v
    'verbosity': VERB_NONE,
    # contents of environment variable FOLCONEOPTS
    'progopts': '',
}


def env_int(environ, name, default):
    "Read a positive integer from the environment, else default."
    val = environ.get(name)
    if not val:
        return default
    try:
        num = int(val)
    except ValueError:
        return default
    if num < 1:
        return default
    return num


def load_environment(environ=None):
    "Apply FOLCONE_ENUM_CAP, FOLCONE_MAX_RANK and FOLCONEOPTS to opts."
    if environ is None:
        environ = os.environ
    opts['enum_cap'] = env_int(environ, 'FOLCONE_ENUM_CAP', DEFAULT_ENUM_CAP)
    opts['max_rank'] = env_int(environ, 'FOLCONE_MAX_RANK', DEFAULT_MAX_RANK)
    opts['progopts'] = environ.get('FOLCONEOPTS', '')
    return opts


load_environment()
