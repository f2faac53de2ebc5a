"""Finite Krasner (m,n)-hyperrings: axioms, hyperideals, endomorphisms and
Endo-prime / Endo-primary classification, with an executable theorem suite."""
from .core import *  # noqa: F401,F403
from .textio import *  # noqa: F401,F403
from .ideals import *  # noqa: F401,F403
from .morphisms import *  # noqa: F401,F403
from .classify import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .theorems import *  # noqa: F401,F403
from .fixtures import *  # noqa: F401,F403

__version__ = "0.1.0"
