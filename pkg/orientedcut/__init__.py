"""
orientedcut - exact constructive arithmetic on oriented cuts

This package models moments of time as oriented Dedekind cuts: lazily
evaluated, strictly increasing, bounded rational sequences. Order, metric
and topology questions are answered with fuel-bounded three-valued
verdicts.
"""

__version__ = '0.1.0'

from .config import Settings
from .orc import Orc
from .trilean import Trilean, Verdict

# Default instance for module-level use, on defaults; Orc() alone reads ORC_*
_default_instance = Orc(Settings())

# Constructors
embed = _default_instance.embed
bseq = _default_instance.bseq
sup = _default_instance.sup
inf = _default_instance.inf
shift = _default_instance.shift
meet = _default_instance.meet
add = _default_instance.add
mul = _default_instance.mul
neg = _default_instance.neg
limit = _default_instance.limit

# Order
lt = _default_instance.lt
le = _default_instance.le
eq = _default_instance.eq
member = _default_instance.member
psi = _default_instance.psi

# Almost numbers
approximate = _default_instance.approximate
phi = _default_instance.phi
stabilize = _default_instance.stabilize

# Relations, metric and topologies
check_add = _default_instance.check_add
check_mul = _default_instance.check_mul
d = _default_instance.d
signature = _default_instance.signature
nbhd = _default_instance.nbhd
interval = _default_instance.interval

# Continuity harness
ocp = _default_instance.ocp
totalc = _default_instance.totalc

# Expressions and records
evaluate = _default_instance.evaluate
dump = _default_instance.dump

# Verbosity
set_verbosity = _default_instance.set_verbosity
get_verbosity = _default_instance.get_verbosity
