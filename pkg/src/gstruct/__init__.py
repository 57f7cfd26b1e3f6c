"""Components of moduli of elliptic curves with G-structures.

Core pipeline: enumerate generating pairs of a finite 2-generated group up
to simultaneous conjugation, decompose them into orbits under the mapping
class action, and read off the invariants of the corresponding modular
curves (signature, level, genus, congruence status, covering data).
"""

from .groups import (
    ENUMERATION_CAP,
    ConjugacyClassTable,
    EnumerationCapExceeded,
    FiniteGroup,
    element_order,
    group_from_generators,
    is_generating_pair,
)
from .families import builtin_group, read_generator_file, write_generator_file
from .perm import compose, cycles, format_cycles, identity, inverse, parse_cycles
from .pairs import ExteriorPair, PairEngine, canonical_pair, enumerate_exterior_surjections
from .orbits import OrbitAction, SL2Action, orbit_decompose
from .invariants import ComponentRecord, component_record, coprime_witness, signature
from .congruence import CongruenceVerdict, decide_congruence
from .dihedral import verify_structure_theorem
from .qseries import QSeries, discriminant_eta, discriminant_weierstrass, j_series
from .tables import ComponentTable, emit_table, run_compute

__all__ = [
    "ComponentRecord",
    "ComponentTable",
    "CongruenceVerdict",
    "ExteriorPair",
    "OrbitAction",
    "PairEngine",
    "QSeries",
    "SL2Action",
    "canonical_pair",
    "component_record",
    "coprime_witness",
    "decide_congruence",
    "discriminant_eta",
    "discriminant_weierstrass",
    "emit_table",
    "enumerate_exterior_surjections",
    "j_series",
    "orbit_decompose",
    "run_compute",
    "signature",
    "verify_structure_theorem",
    "ENUMERATION_CAP",
    "ConjugacyClassTable",
    "EnumerationCapExceeded",
    "FiniteGroup",
    "builtin_group",
    "compose",
    "cycles",
    "element_order",
    "format_cycles",
    "group_from_generators",
    "identity",
    "inverse",
    "is_generating_pair",
    "parse_cycles",
    "read_generator_file",
    "write_generator_file",
]

__version__ = "0.1.0"
