"""Deciding 2-closedness of abelian permutation groups with cyclic constituents.

A permutation group is 2-closed when it already contains every
permutation preserving its orbits on ordered pairs.  This package
computes those pair orbits, finds the closure by brute-force search at
small degree, and decides closedness structurally (Sylow splitting, the
zel subgroup, orbit removal) with a verifiable reduction trace.
"""

from .coloring import PairColoring, orb2, preserves, same_coloring
from .decider import (
    OracleReport,
    PreconditionFailed,
    ReductionTrace,
    Step,
    decide_2_closed,
    decide_with_oracle_check,
)
from .fixtures import (
    NotPrime,
    fixture_example1,
    fixture_example2,
    random_abelian_cyclic,
    random_regular_abelian,
)
from .groupfile import InvalidPermutation, ParseError, parse_group, serialize_group
from .oracle import (
    BudgetExceeded,
    SearchLimits,
    color_automorphisms,
    is_2_closed_oracle,
    two_closure,
)
from .perm import (
    CapExceeded,
    NotBlockSystem,
    NotInvariant,
    OrbitPartition,
    PermGroup,
    Permutation,
    compose,
)
from .reduction import (
    NotAnOrbit,
    NotNilpotent,
    NotQuasiregular,
    SylowDecomposition,
    has_unessential_witness,
    is_quasiregular,
    remove_orbit,
    sylow_decomposition,
    zel,
    zel_condition,
)

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "CapExceeded",
    "InvalidPermutation",
    "NotAnOrbit",
    "NotBlockSystem",
    "NotInvariant",
    "NotNilpotent",
    "NotPrime",
    "NotQuasiregular",
    "OracleReport",
    "OrbitPartition",
    "PairColoring",
    "ParseError",
    "PermGroup",
    "Permutation",
    "PreconditionFailed",
    "ReductionTrace",
    "SearchLimits",
    "Step",
    "SylowDecomposition",
    "color_automorphisms",
    "compose",
    "decide_2_closed",
    "decide_with_oracle_check",
    "fixture_example1",
    "fixture_example2",
    "has_unessential_witness",
    "is_2_closed_oracle",
    "is_quasiregular",
    "orb2",
    "parse_group",
    "preserves",
    "random_abelian_cyclic",
    "random_regular_abelian",
    "remove_orbit",
    "same_coloring",
    "serialize_group",
    "sylow_decomposition",
    "two_closure",
    "zel",
    "zel_condition",
]
