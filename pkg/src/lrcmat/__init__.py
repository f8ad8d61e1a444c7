"""Matroid machinery for locally repairable codes.

Multi-representation matroids, locality analysis against the
generalized distance bound, explicit optimal and near-optimal
constructions, distance lower bounds with nullity redistribution,
erasure-repair simulation, and brute-force oracles for all of it.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .analysis import (FlatChain, LocalityCover, LrcParams, achieves_bound,
                       ceil_div, check_chain_inequalities,
                       check_structure_theorem, d_from_cyclic_flats,
                       find_locality_chain, has_locality, params_from_matroid,
                       singleton_bound, validate_params)
from .bounds import (BoundReport, ImprovedBound, classify_achievability,
                     const_a, const_b, equalize_nullity, improved_bound_value,
                     old_lower_bound, redistribute_nullity,
                     theorem14_construction, theorem14_lower_bound)
from .codes import (BlockCode, code_min_distance, hamming_distance,
                    induce_matroid, is_almost_affine, is_locality_set_of_code,
                    project, projected_distance_via_matroid)
from .constructions import (AtomicMatroid, AtomSpec, ConstructionGraph,
                            construction1, graph_construction,
                            is_optimal_theorem9, theorem9,
                            theorem11_construction)
from .errors import (BadParams, ChainStalled, ConditionViolated, LrcError,
                     MissingSubset, NoDonorPair, NoExcessNullity, NoLocality,
                     NotAlmostAffine, NotInLattice, PreconditionFailed,
                     RankZero, SchemaError, SingletonCode, TooLarge, TopNotE)
from .lattice import (CyclicFlatLattice, check_cyclic_flat_axioms,
                      lattice_join, lattice_meet)
from .matroid import (Matroid, check_independence_axioms, check_rank_axioms,
                      restricted_distance)
from .oracle import (LayoutResult, OracleVerdict, exhaust_theorem9_layouts,
                     oracle_d, oracle_locality, verify_matroid)
from .report import AxiomReport, ConditionResult, StructureReport
from .serialization import (SCHEMA_VERSION, atoms_from_doc, atoms_to_doc,
                            code_from_doc, code_to_doc, dumps_canonical,
                            graph_from_doc, graph_to_doc, matroid_from_doc,
                            matroid_to_doc)
from .simulate import (ErasurePattern, RepairEvent, SimulationStats,
                       exhaustive_patterns, is_globally_decodable,
                       local_repair_step, monte_carlo, peel_repair)

__version__ = "1.0.0"

__all__ = [
    "KERNEL_BACKEND", "__version__",
    # matroid core
    "Matroid", "CyclicFlatLattice", "check_independence_axioms",
    "check_rank_axioms", "check_cyclic_flat_axioms", "lattice_meet",
    "lattice_join", "restricted_distance", "AxiomReport",
    # codes
    "BlockCode", "project", "is_almost_affine", "induce_matroid",
    "hamming_distance", "code_min_distance", "is_locality_set_of_code",
    "projected_distance_via_matroid",
    # analysis
    "LrcParams", "LocalityCover", "FlatChain", "ceil_div", "validate_params",
    "singleton_bound", "params_from_matroid", "d_from_cyclic_flats",
    "has_locality", "achieves_bound", "check_structure_theorem",
    "find_locality_chain", "check_chain_inequalities", "ConditionResult",
    "StructureReport",
    # constructions
    "AtomSpec", "AtomicMatroid", "ConstructionGraph", "construction1",
    "theorem9", "graph_construction", "theorem11_construction",
    "is_optimal_theorem9",
    # bounds
    "BoundReport", "ImprovedBound", "const_a", "const_b", "old_lower_bound",
    "theorem14_lower_bound", "improved_bound_value", "theorem14_construction",
    "redistribute_nullity", "equalize_nullity", "classify_achievability",
    # simulation
    "ErasurePattern", "RepairEvent", "SimulationStats",
    "is_globally_decodable", "local_repair_step", "peel_repair",
    "monte_carlo", "exhaustive_patterns",
    # oracle
    "OracleVerdict", "LayoutResult", "oracle_d", "oracle_locality",
    "exhaust_theorem9_layouts", "verify_matroid",
    # serialization
    "SCHEMA_VERSION", "matroid_to_doc", "matroid_from_doc", "code_to_doc",
    "code_from_doc", "graph_to_doc", "graph_from_doc", "atoms_to_doc",
    "atoms_from_doc", "dumps_canonical",
    # errors
    "LrcError", "BadParams", "MissingSubset", "NotInLattice",
    "NotAlmostAffine", "SingletonCode", "RankZero", "TopNotE", "NoLocality",
    "ChainStalled", "ConditionViolated", "PreconditionFailed", "NoDonorPair",
    "NoExcessNullity", "TooLarge", "SchemaError",
]
