"""Exact solitaire Flood-It on AT-free graphs.

Library surface: colored graphs and set primitives (graph), contraction
(contraction), asteroidal-triple detection (atfree), decomposition
(decomp), game semantics (engine), brute-force oracle (oracle), conquest
chains (ordering), the polynomial solver (solver), instance generators
(generators), file formats (io_formats), CLI (cli) and HTTP service
(service).
"""

from .atfree import AsteroidalTriple, find_asteroidal_triple, is_atfree
from .contraction import ContractionMap, contract_edge, contract_monochromatic
from .decomp import (
    DecompContext,
    ExtremeContext,
    blocks_at,
    find_extremes,
    global_extremes,
    interval,
    is_extreme,
    widest_pair,
)
from .engine import GameState, Strategy, apply_move, initial_state, simulate
from .generators import GenSpec, InfeasibleSpecError, generate
from .graph import ColoredGraph, closed_neighborhood, component_containing, components_avoiding
from .oracle import OracleBudgetError, OracleResult, oracle_all_sources, oracle_min_moves
from .ordering import ChainOrderError, ChainStructure, build_chains, conquest_precedes
from .solver import (
    HintUnavailableError,
    NotAtFreeError,
    PairTable,
    SolveResult,
    hint,
    solve,
    solve_extreme,
    solve_general,
)

__all__ = [
    "AsteroidalTriple",
    "ChainOrderError",
    "ChainStructure",
    "ColoredGraph",
    "ContractionMap",
    "DecompContext",
    "ExtremeContext",
    "GameState",
    "GenSpec",
    "HintUnavailableError",
    "InfeasibleSpecError",
    "NotAtFreeError",
    "OracleBudgetError",
    "OracleResult",
    "PairTable",
    "SolveResult",
    "Strategy",
    "apply_move",
    "blocks_at",
    "build_chains",
    "closed_neighborhood",
    "component_containing",
    "components_avoiding",
    "conquest_precedes",
    "contract_edge",
    "contract_monochromatic",
    "find_asteroidal_triple",
    "find_extremes",
    "generate",
    "global_extremes",
    "hint",
    "initial_state",
    "interval",
    "is_atfree",
    "is_extreme",
    "oracle_all_sources",
    "oracle_min_moves",
    "simulate",
    "solve",
    "solve_extreme",
    "solve_general",
    "widest_pair",
]
