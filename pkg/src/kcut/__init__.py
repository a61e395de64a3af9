"""kcut: graph strength, principal sequence of partitions, tree packings,
and minimum k-cuts with exact rational LP certificates."""

from .exact import parse_rational, rational_str
from .graph import (
    CutResult,
    Edge,
    Graph,
    ParseError,
    VertexPartition,
    components,
    contract,
    contract_partition,
    cut_of_partition,
    induced_subgraph,
    normalize_parallel,
    parse_graph,
    partition_from_blocks,
)
from .oracle import (
    OracleLimitError,
    OracleLimits,
    enum_partitions,
    oracle_lp_value,
    oracle_min_kcut,
    oracle_strength,
    oracle_treepack,
    spanning_forests,
)
from .flow import max_flow_min_cut
from .strength import (
    AttackResult,
    Breakpoint,
    PrincipalSequence,
    PspLevel,
    attack,
    breakpoints,
    principal_sequence,
    strength,
)
from .packing import (
    IterationLimitError,
    PackConfig,
    PackingError,
    SaturationError,
    TreePacking,
    exact_pack,
    min_spanning_forest,
    mwu_pack,
    saturating_pack,
)
from .lp import (
    CsVerdict,
    DualSolution,
    DualVerdict,
    IdealPacking,
    PrimalSolution,
    PrimalVerdict,
    check_complementary_slackness,
    ideal_packing,
    lagrangean_value,
    lp_dual,
    lp_primal,
    verify_dual,
    verify_primal,
)
from .cuts import (
    EnumerationReport,
    RespectStats,
    RoundResult,
    cuts_from_tree,
    dual_respect_bound,
    enumerate_approx_kcuts,
    min_kcut,
    mincut_respect_bound,
    ravi_sinha_cut,
    respect_stats,
    round_lp,
)
from .mincut import TreeCutTable, global_mincut, global_mincut_detail, min_1respect, min_2respect

__version__ = "0.1.0"

__all__ = [
    "AttackResult",
    "Breakpoint",
    "CsVerdict",
    "CutResult",
    "DualSolution",
    "DualVerdict",
    "Edge",
    "EnumerationReport",
    "Graph",
    "IdealPacking",
    "IterationLimitError",
    "OracleLimitError",
    "OracleLimits",
    "PackConfig",
    "PackingError",
    "ParseError",
    "PrimalSolution",
    "PrimalVerdict",
    "PrincipalSequence",
    "PspLevel",
    "RespectStats",
    "RoundResult",
    "SaturationError",
    "TreeCutTable",
    "TreePacking",
    "VertexPartition",
    "attack",
    "breakpoints",
    "check_complementary_slackness",
    "components",
    "contract",
    "contract_partition",
    "cut_of_partition",
    "cuts_from_tree",
    "dual_respect_bound",
    "enum_partitions",
    "enumerate_approx_kcuts",
    "exact_pack",
    "global_mincut",
    "global_mincut_detail",
    "ideal_packing",
    "induced_subgraph",
    "lagrangean_value",
    "lp_dual",
    "lp_primal",
    "max_flow_min_cut",
    "min_1respect",
    "min_2respect",
    "min_kcut",
    "min_spanning_forest",
    "mincut_respect_bound",
    "mwu_pack",
    "normalize_parallel",
    "oracle_lp_value",
    "oracle_min_kcut",
    "oracle_strength",
    "oracle_treepack",
    "parse_graph",
    "parse_rational",
    "partition_from_blocks",
    "principal_sequence",
    "rational_str",
    "ravi_sinha_cut",
    "respect_stats",
    "round_lp",
    "saturating_pack",
    "spanning_forests",
    "strength",
    "verify_dual",
    "verify_primal",
]
