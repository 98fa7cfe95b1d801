"""Rainbow perfect matchings and Hamilton cycles in families of random graphs,
via auxiliary graphs built from a random permutation of the colors."""

from .adversary import AdversaryStrategy, UnsatisfiableFloor, apply_adversary, aux_window, dirac_floor, verify_subfamily
from .config import ConfigError, ExperimentConfig, UnknownThreshold
from .graphs import BalancedPartition, BipartiteGraph, Digraph, Graph, KPartiteHypergraph, Permutation
from .pipelines import (
    run_aux_stats,
    run_concentration_suite,
    run_hc_pipeline,
    run_kpm_pipeline,
    run_pm_bipartite_pipeline,
    run_pm_pipeline,
)
from .reduction import (
    RainbowStructure,
    build_aux_bipartite,
    build_aux_digraph,
    build_aux_kpartite,
    induce_bipartite,
    lift_cycle,
    lift_hyper_matching,
    lift_matching,
    verify_rainbow,
)
from .sampling import GraphFamily, RandomSeed, sample_family, sample_gnp

__version__ = "0.1.0"
