"""Arc-disjoint arborescence packing in digraphs and the random digraph D(n, p)."""

from .degree_stats import (
    F,
    DegreeHistogram,
    LightReport,
    delta_in,
    delta_out,
    delta_star,
    expected_Yk,
    histogram,
    invert_F,
    light_report,
)
from .digraph import (
    Arborescence,
    Digraph,
    Packing,
    arcs_between,
    build,
    complete,
    cut,
    degree,
    empty,
    induced,
    validate_arborescence,
    validate_packing,
)
from .experiment import ExperimentConfig, TrialRecord, run_trial, sweep
from .frank import Subpartition, TauCertificate, enumerate_subpartitions, frank_holds, tau_exact
from .lambda_stat import LambdaResult, claim44_bound, compute_lambda
from .packer import Budget, PackOutcome, RootMultiplicity, edmonds_feasible, forced_roots, max_pack, pack
from .random_model import RegimeSpec, p_of, sample, substream

__version__ = "0.1.0"
