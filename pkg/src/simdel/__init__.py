"""Edge-deletion algorithms for reducing local node similarity in networks."""

from .baselines import BaselineRun, greedy_es, hj_es, random_es
from .dp import solve_es_dp, solve_rts_dp
from .exact import SolveMode, SpecialCaseInput, approx_es, solve_es, solve_es_all_pairs
from .generators import (
    PvcInstance,
    SetCoverFamily,
    gadget_pad_avg_degree,
    gadget_pvc_to_rts,
    gadget_usc_to_rms,
    gadget_vc3_to_rms,
    gen_ba,
    gen_er,
    uniformize_family,
)
from .graph import Graph, GraphStats, parse_edge_list, stats, write_edge_list
from .ilp import (
    IlpAssignment,
    IlpModel,
    build_ilp,
    decode_assignment,
    dump_model,
    enumerate_patterns,
    partition_types,
    solve_ilp,
    solve_rms_ilp,
    solve_rts_ilp,
)
from .instance import (
    ProblemInstance,
    ProblemKind,
    Solution,
    check_solution,
    lift_es,
    load_instance,
    make_instance,
    read_instance,
    save_instance,
    validate,
    write_instance,
)
from .matching import max_matching
from .oracle import OracleResult, oracle_decide, oracle_optimum
from .preprocess import PreprocessOutcome, PreprocessStatus, preprocess_es
from .similarity import Measure, similarity, total_similarity
from .vertex_cover import VcInstance, VcResult, approx_vc_2, build_conflict_graph, min_vc, solve_vc

__version__ = "0.1.0"
