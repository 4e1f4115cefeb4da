"""Exact combinatorics around fan-free 3-uniform hypergraphs.

The package builds and certifies the dense tripartite hosts, counts and
bounds codegree-capped interiors, detects forbidden fan patterns, runs
small exact extremal searches, and cross-checks the closed formulas that
tie these together.
"""

from .core import (TIMEOUT, Budget, Hypergraph3, Partition3, Timeout,
                   all_triples, blow_up, colex_index, colex_key,
                   crossing_split, normalize_triple, triple_at_colex_index)
from .canon import (MAX_CORE, UnsupportedSizeError, are_isomorphic,
                    canonical_form)
from .fileio import (FormatError, dump_json, format_h3, format_p3,
                     hypergraph_from_obj, hypergraph_to_obj, load_hypergraph,
                     load_partition, parse_h3, parse_p3, partition_from_obj,
                     partition_to_obj, save_hypergraph, save_partition)
from .constructions import (PATTERN_TAGS, ApexResult, ExtremalResult,
                            balanced_parts, book_pattern, fan_pattern,
                            k4_minus, make_apex_host, make_complete_tripartite,
                            make_extremal, make_satellite, pattern_by_tag,
                            satellite_count, split_fan, tripartite_count,
                            tripartite_fan)
from .designs import (AppendixResult, CodegreeCapResult, Design, Infeasible,
                      MultiplicityTarget, ValueBound, appendix_guarantee,
                      appendix_lower_bound, block_gadget,
                      block_gadget_size_bound, build_steiner_triple_system,
                      decompose_complete, decompose_exact, dehon_admissible,
                      densest_codegree_capped, design_block_count, ex_f2t,
                      max_triple_packing, packing_leave, pair_cover_blocks,
                      pair_cover_size_bound, verify_design)
from .c4free import C4FreeResult, densest_c4_free, is_c4_free, polarity_graph
from .detection import (contains_fan, contains_pattern, count_copies,
                        count_embeddings, find_embedding, max_codegree_check,
                        verify_embedding)
from .search import (SearchOutcome, best_partition, enumerate_copies,
                     export_maxsat, random_free_sample, turan_exact)
from .formulas import (Check, FormulaReport, balanced_optimality_scan,
                       closed_form_corollary, interval_check,
                       lemma31_property_suite, part_profiles,
                       partition_profile_value, s_ho, satellite_gap_check,
                       sho_interval, sho_interval_refined,
                       symmetric_point_value)
from .gadgets import (ClaimRecord, apex_surplus_scan, tripartite_plus_inner,
                      tripartite_plus_pendant, tripartite_plus_straddle,
                      verify_gadget_claims)
from .suites import (SUITE_NAMES, build_report, report_exit_code,
                     rows_to_csv)

__version__ = "0.1.0"

__all__ = [
    "TIMEOUT", "Budget", "Hypergraph3", "Partition3", "Timeout",
    "all_triples", "blow_up", "colex_index", "colex_key", "crossing_split",
    "normalize_triple", "triple_at_colex_index",
    "MAX_CORE", "UnsupportedSizeError", "are_isomorphic", "canonical_form",
    "FormatError", "dump_json", "format_h3", "format_p3",
    "hypergraph_from_obj", "hypergraph_to_obj", "load_hypergraph",
    "load_partition", "parse_h3", "parse_p3", "partition_from_obj",
    "partition_to_obj", "save_hypergraph", "save_partition",
    "PATTERN_TAGS", "ApexResult", "ExtremalResult", "balanced_parts",
    "book_pattern", "fan_pattern", "k4_minus", "make_apex_host",
    "make_complete_tripartite", "make_extremal", "make_satellite",
    "pattern_by_tag", "satellite_count", "split_fan", "tripartite_count",
    "tripartite_fan",
    "AppendixResult", "CodegreeCapResult", "Design", "Infeasible",
    "MultiplicityTarget", "ValueBound", "appendix_guarantee",
    "appendix_lower_bound", "block_gadget", "block_gadget_size_bound",
    "build_steiner_triple_system", "decompose_complete", "decompose_exact",
    "dehon_admissible", "densest_codegree_capped", "design_block_count",
    "ex_f2t", "max_triple_packing", "packing_leave", "pair_cover_blocks",
    "pair_cover_size_bound", "verify_design",
    "C4FreeResult", "densest_c4_free", "is_c4_free", "polarity_graph",
    "contains_fan", "contains_pattern", "count_copies", "count_embeddings",
    "find_embedding", "max_codegree_check", "verify_embedding",
    "SearchOutcome", "best_partition", "enumerate_copies", "export_maxsat",
    "random_free_sample", "turan_exact",
    "Check", "FormulaReport", "balanced_optimality_scan",
    "closed_form_corollary", "interval_check", "lemma31_property_suite",
    "part_profiles", "partition_profile_value", "s_ho",
    "satellite_gap_check", "sho_interval", "sho_interval_refined",
    "symmetric_point_value",
    "ClaimRecord", "apex_surplus_scan", "tripartite_plus_inner",
    "tripartite_plus_pendant", "tripartite_plus_straddle",
    "verify_gadget_claims",
    "SUITE_NAMES", "build_report", "report_exit_code", "rows_to_csv",
]
