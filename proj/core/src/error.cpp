#include "ksbound/error.hpp"

namespace ksb {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::duplicate_label: return "duplicate_label";
    case Errc::dangling_edge: return "dangling_edge";
    case Errc::self_loop: return "self_loop";
    case Errc::graph_too_large: return "graph_too_large";
    case Errc::unknown_label: return "unknown_label";
    case Errc::unknown_builtin: return "unknown_builtin";
    case Errc::bad_cycle_length: return "bad_cycle_length";
    case Errc::dimension_too_small: return "dimension_too_small";
    case Errc::non_clique_context: return "non_clique_context";
    case Errc::context_too_large: return "context_too_large";
    case Errc::empty_context_list: return "empty_context_list";
    case Errc::unbounded_polytope: return "unbounded_polytope";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::negative_max_coefficient: return "negative_max_coefficient";
    case Errc::max_group_in_linear_op: return "max_group_in_linear_op";
    case Errc::empty_vertex_list: return "empty_vertex_list";
    case Errc::empty_deterministic_set: return "empty_deterministic_set";
    case Errc::empty_slice: return "empty_slice";
    case Errc::envelope_above_line: return "envelope_above_line";
    case Errc::envelope_not_collinear: return "envelope_not_collinear";
    case Errc::bad_envelope_samples: return "bad_envelope_samples";
    case Errc::division_by_zero: return "division_by_zero";
    case Errc::interval_empty: return "interval_empty";
    case Errc::aprime_mismatch: return "aprime_mismatch";
    case Errc::schema_violation: return "schema_violation";
    case Errc::unknown_surd: return "unknown_surd";
    case Errc::bad_rational: return "bad_rational";
    case Errc::bad_index: return "bad_index";
    case Errc::io_error: return "io_error";
    case Errc::realization_invalid: return "realization_invalid";
    case Errc::missing_definition: return "missing_definition";
    case Errc::step_failed: return "step_failed";
  }
  return "unknown_error";
}

}  // namespace ksb
