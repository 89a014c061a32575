#ifndef KSBOUND_ERROR_HPP
#define KSBOUND_ERROR_HPP

#include <stdexcept>
#include <string>

namespace ksb {

enum class Errc {
  // graph construction / lookup
  duplicate_label,
  dangling_edge,
  self_loop,
  graph_too_large,
  unknown_label,
  unknown_builtin,
  bad_cycle_length,
  dimension_too_small,
  // polytope
  non_clique_context,
  context_too_large,
  empty_context_list,
  unbounded_polytope,
  dimension_mismatch,
  // functionals and bounds
  negative_max_coefficient,
  max_group_in_linear_op,
  empty_vertex_list,
  empty_deterministic_set,
  empty_slice,
  envelope_above_line,
  envelope_not_collinear,
  bad_envelope_samples,
  division_by_zero,
  interval_empty,
  aprime_mismatch,
  // scenario / io
  schema_violation,
  unknown_surd,
  bad_rational,
  bad_index,
  io_error,
  // quantum
  realization_invalid,
  missing_definition,
  // pipeline
  step_failed,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace ksb

#endif  // KSBOUND_ERROR_HPP
