#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace chainscape {

enum class errc {
  asymmetric,
  nonzero_diagonal,
  triangle_violation,
  zero_off_diagonal,
  duplicate_point,
  dimension_mismatch,
  singleton_space,
  exact_search_too_large,
  fewer_than_two_samples,
  non_decreasing_deltas,
  alpha_not_concave,
  alpha_below_identity,
  metric_axiom_failure,
  no_witness_at_step,
  chain_finder_failed,
  schedule_inconsistent,
  grid_too_coarse,
  family_too_large,
  connector_failed,
  precondition_violated,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc code);

/// Library error: a code plus up to three integer indices identifying the
/// offending points, samples or levels.
class error : public std::runtime_error {
 public:
  error(errc code, std::string message,
        std::array<std::int64_t, 3> indices = {-1, -1, -1})
      : std::runtime_error(std::move(message)), code_(code), indices_(indices) {}

  errc code() const noexcept { return code_; }
  const std::array<std::int64_t, 3>& indices() const noexcept { return indices_; }

 private:
  errc code_;
  std::array<std::int64_t, 3> indices_;
};

[[noreturn]] void fail(errc code, const std::string& message,
                       std::int64_t i = -1, std::int64_t j = -1,
                       std::int64_t k = -1);

}  // namespace chainscape
