#pragma once

#include <stdexcept>
#include <string>

namespace skw {

enum class Errc {
  dimension_mismatch,
  outside_domain,
  metric_degenerate,
  flat_chart_degenerate,
  stencil_failure,
  not_pure,
  wrong_weight,
  relations_violated,
  incomplete_filtration,
  non_spanning,
  inconsistent_profile,
  ill_conditioned,
  degenerate_form,
  parse_error,
  invalid_argument,
  sampling_failure,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace skw
