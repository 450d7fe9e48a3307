#pragma once

#include <stdexcept>
#include <string>

namespace levi {

enum class errc {
  invalid_graph,
  invalid_parameter,
  parse_error,
  not_cubic,
  not_bipartite,
  disconnected_input,
  girth_too_small,
  not_linear,
  not_perfect_matching,
  not_two_regular,
  budget_exceeded,
  invalid_site,
  invalid_reduction,
  bipartiteness_broken,
  missing_junction_edge,
  vertex_reuse,
  template_invalid,
  out_of_range,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
 public:
  Error(errc c, const std::string& msg);
  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc c, const std::string& msg);

}  // namespace levi
