#include "levi/errors.hpp"

namespace levi {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_graph: return "InvalidGraph";
    case errc::invalid_parameter: return "InvalidParameter";
    case errc::parse_error: return "ParseError";
    case errc::not_cubic: return "NotCubic";
    case errc::not_bipartite: return "NoBipartition";
    case errc::disconnected_input: return "DisconnectedInput";
    case errc::girth_too_small: return "GirthTooSmall";
    case errc::not_linear: return "NotLinear";
    case errc::not_perfect_matching: return "NotPerfectMatching";
    case errc::not_two_regular: return "NotTwoRegular";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::invalid_site: return "InvalidSite";
    case errc::invalid_reduction: return "InvalidReduction";
    case errc::bipartiteness_broken: return "BipartitenessBroken";
    case errc::missing_junction_edge: return "MissingJunctionEdge";
    case errc::vertex_reuse: return "VertexReuse";
    case errc::template_invalid: return "TemplateInvalid";
    case errc::out_of_range: return "OutOfRange";
  }
  return "Error";
}

Error::Error(errc c, const std::string& msg)
    : std::runtime_error(std::string(errc_name(c)) + ": " + msg), code_(c) {}

void fail(errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace levi
