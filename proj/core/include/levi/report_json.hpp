#pragma once

#include <string>

#include "levi/two_factors.hpp"

namespace levi {

// Single-line JSON rendering of a classification report with a stable key
// order; integers only, no floating point anywhere.
std::string classification_report_json(const ClassificationReport& r);

}  // namespace levi
