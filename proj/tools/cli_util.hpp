#ifndef CVUR_TOOLS_CLI_UTIL_HPP
#define CVUR_TOOLS_CLI_UTIL_HPP

#include <optional>
#include <string>
#include <vector>

#include "cvur/conjecture_lab.hpp"
#include "cvur/quadratures.hpp"
#include "cvur/relations.hpp"

namespace cvur_cli {

/// Parses an angle given as plain radians ("0.7") or as a rational multiple
/// of pi ("pi/4", "2pi/3", "-pi/2", "1.5pi"), for exact figure reproduction.
double parse_angle(const std::string& text);

std::vector<double> parse_angle_list(const std::string& text);

/// Side parameters a relation may need besides the state.
struct RelationArgs {
  std::optional<double> alpha, beta, theta, phi;
  std::optional<int> m;
  std::optional<cvur::QuadratureSet> quadratures;
  cvur::RelationOptions options;
};

/// Binds a relation id and its side parameters into a callable evaluation.
/// For vector relations the quadrature file holds Y stacked on Z (first half
/// of the rows is Y). Throws std::invalid_argument for unknown ids or
/// missing parameters.
cvur::RelationBinding make_binding(const std::string& id, const RelationArgs& args);

/// Known relation ids, for error messages.
const std::vector<std::string>& relation_ids();

}  // namespace cvur_cli

#endif
