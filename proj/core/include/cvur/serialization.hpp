#ifndef CVUR_SERIALIZATION_HPP
#define CVUR_SERIALIZATION_HPP

#include <stdexcept>
#include <string>

#include "cvur/conjecture_lab.hpp"
#include "cvur/quadratures.hpp"
#include "cvur/relations.hpp"
#include "cvur/states.hpp"

namespace cvur {

/// Raised on malformed input documents; the message names the field path.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// State documents:
///   {"type":"gaussian","ordering":"xxpp","mean":[...],"cov":[[...]]}
///   {"type":"fock","n_modes":1,"dim":64,"amplitudes_re":[...],"amplitudes_im":[...]}
/// Gaussian states are converted to xxpp internally when declared interleaved.
State state_from_json(const std::string& text);
std::string state_to_json(const State& s);

/// Quadrature-set documents: {"n_modes":1,"rows":[{"a":[...],"ap":[...]},...]}.
QuadratureSet quadratures_from_json(const std::string& text);
std::string quadratures_to_json(const QuadratureSet& q);

/// {"id","lhs","rhs","slack","saturated","degenerate","meta":{...}}.
/// Non-finite numbers serialize as null.
std::string report_to_json(const RelationReport& r);

std::string scan_to_json(const ScanResult& r);

State load_state(const std::string& path);
QuadratureSet load_quadratures(const std::string& path);

}  // namespace cvur

#endif
