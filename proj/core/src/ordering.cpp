#include "cvur/ordering.hpp"

#include <stdexcept>
#include <vector>

namespace cvur {
namespace {

// Index map from the target ordering into the source ordering: position i of
// the converted vector reads from position map[i] of the input.
std::vector<int> index_map(int size, Ordering from, Ordering to) {
  if (size % 2 != 0) {
    throw std::invalid_argument("ordering conversion requires even dimension, got " +
                                std::to_string(size));
  }
  const int n = size / 2;
  std::vector<int> map(size);
  if (from == to) {
    for (int i = 0; i < size; ++i) map[i] = i;
  } else if (to == Ordering::xxpp) {
    // xxpp slot k reads x_{k+1}, which lives at interleaved slot 2k.
    for (int k = 0; k < n; ++k) {
      map[k] = 2 * k;
      map[n + k] = 2 * k + 1;
    }
  } else {
    for (int k = 0; k < n; ++k) {
      map[2 * k] = k;
      map[2 * k + 1] = n + k;
    }
  }
  return map;
}

}  // namespace

std::string to_string(Ordering o) {
  return o == Ordering::xxpp ? "xxpp" : "interleaved";
}

Ordering ordering_from_string(const std::string& s) {
  if (s == "xxpp") return Ordering::xxpp;
  if (s == "interleaved") return Ordering::interleaved;
  throw std::invalid_argument("unknown ordering '" + s + "'");
}

Eigen::VectorXd convert_ordering(const Eigen::VectorXd& v, Ordering from, Ordering to) {
  const auto map = index_map(static_cast<int>(v.size()), from, to);
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < v.size(); ++i) out(i) = v(map[i]);
  return out;
}

Eigen::MatrixXd convert_ordering(const Eigen::MatrixXd& m, Ordering from, Ordering to) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("ordering conversion requires a square matrix");
  }
  const auto map = index_map(static_cast<int>(m.rows()), from, to);
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(map[i], map[j]);
  }
  return out;
}

}  // namespace cvur
