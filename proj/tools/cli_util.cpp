#include "cli_util.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace cvur_cli {
namespace {

using cvur::QuadratureSet;
using cvur::RelationBinding;
using cvur::RelationOptions;
using cvur::State;

double require(const std::optional<double>& v, const char* name, const std::string& id) {
  if (!v) throw std::invalid_argument("relation '" + id + "' needs --" + name);
  return *v;
}

QuadratureSet require_quads(const RelationArgs& args, const std::string& id) {
  if (!args.quadratures) {
    throw std::invalid_argument("relation '" + id + "' needs --quadratures");
  }
  return *args.quadratures;
}

/// Splits a quadrature file holding Y stacked on Z into the two halves.
std::pair<QuadratureSet, QuadratureSet> split_yz(const QuadratureSet& q,
                                                 const std::string& id) {
  if (q.rows() % 2 != 0) {
    throw std::invalid_argument("relation '" + id +
                                "' expects an even number of quadrature rows (Y over Z)");
  }
  const int n = q.rows() / 2;
  return {QuadratureSet(q.n_modes, q.coeffs.topRows(n)),
          QuadratureSet(q.n_modes, q.coeffs.bottomRows(n))};
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (const char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw std::invalid_argument("empty angle");

  const std::size_t pi_pos = s.find("pi");
  if (pi_pos == std::string::npos) {
    std::size_t used = 0;
    const double value = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument("cannot parse angle '" + text + "'");
    return value;
  }

  double coefficient = 1.0;
  std::string head = s.substr(0, pi_pos);
  if (head == "-") {
    coefficient = -1.0;
  } else if (head == "+") {
    coefficient = 1.0;
  } else if (!head.empty()) {
    std::size_t used = 0;
    coefficient = std::stod(head, &used);
    if (used != head.size()) throw std::invalid_argument("cannot parse angle '" + text + "'");
  }

  double divisor = 1.0;
  std::string tail = s.substr(pi_pos + 2);
  if (!tail.empty()) {
    if (tail[0] != '/') throw std::invalid_argument("cannot parse angle '" + text + "'");
    tail = tail.substr(1);
    std::size_t used = 0;
    divisor = std::stod(tail, &used);
    if (used != tail.size() || divisor == 0.0) {
      throw std::invalid_argument("cannot parse angle '" + text + "'");
    }
  }
  return coefficient * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(parse_angle(item));
  }
  if (out.empty()) throw std::invalid_argument("empty angle list '" + text + "'");
  return out;
}

const std::vector<std::string>& relation_ids() {
  static const std::vector<std::string> ids = {
      "heisenberg",  "robertson_schrodinger", "simon_physicality",
      "robertson_m", "kw_product",            "bbm",
      "renyi_ccv",   "tight_ccv",             "guanlei",
      "huang",       "vector_eur",            "renyi_vector_eur",
      "tight_vector_eur",                     "conjecture1",
      "conjecture2", "conjecture3",           "conjecture4",
  };
  return ids;
}

RelationBinding make_binding(const std::string& id, const RelationArgs& args) {
  const RelationOptions opt = args.options;
  RelationBinding binding;
  binding.id = id;
  binding.status = cvur::relation_status(id);

  if (id == "heisenberg") {
    binding.eval = [](const State& s) { return cvur::heisenberg(s); };
  } else if (id == "robertson_schrodinger") {
    binding.eval = [](const State& s) { return cvur::robertson_schrodinger(s); };
  } else if (id == "simon_physicality") {
    binding.eval = [](const State& s) { return cvur::simon_physicality(s); };
  } else if (id == "robertson_m") {
    binding.eval = [q = require_quads(args, id)](const State& s) {
      return cvur::robertson_m(s, q);
    };
  } else if (id == "kw_product") {
    binding.eval = [q = require_quads(args, id)](const State& s) {
      return cvur::kw_product(s, q);
    };
  } else if (id == "bbm") {
    binding.eval = [opt](const State& s) { return cvur::bbm(s, opt); };
  } else if (id == "renyi_ccv") {
    const double alpha = require(args.alpha, "alpha", id);
    const double beta = require(args.beta, "beta", id);
    binding.eval = [alpha, beta, opt](const State& s) {
      return cvur::renyi_ccv(s, alpha, beta, opt);
    };
  } else if (id == "tight_ccv") {
    binding.eval = [opt](const State& s) { return cvur::tight_ccv(s, opt); };
  } else if (id == "guanlei") {
    const double theta = require(args.theta, "theta", id);
    const double phi = require(args.phi, "phi", id);
    binding.eval = [theta, phi, opt](const State& s) {
      return cvur::guanlei(s, theta, phi, opt);
    };
  } else if (id == "huang") {
    const QuadratureSet q = require_quads(args, id);
    if (q.rows() != 2) {
      throw std::invalid_argument("huang expects a quadrature file with exactly 2 rows");
    }
    binding.eval = [a = q.row(0), b = q.row(1), opt](const State& s) {
      return cvur::huang(s, a, b, opt);
    };
  } else if (id == "vector_eur" || id == "tight_vector_eur") {
    const auto [y, z] = split_yz(require_quads(args, id), id);
    const bool tight = id == "tight_vector_eur";
    binding.eval = [y = y, z = z, tight, opt](const State& s) {
      return tight ? cvur::tight_vector_eur(s, y, z, opt)
                   : cvur::vector_eur(s, y, z, opt);
    };
  } else if (id == "renyi_vector_eur") {
    const auto [y, z] = split_yz(require_quads(args, id), id);
    const double alpha = require(args.alpha, "alpha", id);
    const double beta = require(args.beta, "beta", id);
    binding.eval = [y = y, z = z, alpha, beta, opt](const State& s) {
      return cvur::renyi_vector_eur(s, y, z, alpha, beta, opt);
    };
  } else if (id == "conjecture1" || id == "conjecture2") {
    const QuadratureSet q = require_quads(args, id);
    const bool first = id == "conjecture1";
    binding.eval = [q, first, opt](const State& s) {
      return first ? cvur::conjecture1(s, q, opt) : cvur::conjecture2(s, q, opt);
    };
  } else if (id == "conjecture3") {
    binding.eval = [q = require_quads(args, id), opt](const State& s) {
      return cvur::conjecture3(s, q, opt);
    };
  } else if (id == "conjecture4") {
    if (!args.m) throw std::invalid_argument("conjecture4 needs --m");
    binding.eval = [m = *args.m, opt](const State& s) {
      return cvur::conjecture4(s, m, opt);
    };
  } else {
    std::string known;
    for (const auto& k : relation_ids()) known += (known.empty() ? "" : ", ") + k;
    throw std::invalid_argument("unknown relation '" + id + "' (known: " + known + ")");
  }
  return binding;
}

}  // namespace cvur_cli
