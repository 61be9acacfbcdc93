#pragma once

#include <gmpxx.h>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgfr/matrix.hpp"

namespace pgfr {

using QMatrix = Matrix<mpq_class>;
using ZMatrix = Matrix<mpz_class>;

enum class GraphFamily { Path, Cycle, General };

// Symmetric weighted adjacency structure on n labeled vertices.
// Vertices are addressed internally as 0..n-1; `label_offset` records the
// presentation convention (1..n for paths, 0..n-1 for cycles and files).
// Weights are carried in exact rational form whenever every input was
// rational, with a double mirror for the numeric modules.  Immutable after
// construction.
class Graph {
public:
  static Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Graph g(n, /*label_offset=*/1);
    g.family_ = GraphFamily::Path;
    for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1, 1);
    return g;
  }

  static Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    Graph g(n, /*label_offset=*/0);
    g.family_ = GraphFamily::Cycle;
    for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n, 1);
    return g;
  }

  // Wraps a dense symmetric matrix.  Symmetry is enforced to 1e-12 and the
  // matrix is then symmetrized exactly (upper triangle wins).
  static Graph from_weights(const DMatrix& w) {
    if (w.rows() != w.cols())
      throw std::invalid_argument("from_weights: matrix is not square");
    const int n = static_cast<int>(w.rows());
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        dev = std::max(dev, std::abs(w(i, j) - w(j, i)));
    if (dev > 1e-12) {
      std::ostringstream os;
      os << "from_weights: matrix is not symmetric, max deviation " << dev;
      throw std::invalid_argument(os.str());
    }
    Graph g(n, /*label_offset=*/0);
    g.rational_.reset();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        g.weights_(i, j) = w(i, j);
        g.weights_(j, i) = w(i, j);
      }
    return g;
  }

  static Graph from_rational_weights(const QMatrix& w) {
    if (w.rows() != w.cols())
      throw std::invalid_argument("from_weights: matrix is not square");
    const int n = static_cast<int>(w.rows());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (w(i, j) != w(j, i))
          throw std::invalid_argument("from_weights: matrix is not symmetric");
    Graph g(n, /*label_offset=*/0);
    g.rational_ = w;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g.weights_(i, j) = w(i, j).get_d();
    return g;
  }

  int size() const { return n_; }
  int label_offset() const { return label_offset_; }
  GraphFamily family() const { return family_; }
  const DMatrix& weights() const { return weights_; }

  bool has_rational_weights() const { return rational_.has_value(); }
  const QMatrix& rational_weights() const {
    if (!rational_) throw std::logic_error("graph has no exact rational weights");
    return *rational_;
  }

  // True when every weight is an exact integer (walk counting needs this).
  bool has_integer_weights() const {
    if (!rational_) return false;
    for (const auto& q : rational_->data())
      if (q.get_den() != 1) return false;
    return true;
  }

  ZMatrix integer_weights() const {
    if (!has_integer_weights())
      throw std::invalid_argument("graph does not have integer weights");
    ZMatrix a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a(i, j) = (*rational_)(i, j).get_num();
    return a;
  }

private:
  Graph(int n, int label_offset)
      : n_(n),
        label_offset_(label_offset),
        weights_(n, n, 0.0),
        rational_(QMatrix(n, n, mpq_class(0))) {}

  void set_edge(int i, int j, int w) {
    weights_(i, j) = weights_(j, i) = static_cast<double>(w);
    (*rational_)(i, j) = (*rational_)(j, i) = w;
  }

  int n_;
  int label_offset_;
  GraphFamily family_ = GraphFamily::General;
  DMatrix weights_;
  std::optional<QMatrix> rational_;
};

namespace detail {

// Exact rational from an integer, fraction "p/q" or finite decimal token.
// Returns nullopt for anything else (e.g. scientific notation).
inline std::optional<mpq_class> parse_rational(const std::string& tok) {
  if (tok.empty()) return std::nullopt;
  const auto slash = tok.find('/');
  if (slash != std::string::npos) {
    try {
      mpq_class q(tok);
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  std::string digits;
  std::size_t frac_digits = 0;
  bool seen_dot = false, seen_digit = false;
  std::size_t i = 0;
  if (tok[i] == '+' || tok[i] == '-') {
    if (tok[i] == '-') digits += '-';
    ++i;
  }
  for (; i < tok.size(); ++i) {
    const char c = tok[i];
    if (c == '.') {
      if (seen_dot) return std::nullopt;
      seen_dot = true;
    } else if (c >= '0' && c <= '9') {
      digits += c;
      seen_digit = true;
      if (seen_dot) ++frac_digits;
    } else {
      return std::nullopt;
    }
  }
  if (!seen_digit) return std::nullopt;
  mpq_class q(mpz_class(digits), 1);
  for (std::size_t k = 0; k < frac_digits; ++k) q /= 10;
  q.canonicalize();
  return q;
}

}  // namespace detail

// Reads a whitespace-separated dense matrix, one row per line.  Keeps the
// exact rational form when every entry parses as integer/fraction/decimal.
inline Graph read_weight_matrix(std::istream& in) {
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) rows.push_back(std::move(toks));
  }
  const std::size_t n = rows.size();
  if (n == 0) throw std::invalid_argument("weight matrix: empty input");
  for (const auto& r : rows)
    if (r.size() != n)
      throw std::invalid_argument("weight matrix: not square (" +
                                  std::to_string(r.size()) + " entries in a row, " +
                                  std::to_string(n) + " rows)");

  QMatrix q(n, n);
  bool all_rational = true;
  for (std::size_t i = 0; i < n && all_rational; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto v = detail::parse_rational(rows[i][j]);
      if (!v) {
        all_rational = false;
        break;
      }
      q(i, j) = *v;
    }
  if (all_rational) return Graph::from_rational_weights(q);

  DMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      try {
        d(i, j) = std::stod(rows[i][j]);
      } catch (const std::exception&) {
        throw std::invalid_argument("weight matrix: bad entry '" + rows[i][j] + "'");
      }
    }
  return Graph::from_weights(d);
}

// Graph spec strings used across the CLI: "path:N", "cycle:N", "file:PATH".
inline Graph parse_graph_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec must be path:N, cycle:N or file:PATH");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "path") return Graph::path(std::stoi(arg));
  if (kind == "cycle") return Graph::cycle(std::stoi(arg));
  if (kind == "file") {
    std::ifstream f(arg);
    if (!f) throw std::invalid_argument("cannot open weight matrix file: " + arg);
    return read_weight_matrix(f);
  }
  throw std::invalid_argument("unknown graph spec kind: " + kind);
}

}  // namespace pgfr
