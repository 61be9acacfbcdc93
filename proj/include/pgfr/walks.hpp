#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pgfr/graph.hpp"

namespace pgfr {

// Exact walk counts A^k(x,y) for a fixed set of vertex pairs, 0 <= k <= kmax.
// Vertices are internal 0-based indices.
class WalkTable {
public:
  WalkTable(int kmax) : kmax_(kmax) {}

  int kmax() const { return kmax_; }

  const std::vector<mpz_class>& counts(int x, int y) const {
    auto it = table_.find(key(x, y));
    if (it == table_.end()) throw std::out_of_range("walk table: pair not computed");
    return it->second;
  }

  void insert(int x, int y, std::vector<mpz_class> cs) {
    table_[key(x, y)] = std::move(cs);
  }

  bool has(int x, int y) const { return table_.count(key(x, y)) > 0; }

private:
  // A^k is symmetric, store unordered
  static std::pair<int, int> key(int x, int y) { return {std::min(x, y), std::max(x, y)}; }

  int kmax_;
  std::map<std::pair<int, int>, std::vector<mpz_class>> table_;
};

// Iterated integer matrix-vector products, one sweep per distinct source
// vertex.  Requires integer weights; exact at any k.
inline WalkTable walk_counts(const Graph& g,
                             const std::vector<std::pair<int, int>>& pairs,
                             int kmax) {
  if (!g.has_integer_weights())
    throw std::invalid_argument("walk_counts: graph must have integer weights");
  if (kmax < 0) throw std::invalid_argument("walk_counts: kmax must be >= 0");
  const int n = g.size();
  const ZMatrix a = g.integer_weights();

  std::map<int, std::vector<int>> targets;  // source -> target vertices
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n)
      throw std::invalid_argument("walk_counts: vertex out of range");
    const int s = std::min(x, y), t = std::max(x, y);
    targets[s].push_back(t);
  }

  WalkTable wt(kmax);
  for (auto& [src, tgts] : targets) {
    std::sort(tgts.begin(), tgts.end());
    tgts.erase(std::unique(tgts.begin(), tgts.end()), tgts.end());
    std::vector<std::vector<mpz_class>> rows(tgts.size());

    std::vector<mpz_class> vec(n, 0), next(n);
    vec[src] = 1;
    for (int k = 0; k <= kmax; ++k) {
      for (std::size_t ti = 0; ti < tgts.size(); ++ti) rows[ti].push_back(vec[tgts[ti]]);
      if (k == kmax) break;
      for (int i = 0; i < n; ++i) {
        mpz_class s = 0;
        for (int j = 0; j < n; ++j)
          if (a(i, j) != 0) s += a(i, j) * vec[j];
        next[i] = s;
      }
      vec.swap(next);
    }
    for (std::size_t ti = 0; ti < tgts.size(); ++ti)
      wt.insert(src, tgts[ti], std::move(rows[ti]));
  }
  return wt;
}

inline mpz_class binomial(long k, long j) {
  if (j < 0 || j > k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
  return r;
}

// Closed-form walk count on the path P_n between 1-based vertices x and y:
//   A^k(x,y) = C(k, (k-(y-x))/2) - C(k, (k-(y+x))/2)
// valid for k <= 2n-(x+y) after mirroring so the pair hugs endpoint 1.
// Off-parity k counts are 0 at every k (the path is bipartite).  Returns
// nullopt beyond the valid range; callers fall back to walk_counts.
inline std::optional<mpz_class> path_walk_closed_form(int n, int x, int y, long k) {
  if (n < 1 || x < 1 || x > n || y < 1 || y > n || k < 0)
    throw std::invalid_argument("path_walk_closed_form: bad arguments");
  if (x > y) std::swap(x, y);
  if (x - 1 > n - y) {  // mirror so x is the vertex nearer its endpoint
    const int nx = n + 1 - y, ny = n + 1 - x;
    x = nx;
    y = ny;
  }
  if ((k - (y - x)) % 2 != 0) return mpz_class(0);
  if (k > 2L * n - (x + y)) return std::nullopt;
  return binomial(k, (k - (y - x)) / 2) - binomial(k, (k - (y + x)) / 2);
}

// Walk-count route to fractional cospectrality: the unique rational c with
//   A^k(u,u) - A^k(v,v) = c * A^k(u,v)   for all k,
// solved exactly over 0 <= k <= 2n (Cayley-Hamilton makes k < n sufficient;
// the doubled range is a cheap guard).  c = 0 signals ordinary
// cospectrality; nullopt means no constant exists.  u, v are 0-based.
inline std::optional<mpq_class> walk_cospectrality(const Graph& g, int u, int v) {
  const int n = g.size();
  if (u == v || u < 0 || v < 0 || u >= n || v >= n)
    throw std::invalid_argument("walk_cospectrality: need two distinct vertices");
  const int kmax = 2 * n;
  const WalkTable wt = walk_counts(g, {{u, u}, {v, v}, {u, v}}, kmax);
  const auto& cuu = wt.counts(u, u);
  const auto& cvv = wt.counts(v, v);
  const auto& cuv = wt.counts(u, v);

  std::optional<mpq_class> c;
  for (int k = 0; k <= kmax; ++k) {
    const mpz_class diff = cuu[k] - cvv[k];
    if (cuv[k] == 0) {
      if (diff != 0) return std::nullopt;
      continue;
    }
    mpq_class ratio(diff, cuv[k]);
    ratio.canonicalize();
    if (!c)
      c = ratio;
    else if (*c != ratio)
      return std::nullopt;
  }
  // No k with A^k(u,v) != 0 and all diagonals equal: plain cospectral pair.
  if (!c) c = mpq_class(0);
  return c;
}

}  // namespace pgfr
