#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgfr/exact_cosine.hpp"
#include "pgfr/graph.hpp"
#include "pgfr/jacobi.hpp"
#include "pgfr/matrix.hpp"

namespace pgfr {

// One distinct eigenvalue together with the orthogonal projection onto its
// eigenspace.
struct EigenClass {
  double value = 0.0;
  std::optional<ExactCosine> exact;
  int multiplicity = 1;
  DMatrix projector;
};

// Distinct eigenvalues in descending order with their spectral projections:
// sum E = I, E*E' = 0, E^2 = E, sum value*E = A.
struct SpectralDecomposition {
  int n = 0;
  std::vector<EigenClass> eigs;

  bool all_exact() const {
    for (const auto& e : eigs)
      if (!e.exact) return false;
    return true;
  }

  DMatrix reconstruct() const {
    DMatrix a(n, n, 0.0);
    for (const auto& e : eigs) {
      DMatrix scaled = e.projector;
      scaled *= e.value;
      a += scaled;
    }
    return a;
  }
};

namespace detail {

inline DMatrix outer_scaled(const std::vector<double>& x, double scale) {
  const std::size_t n = x.size();
  DMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = scale * x[i] * x[j];
  return m;
}

}  // namespace detail

// P_n has simple eigenvalues 2cos(pi*j/(n+1)) with eigenvector entries
// sin(pi*k*j/(n+1)), k the 1-based vertex label; ||x_j||^2 = (n+1)/2.
inline SpectralDecomposition path_spectrum(int n) {
  if (n < 1) throw std::invalid_argument("path_spectrum: need n >= 1");
  SpectralDecomposition sd;
  sd.n = n;
  const double pi = std::numbers::pi;
  for (int j = 1; j <= n; ++j) {
    EigenClass e;
    e.exact = ExactCosine(j, 2 * (n + 1));
    e.value = e.exact->numeric();
    e.multiplicity = 1;
    std::vector<double> x(n);
    for (int k = 1; k <= n; ++k)
      x[k - 1] = std::sin(pi * static_cast<double>(k) * j / (n + 1));
    e.projector = detail::outer_scaled(x, 2.0 / (n + 1));
    sd.eigs.push_back(std::move(e));
  }
  return sd;
}

// C_n has eigenvalues 2cos(2pi*j/n); j and n-j coincide, giving
// multiplicity 2 for 0 < j < n/2.  Projections are assembled over the
// reals from the paired cosine/sine eigenvectors.
inline SpectralDecomposition cycle_spectrum(int n) {
  if (n < 3) throw std::invalid_argument("cycle_spectrum: need n >= 3");
  SpectralDecomposition sd;
  sd.n = n;
  const double pi = std::numbers::pi;
  for (int j = 0; 2 * j <= n; ++j) {
    EigenClass e;
    e.exact = ExactCosine(j, n);
    e.value = e.exact->numeric();
    const bool paired = (j != 0 && 2 * j != n);
    e.multiplicity = paired ? 2 : 1;
    DMatrix proj(n, n, 0.0);
    std::vector<double> c(n), s(n);
    for (int k = 0; k < n; ++k) {
      const double ang = 2.0 * pi * static_cast<double>(j) * k / n;
      c[k] = std::cos(ang);
      s[k] = std::sin(ang);
    }
    if (!paired) {
      proj += detail::outer_scaled(c, 1.0 / n);  // ||c||^2 = n for j=0, n/2
    } else {
      proj += detail::outer_scaled(c, 2.0 / n);  // ||c||^2 = ||s||^2 = n/2
      proj += detail::outer_scaled(s, 2.0 / n);
    }
    e.projector = std::move(proj);
    sd.eigs.push_back(std::move(e));
  }
  // j ascending means value descending already (2cos(2pi j/n) decreases on [0, n/2]).
  return sd;
}

// Numeric route for arbitrary symmetric graphs: cyclic Jacobi, then
// eigenvalues clustered within 1e-9 into one projector each.  Serves as the
// oracle for the closed forms above.
inline SpectralDecomposition numeric_spectrum(const Graph& g,
                                              double cluster_tol = 1e-9) {
  const EigenSystem es = jacobi_eigensystem(g.weights());
  const int n = g.size();
  SpectralDecomposition sd;
  sd.n = n;
  int j = 0;
  while (j < n) {
    int k = j;
    while (k + 1 < n && std::abs(es.values[k + 1] - es.values[j]) <= cluster_tol) ++k;
    EigenClass e;
    e.multiplicity = k - j + 1;
    double sum = 0.0;
    DMatrix proj(n, n, 0.0);
    for (int c = j; c <= k; ++c) {
      sum += es.values[c];
      std::vector<double> x(n);
      for (int i = 0; i < n; ++i) x[i] = es.vectors(i, c);
      proj += detail::outer_scaled(x, 1.0);
    }
    e.value = sum / e.multiplicity;
    e.projector = std::move(proj);
    sd.eigs.push_back(std::move(e));
    j = k + 1;
  }
  return sd;
}

// Attempts to recognize every eigenvalue of a numeric decomposition as
// 2cos(2pi*a/N) with N <= max_modulus.  The smallest modulus within `tol`
// wins.  Returns false (decomposition untouched) when any value resists.
inline bool exactify_spectrum(SpectralDecomposition& sd, int max_modulus = 4096,
                              double tol = 1e-9) {
  std::vector<ExactCosine> found;
  found.reserve(sd.eigs.size());
  for (const auto& e : sd.eigs) {
    if (e.exact) {
      found.push_back(*e.exact);
      continue;
    }
    if (std::abs(e.value) > 2.0 + tol) return false;
    const double clamped = std::clamp(e.value / 2.0, -1.0, 1.0);
    const double angle = std::acos(clamped) / (2.0 * std::numbers::pi);  // in [0, 1/2]
    bool ok = false;
    for (int N = 1; N <= max_modulus && !ok; ++N) {
      const auto a = static_cast<std::int64_t>(std::llround(angle * N));
      ExactCosine cand(a, N);
      if (std::abs(cand.numeric() - e.value) <= tol) {
        found.push_back(cand);
        ok = true;
      }
    }
    if (!ok) return false;
  }
  for (std::size_t i = 0; i < sd.eigs.size(); ++i) sd.eigs[i].exact = found[i];
  return true;
}

// Preferred spectrum for a Graph: exact closed forms for the path/cycle
// builders, Jacobi for everything else.
inline SpectralDecomposition spectrum_of(const Graph& g) {
  switch (g.family()) {
    case GraphFamily::Path:
      return path_spectrum(g.size());
    case GraphFamily::Cycle:
      return cycle_spectrum(g.size());
    case GraphFamily::General:
      break;
  }
  return numeric_spectrum(g);
}

}  // namespace pgfr
