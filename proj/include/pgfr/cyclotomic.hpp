#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "pgfr/exact_cosine.hpp"
#include "pgfr/matrix.hpp"

namespace pgfr {

namespace poly {

// integer polynomials, ascending coefficients
using ZPoly = std::vector<mpz_class>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// division by a monic divisor stays in Z[x]
inline std::pair<ZPoly, ZPoly> divmod_monic(ZPoly num, const ZPoly& den) {
  if (den.empty() || den.back() != 1)
    throw std::invalid_argument("divmod_monic: divisor must be monic");
  trim(num);
  const std::size_t d = den.size() - 1;
  if (num.size() <= d) return {ZPoly{}, std::move(num)};
  ZPoly quot(num.size() - d, 0);
  for (std::size_t i = num.size(); i-- > d;) {
    const mpz_class c = num[i];
    if (c == 0) continue;
    quot[i - d] = c;
    for (std::size_t j = 0; j <= d; ++j) num[i - d + j] -= c * den[j];
  }
  trim(num);
  return {std::move(quot), std::move(num)};
}

}  // namespace poly

// The N-th cyclotomic polynomial, computed by exact division of x^N - 1 by
// the lower cyclotomic factors.  Monic of degree phi(N).
struct CyclotomicPoly {
  std::int64_t n = 1;
  poly::ZPoly coeffs;

  std::size_t degree() const { return coeffs.size() - 1; }
};

inline CyclotomicPoly cyclotomic(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("cyclotomic: need N >= 1");
  std::vector<std::int64_t> divs;
  for (std::int64_t d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      divs.push_back(d);
      if (d != n / d) divs.push_back(n / d);
    }
  std::sort(divs.begin(), divs.end());

  std::vector<poly::ZPoly> phi(divs.size());
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::int64_t d = divs[i];
    poly::ZPoly num(static_cast<std::size_t>(d) + 1, 0);  // x^d - 1
    num[0] = -1;
    num.back() = 1;
    for (std::size_t j = 0; j < i; ++j) {
      if (d % divs[j] != 0) continue;
      auto [q, r] = poly::divmod_monic(std::move(num), phi[j]);
      if (!r.empty()) throw std::logic_error("cyclotomic: non-exact division");
      num = std::move(q);
    }
    phi[i] = std::move(num);
  }
  return CyclotomicPoly{n, phi.back()};
}

// Least common modulus so that every value is 2cos(2*pi*a/N).
inline std::int64_t cosine_common_modulus(const std::vector<ExactCosine>& vals) {
  std::int64_t n = 1;
  for (const auto& v : vals) n = std::lcm(n, v.modulus());
  return n;
}

// Coordinates of 2cos(2*pi*a/N) = zeta^a + zeta^{N-a} in the power basis
// {1, zeta, ..., zeta^{phi(N)-1}} of Z[zeta], one row per value.  Integer
// linear combinations of the values vanish iff the same combinations of
// the rows do, which is what the relation lattice is built on.
inline ZMatrix cosine_coordinates(const std::vector<ExactCosine>& vals,
                                  std::int64_t modulus = 0) {
  const std::int64_t n = modulus > 0 ? modulus : cosine_common_modulus(vals);
  const CyclotomicPoly phi = cyclotomic(n);
  const std::size_t deg = phi.degree();
  ZMatrix coords(vals.size(), deg, mpz_class(0));
  for (std::size_t r = 0; r < vals.size(); ++r) {
    const std::int64_t scaled = vals[r].numerator() * (n / vals[r].modulus());
    if (n % vals[r].modulus() != 0)
      throw std::invalid_argument("cosine_coordinates: modulus mismatch");
    poly::ZPoly p;
    if (scaled == 0 || 2 * scaled == n) {
      p.assign(static_cast<std::size_t>(scaled) + 1, 0);
      p.back() = 2;  // zeta^a + zeta^{N-a} collapses to 2*zeta^a
    } else {
      p.assign(static_cast<std::size_t>(n - scaled) + 1, 0);
      p[static_cast<std::size_t>(scaled)] = 1;
      p.back() = 1;
    }
    auto [q, rem] = poly::divmod_monic(std::move(p), phi.coeffs);
    for (std::size_t j = 0; j < rem.size(); ++j) coords(r, j) = rem[j];
  }
  return coords;
}

// One instance of the alternating cosine identity
//   sum_{i=0}^{m-1} (-1)^i cos((a+ik)pi/(km)) = 0,  m odd, 0 <= a < k,
// returned as signed ExactCosine terms over modulus 2km and verified to
// reduce to zero in cyclotomic coordinates.
struct CosineRelation {
  std::vector<ExactCosine> values;
  std::vector<int> signs;  // +1 / -1, aligned with values
};

inline CosineRelation cosine_relation_identity(std::int64_t m, std::int64_t k,
                                               std::int64_t a) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("need odd m >= 3");
  if (k < 1 || a < 0 || a >= k) throw std::invalid_argument("need 0 <= a < k");
  CosineRelation rel;
  for (std::int64_t i = 0; i < m; ++i) {
    rel.values.emplace_back(a + i * k, 2 * k * m);
    rel.signs.push_back(i % 2 == 0 ? 1 : -1);
  }
  const ZMatrix coords = cosine_coordinates(rel.values);
  for (std::size_t j = 0; j < coords.cols(); ++j) {
    mpz_class s = 0;
    for (std::size_t r = 0; r < rel.values.size(); ++r)
      s += rel.signs[r] * coords(r, j);
    if (s != 0) throw std::logic_error("cosine_relation_identity: nonzero reduction");
  }
  return rel;
}

}  // namespace pgfr
