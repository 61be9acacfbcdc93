#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pgfr/spectra.hpp"

namespace pgfr {

// Where a distinct eigenvalue's restricted projection lands:
//   Pi1/Pi2  along one of the two orthogonal directions,
//   Zero     restricted projection vanishes,
//   Shared   rank-2 restriction (eigenspace feeds both directions; the
//            fractional-but-not-strong marker).
enum class PairGroup { Pi1, Pi2, Zero, Shared };

// Evidence of (strong) fractional cospectrality of a vertex pair: the walk
// constant c = p/q - q/p, the two H-eigenvector directions (p,q), (-q,p) in
// the {u,v} restriction plane, and the eigenvalue grouping.
struct CospectralityCertificate {
  double c = 0.0;
  std::array<double, 2> direction1{};  // (p,q), canonical p > 0
  std::array<double, 2> direction2{};  // (-q,p)
  std::vector<PairGroup> grouping;     // one entry per distinct eigenvalue
  bool strong = false;                 // no Shared entry

  bool group_empty(PairGroup g) const {
    for (auto x : grouping)
      if (x == g) return false;
    return true;
  }
};

struct CospectralityAnalysis {
  enum class Status { None, FractionalNotStrong, Strong };
  Status status = Status::None;
  std::optional<CospectralityCertificate> certificate;  // absent iff None
};

namespace detail {

struct Restricted2x2 {
  double a, b, d;  // [[a,b],[b,d]], symmetric PSD
};

// zero-group threshold per restricted projection entry
inline constexpr double kZeroTol = 1e-8;
// rank/direction tolerance on trace-normalized entries
inline constexpr double kDirTol = 1e-8;

inline std::array<double, 2> normalize_dir(double x, double y) {
  const double r = std::hypot(x, y);
  std::array<double, 2> d{x / r, y / r};
  // canonical sign: first nonzero component positive
  if (d[0] < -kDirTol || (std::abs(d[0]) <= kDirTol && d[1] < 0)) {
    d[0] = -d[0];
    d[1] = -d[1];
  }
  return d;
}

}  // namespace detail

// Strong fractional cospectrality by restricted eigenprojections: each
// distinct eigenvalue's projection, restricted to rows/columns {u,v}, must
// be zero or a nonnegative multiple of the rank-1 projector onto one of two
// fixed orthogonal directions.  A rank-2 restriction marks the eigenvalue
// as Shared (fractional but not strong).  Directions aligned with the
// coordinate axes admit only diagonal H and yield None.  u, v are 0-based.
inline CospectralityAnalysis strong_fractional_cospectrality(
    const SpectralDecomposition& spec, int u, int v) {
  using detail::kDirTol;
  using detail::kZeroTol;
  if (u == v || u < 0 || v < 0 || u >= spec.n || v >= spec.n)
    throw std::invalid_argument("strong_fractional_cospectrality: bad vertex pair");

  const std::size_t m = spec.eigs.size();
  std::vector<detail::Restricted2x2> r(m);
  std::vector<int> cls(m, 0);  // 0 zero, 1 rank-1, 2 rank-2
  std::vector<std::array<double, 2>> axis(m);

  for (std::size_t i = 0; i < m; ++i) {
    const DMatrix& e = spec.eigs[i].projector;
    r[i] = {e(u, u), e(u, v), e(v, v)};
    const double mx = std::max({std::abs(r[i].a), std::abs(r[i].b), std::abs(r[i].d)});
    if (mx < kZeroTol) {
      cls[i] = 0;
      continue;
    }
    const double tr = r[i].a + r[i].d;
    const double a = r[i].a / tr, b = r[i].b / tr, d = r[i].d / tr;
    const double det = a * d - b * b;
    // smaller eigenvalue of the trace-normalized restriction
    const double disc = std::sqrt(std::max(0.0, 1.0 - 4.0 * det));
    const double lam_min = 0.5 * (1.0 - disc);
    if (lam_min > kDirTol) {
      cls[i] = 2;
      continue;
    }
    cls[i] = 1;
    // principal axis from the dominant column of [[a,b],[b,d]]
    if (a >= d)
      axis[i] = detail::normalize_dir(a, b);
    else
      axis[i] = detail::normalize_dir(b, d);
  }

  // direction1 from the first rank-1 restriction in descending eigenvalue
  // order; rank-2-only spectra leave the pair of directions free and the
  // symmetric pair is the canonical choice.
  std::optional<std::array<double, 2>> d1;
  for (std::size_t i = 0; i < m && !d1; ++i)
    if (cls[i] == 1) d1 = axis[i];
  bool constrained = d1.has_value();
  if (!d1) d1 = detail::normalize_dir(1.0, 1.0);
  const std::array<double, 2> dir1 = *d1;
  const std::array<double, 2> dir2 = detail::normalize_dir(-dir1[1], dir1[0]);

  CospectralityAnalysis out;
  CospectralityCertificate cert;
  cert.direction1 = dir1;
  cert.direction2 = dir2;
  cert.grouping.resize(m);

  bool any_shared = false;
  for (std::size_t i = 0; i < m; ++i) {
    switch (cls[i]) {
      case 0:
        cert.grouping[i] = PairGroup::Zero;
        break;
      case 2:
        cert.grouping[i] = PairGroup::Shared;
        any_shared = true;
        break;
      default: {
        const double along1 = std::abs(axis[i][0] * dir2[0] + axis[i][1] * dir2[1]);
        const double along2 = std::abs(axis[i][0] * dir1[0] + axis[i][1] * dir1[1]);
        if (along1 <= kDirTol)
          cert.grouping[i] = PairGroup::Pi1;  // orthogonal to dir2
        else if (along2 <= kDirTol)
          cert.grouping[i] = PairGroup::Pi2;
        else
          return out;  // inconsistent third direction
      }
    }
  }

  // axis-aligned directions force H diagonal, which fractional revival
  // excludes (only reachable when some rank-1 restriction pinned them)
  if (constrained &&
      (std::abs(dir1[0]) <= kDirTol || std::abs(dir1[1]) <= kDirTol))
    return out;

  const double p = dir1[0], q = dir1[1];
  cert.c = p / q - q / p;
  cert.strong = !any_shared;
  out.status = any_shared ? CospectralityAnalysis::Status::FractionalNotStrong
                          : CospectralityAnalysis::Status::Strong;
  out.certificate = std::move(cert);
  return out;
}

// Direction pair and limiting-unitary data recovered from the walk
// constant alone: p/q is the positive root of x - 1/x = c.
struct RevivalTarget {
  double c = 0.0;
  std::array<double, 2> psi1{};  // (p,q), p,q > 0
  std::array<double, 2> psi2{};  // (-q,p)

  // H(d1,d2) = e^{i d1} psi1 psi1^T + e^{i d2} psi2 psi2^T; symmetric
  // unitary, non-diagonal whenever d1 != d2 (mod 2pi).
  std::array<std::array<std::complex<double>, 2>, 2> unitary(double d1, double d2) const {
    const std::complex<double> e1 = std::polar(1.0, d1), e2 = std::polar(1.0, d2);
    const double p = psi1[0], q = psi1[1];
    return {{{e1 * p * p + e2 * q * q, (e1 - e2) * p * q},
             {(e1 - e2) * p * q, e1 * q * q + e2 * p * p}}};
  }
};

inline RevivalTarget revival_target(const CospectralityCertificate& cert) {
  RevivalTarget t;
  t.c = cert.c;
  const double x = (cert.c + std::sqrt(cert.c * cert.c + 4.0)) / 2.0;  // p/q > 0
  const double norm = std::hypot(x, 1.0);
  t.psi1 = {x / norm, 1.0 / norm};
  t.psi2 = {-t.psi1[1], t.psi1[0]};
  return t;
}

}  // namespace pgfr
