#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace pgfr {

// An eigenvalue stored exactly as 2*cos(2*pi*a/N).  Canonical form:
// gcd(a,N)=1 after reduction and 0 <= a <= N/2, so two values compare
// equal iff their (a,N) pairs do.  All path/cycle eigenvalues live here.
class ExactCosine {
public:
  ExactCosine(std::int64_t a, std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("ExactCosine: modulus must be positive");
    a %= n;
    if (a < 0) a += n;
    if (2 * a > n) a = n - a;  // cos is even and 2pi-periodic
    const std::int64_t g = std::gcd(a, n);
    if (a == 0) {
      a_ = 0;
      n_ = 1;
    } else {
      a_ = a / g;
      n_ = n / g;
    }
  }

  std::int64_t numerator() const { return a_; }
  std::int64_t modulus() const { return n_; }

  double numeric() const {
    return 2.0 * std::cos(2.0 * std::numbers::pi * static_cast<double>(a_) /
                          static_cast<double>(n_));
  }

  bool operator==(const ExactCosine& o) const { return a_ == o.a_ && n_ == o.n_; }
  bool operator!=(const ExactCosine& o) const { return !(*this == o); }

  // Descending by value == ascending by angle a/N in [0, 1/2]; exact
  // integer cross-multiplication, no floating point.
  static bool value_greater(const ExactCosine& x, const ExactCosine& y) {
    return x.a_ * y.n_ < y.a_ * x.n_;
  }

  std::string str() const {
    return "2*cos(2*pi*" + std::to_string(a_) + "/" + std::to_string(n_) + ")";
  }

private:
  std::int64_t a_, n_;
};

}  // namespace pgfr
