#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "qpw/error.hpp"
#include "qpw/rational.hpp"

namespace qpw {

struct TruncationOverflow : Error {
  using Error::Error;
};

// q0 + q1 e + ... + qK e^K for a positive infinitesimal e, with exact
// rational coefficients and fixed truncation degree K. Ordered
// lexicographically from q0 upward.
class Hyperreal {
 public:
  explicit Hyperreal(int degree = 0);
  // Coefficients beyond `degree` must be zero (TruncationOverflow otherwise).
  Hyperreal(std::vector<Rational> coefficients, int degree);

  static Hyperreal standard(Rational value, int degree = 0);
  // e^power.
  static Hyperreal infinitesimal(int power, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& coefficient(int i) const { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& standard_part() const { return coeffs_.front(); }

  bool is_zero() const;
  bool is_infinitesimal() const { return coeffs_.front() == 0; }
  // Index of the first nonzero coefficient; nullopt for zero.
  std::optional<int> order() const;
  // -1, 0 or +1 by the first nonzero coefficient.
  int sign() const;

  Hyperreal& operator+=(const Hyperreal& other);
  Hyperreal& operator-=(const Hyperreal& other);
  Hyperreal& operator*=(const Rational& scalar);
  Hyperreal operator-() const;

  friend Hyperreal operator+(Hyperreal a, const Hyperreal& b) { return a += b; }
  friend Hyperreal operator-(Hyperreal a, const Hyperreal& b) { return a -= b; }
  friend Hyperreal operator*(Hyperreal a, const Rational& s) { return a *= s; }
  friend Hyperreal operator*(const Rational& s, Hyperreal a) { return a *= s; }
  // Truncated product; throws TruncationOverflow if a nonzero term of
  // order above the degree would be discarded.
  friend Hyperreal operator*(const Hyperreal& a, const Hyperreal& b);

  friend bool operator==(const Hyperreal&, const Hyperreal&) = default;

 private:
  void require_same_degree(const Hyperreal& other) const;
  std::vector<Rational> coeffs_;
};

// Total order; throws PreconditionError on a degree mismatch.
std::strong_ordering hr_compare(const Hyperreal& x, const Hyperreal& y);

inline bool operator<(const Hyperreal& x, const Hyperreal& y) { return hr_compare(x, y) < 0; }
inline bool operator<=(const Hyperreal& x, const Hyperreal& y) { return hr_compare(x, y) <= 0; }

// "1 - e + 2e^2" style rendering.
std::string to_string(const Hyperreal& x);

}  // namespace qpw
