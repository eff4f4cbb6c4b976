#include "qpw/hyperreal.hpp"

namespace qpw {

Hyperreal::Hyperreal(int degree) {
  if (degree < 0) throw PreconditionError("negative truncation degree");
  coeffs_.assign(degree + 1, Rational(0));
}

Hyperreal::Hyperreal(std::vector<Rational> coefficients, int degree) : Hyperreal(degree) {
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i < coeffs_.size())
      coeffs_[i] = std::move(coefficients[i]);
    else if (coefficients[i] != 0)
      throw TruncationOverflow("coefficient of e^" + std::to_string(i) + " exceeds degree " +
                               std::to_string(degree));
  }
}

Hyperreal Hyperreal::standard(Rational value, int degree) {
  Hyperreal x(degree);
  x.coeffs_[0] = std::move(value);
  return x;
}

Hyperreal Hyperreal::infinitesimal(int power, int degree) {
  if (power < 0 || power > degree) throw TruncationOverflow("e^" + std::to_string(power) + " exceeds degree");
  Hyperreal x(degree);
  x.coeffs_[power] = 1;
  return x;
}

bool Hyperreal::is_zero() const { return !order().has_value(); }

std::optional<int> Hyperreal::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return std::nullopt;
}

int Hyperreal::sign() const {
  const auto k = order();
  if (!k) return 0;
  return coeffs_[*k] > 0 ? 1 : -1;
}

void Hyperreal::require_same_degree(const Hyperreal& other) const {
  if (coeffs_.size() != other.coeffs_.size())
    throw PreconditionError("hyperreal degree mismatch: " + std::to_string(degree()) + " vs " +
                            std::to_string(other.degree()));
}

Hyperreal& Hyperreal::operator+=(const Hyperreal& other) {
  require_same_degree(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Hyperreal& Hyperreal::operator-=(const Hyperreal& other) {
  require_same_degree(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Hyperreal& Hyperreal::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

Hyperreal Hyperreal::operator-() const {
  Hyperreal x = *this;
  for (auto& c : x.coeffs_) c = -c;
  return x;
}

Hyperreal operator*(const Hyperreal& a, const Hyperreal& b) {
  a.require_same_degree(b);
  const std::size_t len = a.coeffs_.size();
  Hyperreal out(a.degree());
  for (std::size_t i = 0; i < len; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < len; ++j) {
      if (b.coeffs_[j] == 0) continue;
      if (i + j >= len)
        throw TruncationOverflow("product term e^" + std::to_string(i + j) + " exceeds degree " +
                                 std::to_string(a.degree()));
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

std::strong_ordering hr_compare(const Hyperreal& x, const Hyperreal& y) {
  if (x.degree() != y.degree())
    throw PreconditionError("hyperreal degree mismatch: " + std::to_string(x.degree()) + " vs " +
                            std::to_string(y.degree()));
  for (int i = 0; i <= x.degree(); ++i) {
    if (x.coefficient(i) < y.coefficient(i)) return std::strong_ordering::less;
    if (y.coefficient(i) < x.coefficient(i)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const Hyperreal& x) {
  std::string out;
  for (int i = 0; i <= x.degree(); ++i) {
    const auto& c = x.coefficient(i);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    const std::string term = i == 0 ? "" : (i == 1 ? "e" : "e^" + std::to_string(i));
    if (term.empty() || mag != 1) out += to_string(mag);
    out += term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace qpw
