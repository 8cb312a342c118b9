#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace braidcode {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable t with exact integer coefficients.
///
/// Stored densely from the lowest nonzero exponent upwards. Normalized:
/// the first and last stored coefficients are nonzero, and the zero
/// polynomial has no coefficients at all.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(BigInt constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(long long constant) : LaurentPoly(BigInt(constant)) {}  // NOLINT

  /// c * t^exponent
  static LaurentPoly monomial(BigInt c, int exponent);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly t_inv() { return monomial(1, -1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest and highest exponent carrying a nonzero coefficient. Undefined on zero.
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  /// Coefficient of t^exponent (zero outside the support).
  BigInt coefficient(int exponent) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// e.g. "1 - t", "t^-1", "0".
  std::string to_string() const;

 private:
  void normalize();

  int low_ = 0;
  std::vector<BigInt> coeffs_;
};

/// Square matrix over LaurentPoly.
class LaurentMatrix {
 public:
  /// Zero matrix of the given dimension.
  explicit LaurentMatrix(int dimension);
  static LaurentMatrix identity(int dimension);

  int dimension() const { return dim_; }
  const LaurentPoly& at(int row, int col) const { return entries_[index(row, col)]; }
  LaurentPoly& at(int row, int col) { return entries_[index(row, col)]; }

  bool is_identity() const;

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  friend bool operator==(const LaurentMatrix&, const LaurentMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dim_) +
           static_cast<std::size_t>(col);
  }

  int dim_;
  std::vector<LaurentPoly> entries_;
};

}  // namespace braidcode
