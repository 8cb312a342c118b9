#include "braidcode/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "braidcode/errors.hpp"

namespace braidcode {

LaurentPoly::LaurentPoly(BigInt constant) {
  coeffs_.push_back(std::move(constant));
  normalize();
}

LaurentPoly LaurentPoly::monomial(BigInt c, int exponent) {
  LaurentPoly p;
  p.low_ = exponent;
  p.coeffs_.push_back(std::move(c));
  p.normalize();
  return p;
}

BigInt LaurentPoly::coefficient(int exponent) const {
  if (coeffs_.empty() || exponent < low_ || exponent > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back() == 0) coeffs_.pop_back();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low_, rhs.low_);
  const int hi = std::max(high_degree(), rhs.high_degree());
  std::vector<BigInt> sum(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    sum[static_cast<std::size_t>(low_ - lo) + k] += coeffs_[k];
  }
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) {
    sum[static_cast<std::size_t>(rhs.low_ - lo) + k] += rhs.coeffs_[k];
  }
  low_ = lo;
  coeffs_ = std::move(sum);
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentPoly out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t x = 0; x < a.coeffs_.size(); ++x) {
    for (std::size_t y = 0; y < b.coeffs_.size(); ++y) {
      out.coeffs_[x + y] += a.coeffs_[x] * b.coeffs_[y];
    }
  }
  out.normalize();
  return out;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = low_; e <= high_degree(); ++e) {
    BigInt c = coefficient(e);
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

LaurentMatrix::LaurentMatrix(int dimension) : dim_(dimension) {
  if (dimension < 1) throw ValidationError("matrix dimension must be positive");
  entries_.resize(static_cast<std::size_t>(dimension) * static_cast<std::size_t>(dimension));
}

LaurentMatrix LaurentMatrix::identity(int dimension) {
  LaurentMatrix m(dimension);
  for (int k = 0; k < dimension; ++k) m.at(k, k) = LaurentPoly(1);
  return m;
}

bool LaurentMatrix::is_identity() const {
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      const LaurentPoly& e = at(r, c);
      if (r == c ? e != LaurentPoly(1) : !e.is_zero()) return false;
    }
  }
  return true;
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.dim_ != b.dim_) throw ValidationError("matrix dimension mismatch");
  LaurentMatrix out(a.dim_);
  for (int r = 0; r < a.dim_; ++r) {
    for (int c = 0; c < a.dim_; ++c) {
      LaurentPoly acc;
      for (int k = 0; k < a.dim_; ++k) {
        if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
        acc += a.at(r, k) * b.at(k, c);
      }
      out.at(r, c) = std::move(acc);
    }
  }
  return out;
}

std::string LaurentMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < dim_; ++r) {
    os << '[';
    for (int c = 0; c < dim_; ++c) {
      if (c) os << ", ";
      os << at(r, c).to_string();
    }
    os << "]\n";
  }
  return os.str();
}

}  // namespace braidcode
