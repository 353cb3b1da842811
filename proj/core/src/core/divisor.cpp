#include <asymcoh/core/divisor.hpp>
#include <asymcoh/error.hpp>

namespace asymcoh {

bool DivisorClass::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.rank() != rank()) throw DimensionMismatch("divisor class rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.rank() != rank()) throw DimensionMismatch("divisor class rank mismatch");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

DivisorClass operator-(DivisorClass a) {
  for (auto& c : a.coords_) c = -c;
  return a;
}

DivisorClass operator*(const Rational& s, DivisorClass a) {
  for (auto& c : a.coords_) c *= s;
  return a;
}

std::string DivisorClass::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += asymcoh::to_string(coords_[i]);
  }
  return out + ")";
}

bool CohomologyVector::all_nonnegative() const {
  for (const auto& v : values)
    if (v.sign() < 0) return false;
  return true;
}

bool CohomologyVector::is_zero() const { return support_size() == 0; }

std::size_t CohomologyVector::support_size() const {
  std::size_t n = 0;
  for (const auto& v : values)
    if (!v.is_zero()) ++n;
  return n;
}

Rational CohomologyVector::alternating_sum() const {
  Rational s = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i % 2 == 0) s += values[i]; else s -= values[i];
  }
  return s;
}

CohomologyVector CohomologyVector::scaled(const Rational& s) const {
  CohomologyVector out = *this;
  for (auto& v : out.values) v *= s;
  return out;
}

std::string CohomologyVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += asymcoh::to_string(values[i]);
  }
  return out + ")";
}

Rational NormedBasis::norm(const DivisorClass& xi) const {
  if (xi.rank() != labels_.size()) {
    throw DimensionMismatch("class of rank " + std::to_string(xi.rank()) +
                            " measured in a basis of rank " + std::to_string(labels_.size()));
  }
  Rational best = 0;
  for (const auto& c : xi.coords()) {
    const Rational a = abs(c);
    if (a > best) best = a;
  }
  return best;
}

Rational max_norm(const NormedBasis& basis, const DivisorClass& xi) { return basis.norm(xi); }

}  // namespace asymcoh
