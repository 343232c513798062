#include "pacioli/algebra.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pacioli {

namespace {

void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b) throw DimensionMismatch(a, b);
}

template <typename Vec>
std::string join_components(const Vec& v) {
  std::ostringstream os;
  if (v.dimension() == 1) {
    os << v[0];
    return os.str();
  }
  os << '(';
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i != 0) os << ", ";
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace

DimensionMismatch::DimensionMismatch(std::size_t expected, std::size_t actual)
    : std::invalid_argument("dimension mismatch: expected " +
                            std::to_string(expected) + " components, got " +
                            std::to_string(actual)),
      expected_(expected),
      actual_(actual) {}

bool IntVec::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Integer& x) { return x == 0; });
}

IntVec operator+(const IntVec& a, const IntVec& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return IntVec(std::move(out));
}

IntVec operator-(const IntVec& a, const IntVec& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
  return IntVec(std::move(out));
}

IntVec operator-(const IntVec& a) {
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
  return IntVec(std::move(out));
}

NatVec::NatVec(std::vector<Integer> components)
    : components_(std::move(components)) {
  for (const Integer& x : components_) {
    if (x < 0) throw std::domain_error("NatVec component must be non-negative");
  }
}

bool NatVec::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Integer& x) { return x == 0; });
}

NatVec operator+(const NatVec& a, const NatVec& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
  return NatVec(std::move(out));
}

NatVec componentwise_min(const NatVec& a, const NatVec& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::min(a[i], b[i]);
  return NatVec(std::move(out));
}

NatVec componentwise_max(const NatVec& a, const NatVec& b) {
  require_same_dimension(a.dimension(), b.dimension());
  std::vector<Integer> out(a.dimension());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(a[i], b[i]);
  return NatVec(std::move(out));
}

bool disjoint(const NatVec& a, const NatVec& b) {
  return componentwise_min(a, b).is_zero();
}

JordanParts jordan_decompose(const IntVec& x) {
  std::vector<Integer> pos(x.dimension());
  std::vector<Integer> neg(x.dimension());
  for (std::size_t i = 0; i < x.dimension(); ++i) {
    if (x[i] > 0) {
      pos[i] = x[i];
    } else {
      neg[i] = -x[i];
    }
  }
  return {NatVec(std::move(pos)), NatVec(std::move(neg))};
}

TTerm::TTerm(NatVec debit, NatVec credit)
    : debit_(std::move(debit)), credit_(std::move(credit)) {
  require_same_dimension(debit_.dimension(), credit_.dimension());
}

TTerm TTerm::debit_only(NatVec amount) {
  auto zero = NatVec::zero(amount.dimension());
  return TTerm(std::move(amount), std::move(zero));
}

TTerm TTerm::credit_only(NatVec amount) {
  auto zero = NatVec::zero(amount.dimension());
  return TTerm(std::move(zero), std::move(amount));
}

TTerm operator+(const TTerm& a, const TTerm& b) {
  return TTerm(a.debit() + b.debit(), a.credit() + b.credit());
}

TTerm negate(const TTerm& a) { return TTerm(a.credit(), a.debit()); }

bool group_equal(const TTerm& a, const TTerm& b) {
  return a.debit() + b.credit() == b.debit() + a.credit();
}

TTerm reduce(const TTerm& a) {
  // Subtracting the componentwise min never goes negative.
  const NatVec m = componentwise_min(a.debit(), a.credit());
  std::vector<Integer> d(a.dimension());
  std::vector<Integer> c(a.dimension());
  for (std::size_t i = 0; i < d.size(); ++i) {
    d[i] = a.debit()[i] - m[i];
    c[i] = a.credit()[i] - m[i];
  }
  return TTerm(NatVec(std::move(d)), NatVec(std::move(c)));
}

bool is_zero_account(const TTerm& a) { return a.debit() == a.credit(); }

bool is_reduced(const TTerm& a) { return disjoint(a.debit(), a.credit()); }

IntVec debit_value(const TTerm& a) {
  return a.debit().to_signed() - a.credit().to_signed();
}

IntVec credit_value(const TTerm& a) {
  return a.credit().to_signed() - a.debit().to_signed();
}

TTerm encode_debit(const IntVec& x) {
  auto [pos, neg] = jordan_decompose(x);
  return TTerm(std::move(pos), std::move(neg));
}

TTerm encode_credit(const IntVec& x) {
  auto [pos, neg] = jordan_decompose(x);
  return TTerm(std::move(neg), std::move(pos));
}

TTerm sum(const std::vector<TTerm>& terms, std::size_t dimension) {
  TTerm total = TTerm::zero(dimension);
  for (const TTerm& t : terms) total = total + t;
  return total;
}

std::string to_string(const IntVec& v) { return join_components(v); }
std::string to_string(const NatVec& v) { return join_components(v); }

std::string to_string(const TTerm& t) {
  return "[" + to_string(t.debit()) + " // " + to_string(t.credit()) + "]";
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  return os << to_string(v);
}
std::ostream& operator<<(std::ostream& os, const NatVec& v) {
  return os << to_string(v);
}
std::ostream& operator<<(std::ostream& os, const TTerm& t) {
  return os << to_string(t);
}

}  // namespace pacioli
