#pragma once

// The group of differences over unsigned vectors.
//
// A T-term [d // c] pairs two unsigned vectors of the same dimension. Two
// T-terms [d // c] and [d' // c'] are equal as group elements when their
// cross-sums agree, d + c' == d' + c. Structural identity (operator==) is a
// separate, stricter relation used for containers and serialization.
//
// The scalar case is simply dimension 1.

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace pacioli {

using Integer = boost::multiprecision::cpp_int;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual);

  std::size_t expected() const noexcept { return expected_; }
  std::size_t actual() const noexcept { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

/// Ordered tuple of signed integers.
class IntVec {
 public:
  IntVec() = default;
  explicit IntVec(std::vector<Integer> components)
      : components_(std::move(components)) {}
  IntVec(std::initializer_list<Integer> components) : components_(components) {}

  static IntVec zero(std::size_t dimension) {
    return IntVec(std::vector<Integer>(dimension));
  }

  std::size_t dimension() const noexcept { return components_.size(); }
  const Integer& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Integer>& components() const noexcept { return components_; }

  bool is_zero() const;

  friend bool operator==(const IntVec&, const IntVec&) = default;

 private:
  std::vector<Integer> components_;
};

IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);

/// Ordered tuple of unsigned integers. Construction rejects negative
/// components, so every NatVec in the program is non-negative.
class NatVec {
 public:
  NatVec() = default;
  explicit NatVec(std::vector<Integer> components);
  NatVec(std::initializer_list<Integer> components)
      : NatVec(std::vector<Integer>(components)) {}

  static NatVec zero(std::size_t dimension) {
    return NatVec(std::vector<Integer>(dimension));
  }

  std::size_t dimension() const noexcept { return components_.size(); }
  const Integer& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Integer>& components() const noexcept { return components_; }

  bool is_zero() const;
  IntVec to_signed() const { return IntVec(components_); }

  friend bool operator==(const NatVec&, const NatVec&) = default;

 private:
  std::vector<Integer> components_;
};

NatVec operator+(const NatVec& a, const NatVec& b);

NatVec componentwise_min(const NatVec& a, const NatVec& b);
NatVec componentwise_max(const NatVec& a, const NatVec& b);

/// True when min(a, b) is the zero vector.
bool disjoint(const NatVec& a, const NatVec& b);

struct JordanParts {
  NatVec positive;
  NatVec negative;
};

/// The unique split x = positive - negative with disjoint, non-negative parts.
JordanParts jordan_decompose(const IntVec& x);

/// A T-account [debit // credit].
class TTerm {
 public:
  TTerm() = default;
  TTerm(NatVec debit, NatVec credit);

  static TTerm zero(std::size_t dimension) {
    return TTerm(NatVec::zero(dimension), NatVec::zero(dimension));
  }
  static TTerm debit_only(NatVec amount);
  static TTerm credit_only(NatVec amount);

  const NatVec& debit() const noexcept { return debit_; }
  const NatVec& credit() const noexcept { return credit_; }
  std::size_t dimension() const noexcept { return debit_.dimension(); }

  /// Structural identity. Use group_equal for equality in the group.
  friend bool operator==(const TTerm&, const TTerm&) = default;

 private:
  NatVec debit_;
  NatVec credit_;
};

TTerm operator+(const TTerm& a, const TTerm& b);

/// Reverses the debit and credit sides.
TTerm negate(const TTerm& a);

/// Group equality: a.debit + b.credit == b.debit + a.credit.
bool group_equal(const TTerm& a, const TTerm& b);

/// Subtracts min(debit, credit) from both sides. The result is the unique
/// disjoint representative of a's class.
TTerm reduce(const TTerm& a);

bool is_zero_account(const TTerm& a);
bool is_reduced(const TTerm& a);

/// Debit isomorphism: [x // y] -> x - y.
IntVec debit_value(const TTerm& a);
/// Credit isomorphism: [x // y] -> y - x.
IntVec credit_value(const TTerm& a);

/// Inverse of the debit isomorphism: x -> [x+ // x-].
TTerm encode_debit(const IntVec& x);
/// Inverse of the credit isomorphism: x -> [x- // x+].
TTerm encode_credit(const IntVec& x);

/// Sum of a sequence of T-terms; the zero T-term of `dimension` when empty.
TTerm sum(const std::vector<TTerm>& terms, std::size_t dimension);

// Text forms: scalars print bare ("15000"), vectors as "(9000, 40, 50)".
std::string to_string(const IntVec& v);
std::string to_string(const NatVec& v);
std::string to_string(const TTerm& t);

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const NatVec& v);
std::ostream& operator<<(std::ostream& os, const TTerm& t);

}  // namespace pacioli
