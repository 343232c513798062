#pragma once

// Multiplicative counterpart of the T-term group: fractions over the positive
// integers. Two fractions are equal in the group when their cross-multiples
// agree; operator== compares the stored pair exactly.

#include <iosfwd>
#include <string>

#include "pacioli/algebra.hpp"

namespace pacioli {

class Fraction {
 public:
  /// Throws std::domain_error unless both entries are >= 1.
  Fraction(Integer numerator, Integer denominator);

  static Fraction one() { return Fraction(1, 1); }

  const Integer& numerator() const noexcept { return numerator_; }
  const Integer& denominator() const noexcept { return denominator_; }

  friend bool operator==(const Fraction&, const Fraction&) = default;

 private:
  Integer numerator_;
  Integer denominator_;
};

Fraction operator*(const Fraction& a, const Fraction& b);

/// a.n * b.d == b.n * a.d
bool group_equal(const Fraction& a, const Fraction& b);

Fraction invert(const Fraction& a);

/// Lowest terms.
Fraction reduce(const Fraction& a);

/// Euclid's algorithm on positive integers.
Integer euclid_gcd(Integer a, Integer b);

std::string to_string(const Fraction& f);
std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace pacioli
