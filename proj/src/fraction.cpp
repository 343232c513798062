#include "pacioli/fraction.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace pacioli {

Fraction::Fraction(Integer numerator, Integer denominator)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)) {
  if (numerator_ < 1 || denominator_ < 1) {
    throw std::domain_error("fraction entries must be positive integers");
  }
}

Fraction operator*(const Fraction& a, const Fraction& b) {
  return Fraction(a.numerator() * b.numerator(),
                  a.denominator() * b.denominator());
}

bool group_equal(const Fraction& a, const Fraction& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

Fraction invert(const Fraction& a) {
  return Fraction(a.denominator(), a.numerator());
}

Integer euclid_gcd(Integer a, Integer b) {
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Fraction reduce(const Fraction& a) {
  const Integer g = euclid_gcd(a.numerator(), a.denominator());
  return Fraction(a.numerator() / g, a.denominator() / g);
}

std::string to_string(const Fraction& f) {
  return "(" + f.numerator().str() + "/" + f.denominator().str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << to_string(f);
}

}  // namespace pacioli
