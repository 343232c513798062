#pragma once

// Price-vector valuation. The scalar product of a price vector with a
// property vector gives its value, collapsing a vector ledger to a scalar one.

#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pacioli/algebra.hpp"
#include "pacioli/ledger.hpp"

namespace pacioli {

using Rational = boost::multiprecision::cpp_rational;

class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-negative exact per-unit prices.
class PriceVector {
 public:
  /// Throws ValuationError on a negative price or an empty list.
  explicit PriceVector(std::vector<Rational> prices);

  std::size_t dimension() const noexcept { return prices_.size(); }
  const Rational& operator[](std::size_t i) const { return prices_[i]; }

  /// e_i: price 1 for unit i, 0 elsewhere.
  static PriceVector basis(std::size_t dimension, std::size_t i);

 private:
  std::vector<Rational> prices_;
};

Rational dot_value(const PriceVector& prices, const IntVec& x);
Rational dot_value(const PriceVector& prices, const NatVec& x);

/// Values each account's reduced signed balance and re-encodes it per role
/// into a one-unit ledger named `unit_name`. Throws ValuationError if a
/// valued balance is not a whole number, DimensionMismatch on a price vector
/// of the wrong length.
Ledger value_ledger(const Ledger& ledger, const PriceVector& prices,
                    std::string unit_name = "value");

/// Scalar journal whose posting amounts are the valued vector amounts.
Journal value_journal(const Journal& journal, const PriceVector& prices);

}  // namespace pacioli
