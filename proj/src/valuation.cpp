#include "pacioli/valuation.hpp"

#include <utility>

namespace pacioli {

namespace {

Integer whole(const Rational& r, const std::string& what) {
  if (boost::multiprecision::denominator(r) != 1) {
    throw ValuationError(what + " values to " + r.str() + ", which is not a whole number");
  }
  return boost::multiprecision::numerator(r);
}

template <typename Vec>
Rational dot(const PriceVector& prices, const Vec& x) {
  if (prices.dimension() != x.dimension()) {
    throw DimensionMismatch(x.dimension(), prices.dimension());
  }
  Rational total = 0;
  for (std::size_t i = 0; i < x.dimension(); ++i) total += prices[i] * Rational(x[i]);
  return total;
}

}  // namespace

PriceVector::PriceVector(std::vector<Rational> prices) : prices_(std::move(prices)) {
  if (prices_.empty()) throw ValuationError("price vector must not be empty");
  for (const Rational& p : prices_) {
    if (p < 0) throw ValuationError("price " + p.str() + " is negative");
  }
}

PriceVector PriceVector::basis(std::size_t dimension, std::size_t i) {
  std::vector<Rational> prices(dimension);
  prices.at(i) = 1;
  return PriceVector(std::move(prices));
}

Rational dot_value(const PriceVector& prices, const IntVec& x) { return dot(prices, x); }
Rational dot_value(const PriceVector& prices, const NatVec& x) { return dot(prices, x); }

Ledger value_ledger(const Ledger& ledger, const PriceVector& prices, std::string unit_name) {
  if (prices.dimension() != ledger.dimension()) {
    throw DimensionMismatch(ledger.dimension(), prices.dimension());
  }
  std::vector<Account> accounts;
  for (const Account& a : ledger.accounts()) {
    const TTerm reduced = reduce(a.balance);
    TTerm valued;
    if (a.role == AccountRole::debit_balance) {
      valued = encode_debit(IntVec{whole(dot(prices, debit_value(reduced)), "account '" + a.name + "'")});
    } else {
      valued = encode_credit(IntVec{whole(dot(prices, credit_value(reduced)), "account '" + a.name + "'")});
    }
    accounts.push_back({a.name, a.role, std::move(valued), a.nominal});
  }
  return Ledger({std::move(unit_name)}, std::move(accounts));
}

Journal value_journal(const Journal& journal, const PriceVector& prices) {
  Journal out;
  for (const JournalEntry& entry : journal) {
    JournalEntry valued{entry.description, {}};
    for (const Posting& p : entry.postings) {
      valued.postings.push_back(
          {p.account, p.side,
           NatVec{whole(dot(prices, p.amount), "posting to '" + p.account + "'")}});
    }
    out.push_back(std::move(valued));
  }
  return out;
}

}  // namespace pacioli
