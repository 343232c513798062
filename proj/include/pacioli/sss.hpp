#pragma once

// Single-sided accounts holding signed vectors, obtained from the double-entry
// ledger through the debit isomorphism [x // y] -> x - y. A ledger becomes a
// row of signed balances summing to zero, and each journal entry becomes a
// signed row summing to zero.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pacioli/algebra.hpp"
#include "pacioli/ledger.hpp"

namespace pacioli {

struct SignedAccount {
  std::string name;
  AccountRole role = AccountRole::debit_balance;  // kept for rendering A = L + E
  IntVec balance;

  friend bool operator==(const SignedAccount&, const SignedAccount&) = default;
};

struct SignedLedger {
  std::vector<std::string> unit_names;
  std::vector<SignedAccount> accounts;

  std::size_t dimension() const noexcept { return unit_names.size(); }
  std::vector<IntVec> balances() const;

  friend bool operator==(const SignedLedger&, const SignedLedger&) = default;
};

/// One signed amount per affected account.
struct SignedRow {
  std::string description;
  std::vector<std::pair<std::string, IntVec>> amounts;

  std::vector<IntVec> values() const;

  friend bool operator==(const SignedRow&, const SignedRow&) = default;
};

class SignedPostingError : public std::runtime_error {
 public:
  SignedPostingError(std::size_t row_index, const std::string& what);
  std::size_t row_index() const noexcept { return row_index_; }

 private:
  std::size_t row_index_;
};

/// True when the signed vectors sum to zero. An empty row is a zero-row.
/// Throws DimensionMismatch if the vectors differ in length.
bool zero_row_check(const std::vector<IntVec>& row);

SignedLedger to_signed(const Ledger& ledger);

/// Same, through the credit isomorphism instead.
SignedLedger to_signed_credit(const Ledger& ledger);

/// Throws PostingError if any entry fails validation against `ledger`.
std::vector<SignedRow> journal_to_signed(const Journal& journal, const Ledger& ledger);

/// Adds each row to the named balances. Rows are checked up front; a row
/// that is not a zero-row, names an unknown account, or has the wrong
/// dimension raises SignedPostingError and nothing is applied.
SignedLedger signed_post(const SignedLedger& ledger, const std::vector<SignedRow>& rows);

/// Puts A - L - E = 0 back into A = L + E form: debit-balance accounts on the
/// left, credit-balance accounts negated on the right.
BalanceSheetEquation to_equation(const SignedLedger& ledger);

}  // namespace pacioli
