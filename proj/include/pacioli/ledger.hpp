#pragma once

// Double-entry bookkeeping on top of the T-term group.
//
// A balance-sheet equation is encoded as a Ledger whose account balances sum
// to a zero-account. Journal entries are transaction zero-terms; posting adds
// them to the ledger, which keeps the sum a zero-account. Balances hold raw
// accumulated totals until reduce_ledger is applied.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pacioli/algebra.hpp"

namespace pacioli {

enum class AccountRole { debit_balance, credit_balance };

enum class Side { debit, credit };

std::string_view to_string(AccountRole role);
std::string_view to_string(Side side);

struct Account {
  std::string name;
  AccountRole role = AccountRole::debit_balance;
  TTerm balance;
  bool nominal = false;

  friend bool operator==(const Account&, const Account&) = default;
};

class LedgerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Ordered list of uniquely named accounts sharing one dimension.
///
/// Construction checks names and dimensions only. Whether the balances sum to
/// a zero-account is a property checked by trial_balance, since an unbalanced
/// ledger is exactly what a trial balance has to be able to report.
class Ledger {
 public:
  /// Throws LedgerError on empty/duplicate names or a unit list whose length
  /// differs from the dimension, DimensionMismatch on a balance of the wrong
  /// dimension.
  Ledger(std::vector<std::string> unit_names, std::vector<Account> accounts = {});

  std::size_t dimension() const noexcept { return unit_names_.size(); }
  const std::vector<std::string>& unit_names() const noexcept { return unit_names_; }
  const std::vector<Account>& accounts() const noexcept { return accounts_; }

  const Account* find(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Ledger&, const Ledger&) = default;

 private:
  std::vector<std::string> unit_names_;
  std::vector<Account> accounts_;
};

/// Default unit labels "u1", ..., "un".
std::vector<std::string> default_unit_names(std::size_t dimension);

struct Posting {
  std::string account;
  Side side = Side::debit;
  NatVec amount;

  /// dr -> [amount // 0], cr -> [0 // amount]
  TTerm term() const;

  friend bool operator==(const Posting&, const Posting&) = default;
};

struct JournalEntry {
  std::string description;
  std::vector<Posting> postings;

  friend bool operator==(const JournalEntry&, const JournalEntry&) = default;
};

using Journal = std::vector<JournalEntry>;

struct NamedTerm {
  std::string name;
  IntVec value;

  friend bool operator==(const NamedTerm&, const NamedTerm&) = default;
};

/// lhs[0] + ... = rhs[0] + ...
struct BalanceSheetEquation {
  std::vector<std::string> unit_names;
  std::vector<NamedTerm> lhs;
  std::vector<NamedTerm> rhs;

  std::size_t dimension() const noexcept { return unit_names.size(); }
  bool empty() const noexcept { return lhs.empty() && rhs.empty(); }
  IntVec lhs_total() const;
  IntVec rhs_total() const;
  bool balanced() const { return lhs_total() == rhs_total(); }

  friend bool operator==(const BalanceSheetEquation&,
                         const BalanceSheetEquation&) = default;
};

/// LHS terms become debit-balance accounts, RHS terms credit-balance accounts.
/// Throws LedgerError if the equation does not balance or names repeat.
Ledger encode_equation(const BalanceSheetEquation& eq);

/// Debit-balance accounts decode to the LHS as debit - credit, credit-balance
/// accounts to the RHS as credit - debit. Nominal accounts are included on
/// the side matching their role.
BalanceSheetEquation decode_equation(const Ledger& ledger);

struct DimensionIssue {
  std::size_t posting_index;
  std::string account;
  std::size_t expected;
  std::size_t actual;

  friend bool operator==(const DimensionIssue&, const DimensionIssue&) = default;
};

struct ValidationReport {
  std::vector<std::string> unknown_accounts;
  std::vector<DimensionIssue> dimension_issues;
  /// Sum of the well-formed postings when it is not a zero-account.
  std::optional<TTerm> residual;
  bool too_few_postings = false;
  /// Non-fatal observations, e.g. one account both debited and credited.
  std::vector<std::string> warnings;

  bool ok() const noexcept {
    return unknown_accounts.empty() && dimension_issues.empty() &&
           !residual.has_value() && !too_few_postings;
  }
  /// One problem per line; empty when ok().
  std::vector<std::string> errors() const;
};

ValidationReport validate_entry(const JournalEntry& entry, const Ledger& ledger);

class PostingError : public std::runtime_error {
 public:
  PostingError(std::size_t entry_index, std::string description,
               ValidationReport report);

  /// Zero-based position of the offending entry in the journal.
  std::size_t entry_index() const noexcept { return entry_index_; }
  const std::string& description() const noexcept { return description_; }
  const ValidationReport& report() const noexcept { return report_; }

 private:
  std::size_t entry_index_;
  std::string description_;
  ValidationReport report_;
};

/// Adds every posting's T-term to its account, entry by entry. All entries are
/// validated first; on the first invalid one a PostingError is thrown and no
/// entry is applied.
Ledger post(const Ledger& ledger, const Journal& journal);

/// Net T-term a single entry contributes to each account, in order of first
/// appearance within the entry.
std::vector<std::pair<std::string, TTerm>> entry_effects(const JournalEntry& entry,
                                                         std::size_t dimension);

struct TrialBalance {
  NatVec debit_total;
  NatVec credit_total;
  bool balanced = false;
};

TrialBalance trial_balance(const Ledger& ledger);

/// Sum of all account balances.
TTerm ledger_total(const Ledger& ledger);

Ledger reduce_ledger(const Ledger& ledger);

struct ClosingResult {
  Ledger ledger;
  Journal entries;
};

/// Transfers each nominal account's reduced balance into `equity_account`
/// with one closing entry per non-zero nominal account, then posts them.
/// Throws LedgerError if the equity account is missing, nominal, or not
/// credit-balance.
ClosingResult close_nominal(const Ledger& ledger, std::string_view equity_account);

}  // namespace pacioli
