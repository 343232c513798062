#pragma once

// Scalar transactions table: an M x M grid where cell (i, j) holds the amount
// debited to account i and credited to account j. Row i therefore collects
// all debits to account i and column i all of its credits. Only simple
// transfers between two accounts fit in a cell, and only dimension 1.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pacioli/ledger.hpp"

namespace pacioli {

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransactionsTable {
  std::vector<std::string> account_names;
  std::vector<std::vector<Integer>> cells;  // cells[debited][credited]
  std::vector<std::string> warnings;

  std::size_t size() const noexcept { return account_names.size(); }
  const Integer& at(std::string_view debited, std::string_view credited) const;
};

struct TableSums {
  std::vector<Integer> row_sums;  // total debits per account
  std::vector<Integer> col_sums;  // total credits per account
};

struct NetChange {
  std::string account;
  AccountRole role;
  Integer change;
};

/// Throws TableError for a non-scalar ledger or an entry that is not a simple
/// transfer (one debited account, one credited account, equal amounts), and
/// PostingError for an entry that fails validation.
TransactionsTable build_table(const Journal& journal, const Ledger& ledger);

TableSums table_sums(const TransactionsTable& table);

/// Debit-balance accounts net as row - column, credit-balance accounts as
/// column - row. Throws TableError if the table and ledger list different
/// accounts.
std::vector<NetChange> net_changes(const TransactionsTable& table, const Ledger& ledger);

/// True when every account's [row sum // column sum] equals, as a group
/// element, the sum of that account's T-terms across the journal.
bool consistency_check(const TransactionsTable& table, const Journal& journal,
                       const Ledger& ledger);

}  // namespace pacioli
