#include "pacioli/matrix.hpp"

#include <algorithm>

namespace pacioli {

namespace {

std::size_t position(const std::vector<std::string>& names, std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw TableError("account '" + std::string(name) + "' not in table");
  return static_cast<std::size_t>(it - names.begin());
}

std::vector<std::string> names_of(const Ledger& ledger) {
  std::vector<std::string> names;
  for (const Account& a : ledger.accounts()) names.push_back(a.name);
  return names;
}

}  // namespace

const Integer& TransactionsTable::at(std::string_view debited,
                                     std::string_view credited) const {
  return cells[position(account_names, debited)][position(account_names, credited)];
}

TransactionsTable build_table(const Journal& journal, const Ledger& ledger) {
  if (ledger.dimension() != 1) {
    throw TableError("transactions tables are scalar only; ledger has dimension " +
                     std::to_string(ledger.dimension()));
  }

  TransactionsTable table;
  table.account_names = names_of(ledger);
  const std::size_t m = table.account_names.size();
  table.cells.assign(m, std::vector<Integer>(m));

  for (std::size_t i = 0; i < journal.size(); ++i) {
    const JournalEntry& entry = journal[i];
    ValidationReport report = validate_entry(entry, ledger);
    if (!report.ok()) throw PostingError(i, entry.description, std::move(report));

    std::vector<std::string> debited;
    std::vector<std::string> credited;
    Integer amount = 0;
    for (const Posting& p : entry.postings) {
      auto& side = p.side == Side::debit ? debited : credited;
      if (std::find(side.begin(), side.end(), p.account) == side.end()) {
        side.push_back(p.account);
      }
      if (p.side == Side::debit) amount += p.amount[0];
    }
    if (debited.size() != 1 || credited.size() != 1) {
      throw TableError("entry " + std::to_string(i + 1) + " \"" + entry.description +
                       "\" is a compound transaction (" + std::to_string(debited.size()) +
                       " debited, " + std::to_string(credited.size()) +
                       " credited accounts); split it into simple transfers");
    }
    if (debited.front() == credited.front()) {
      table.warnings.push_back("entry " + std::to_string(i + 1) + " \"" +
                               entry.description + "\" debits and credits '" +
                               debited.front() + "' (diagonal cell)");
    }
    table.cells[position(table.account_names, debited.front())]
               [position(table.account_names, credited.front())] += amount;
  }
  return table;
}

TableSums table_sums(const TransactionsTable& table) {
  const std::size_t m = table.size();
  TableSums sums{std::vector<Integer>(m), std::vector<Integer>(m)};
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      sums.row_sums[i] += table.cells[i][j];
      sums.col_sums[j] += table.cells[i][j];
    }
  }
  return sums;
}

std::vector<NetChange> net_changes(const TransactionsTable& table, const Ledger& ledger) {
  if (table.account_names != names_of(ledger)) {
    throw TableError("table accounts do not match ledger accounts");
  }
  const TableSums sums = table_sums(table);
  std::vector<NetChange> out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const Account& a = ledger.accounts()[i];
    Integer change = a.role == AccountRole::debit_balance
                         ? sums.row_sums[i] - sums.col_sums[i]
                         : sums.col_sums[i] - sums.row_sums[i];
    out.push_back({a.name, a.role, std::move(change)});
  }
  return out;
}

bool consistency_check(const TransactionsTable& table, const Journal& journal,
                       const Ledger& ledger) {
  if (table.account_names != names_of(ledger)) return false;
  const TableSums sums = table_sums(table);
  for (std::size_t i = 0; i < table.size(); ++i) {
    TTerm journal_total = TTerm::zero(1);
    for (const JournalEntry& entry : journal) {
      for (const Posting& p : entry.postings) {
        if (p.account == table.account_names[i]) journal_total = journal_total + p.term();
      }
    }
    const TTerm from_table(NatVec{sums.row_sums[i]}, NatVec{sums.col_sums[i]});
    if (!group_equal(from_table, journal_total)) return false;
  }
  return true;
}

}  // namespace pacioli
