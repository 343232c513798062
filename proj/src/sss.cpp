#include "pacioli/sss.hpp"

#include <algorithm>

namespace pacioli {

std::vector<IntVec> SignedLedger::balances() const {
  std::vector<IntVec> out;
  for (const auto& a : accounts) out.push_back(a.balance);
  return out;
}

std::vector<IntVec> SignedRow::values() const {
  std::vector<IntVec> out;
  for (const auto& [name, v] : amounts) out.push_back(v);
  return out;
}

SignedPostingError::SignedPostingError(std::size_t row_index, const std::string& what)
    : std::runtime_error("row " + std::to_string(row_index + 1) + ": " + what),
      row_index_(row_index) {}

bool zero_row_check(const std::vector<IntVec>& row) {
  if (row.empty()) return true;
  IntVec total = IntVec::zero(row.front().dimension());
  for (const IntVec& v : row) total = total + v;
  return total.is_zero();
}

SignedLedger to_signed(const Ledger& ledger) {
  SignedLedger out{ledger.unit_names(), {}};
  for (const Account& a : ledger.accounts()) {
    out.accounts.push_back({a.name, a.role, debit_value(a.balance)});
  }
  return out;
}

SignedLedger to_signed_credit(const Ledger& ledger) {
  SignedLedger out{ledger.unit_names(), {}};
  for (const Account& a : ledger.accounts()) {
    out.accounts.push_back({a.name, a.role, credit_value(a.balance)});
  }
  return out;
}

std::vector<SignedRow> journal_to_signed(const Journal& journal, const Ledger& ledger) {
  std::vector<SignedRow> rows;
  for (std::size_t i = 0; i < journal.size(); ++i) {
    ValidationReport report = validate_entry(journal[i], ledger);
    if (!report.ok()) throw PostingError(i, journal[i].description, std::move(report));

    SignedRow row{journal[i].description, {}};
    for (auto& [name, term] : entry_effects(journal[i], ledger.dimension())) {
      row.amounts.emplace_back(name, debit_value(term));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

SignedLedger signed_post(const SignedLedger& ledger, const std::vector<SignedRow>& rows) {
  auto index_of = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < ledger.accounts.size(); ++i) {
      if (ledger.accounts[i].name == name) return i;
    }
    return std::nullopt;
  };

  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& [name, v] : rows[r].amounts) {
      if (!index_of(name)) throw SignedPostingError(r, "unknown account '" + name + "'");
      if (v.dimension() != ledger.dimension()) {
        throw SignedPostingError(r, "amount for '" + name + "' has " +
                                        std::to_string(v.dimension()) +
                                        " components, expected " +
                                        std::to_string(ledger.dimension()));
      }
    }
    if (!zero_row_check(rows[r].values())) {
      throw SignedPostingError(r, "row does not sum to zero");
    }
  }

  SignedLedger out = ledger;
  for (const SignedRow& row : rows) {
    for (const auto& [name, v] : row.amounts) {
      auto& balance = out.accounts[*index_of(name)].balance;
      balance = balance + v;
    }
  }
  return out;
}

BalanceSheetEquation to_equation(const SignedLedger& ledger) {
  BalanceSheetEquation eq{ledger.unit_names, {}, {}};
  for (const auto& a : ledger.accounts) {
    if (a.role == AccountRole::debit_balance) {
      eq.lhs.push_back({a.name, a.balance});
    } else {
      eq.rhs.push_back({a.name, -a.balance});
    }
  }
  return eq;
}

}  // namespace pacioli
