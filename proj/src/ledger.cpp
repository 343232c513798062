#include "pacioli/ledger.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

namespace pacioli {

std::string_view to_string(AccountRole role) {
  return role == AccountRole::debit_balance ? "dr" : "cr";
}

std::string_view to_string(Side side) {
  return side == Side::debit ? "dr" : "cr";
}

Ledger::Ledger(std::vector<std::string> unit_names, std::vector<Account> accounts)
    : unit_names_(std::move(unit_names)), accounts_(std::move(accounts)) {
  if (unit_names_.empty()) throw LedgerError("ledger dimension must be at least 1");
  std::set<std::string_view> units;
  for (const auto& u : unit_names_) {
    if (u.empty()) throw LedgerError("unit name must not be empty");
    if (!units.insert(u).second) throw LedgerError("duplicate unit name '" + u + "'");
  }
  std::set<std::string_view> seen;
  for (const Account& a : accounts_) {
    if (a.name.empty()) throw LedgerError("account name must not be empty");
    if (!seen.insert(a.name).second) {
      throw LedgerError("duplicate account '" + a.name + "'");
    }
    if (a.balance.dimension() != dimension()) {
      throw DimensionMismatch(dimension(), a.balance.dimension());
    }
  }
}

const Account* Ledger::find(std::string_view name) const {
  auto it = std::find_if(accounts_.begin(), accounts_.end(),
                         [&](const Account& a) { return a.name == name; });
  return it == accounts_.end() ? nullptr : &*it;
}

std::optional<std::size_t> Ledger::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < accounts_.size(); ++i) {
    if (accounts_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::string> default_unit_names(std::size_t dimension) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= dimension; ++i) names.push_back("u" + std::to_string(i));
  return names;
}

TTerm Posting::term() const {
  return side == Side::debit ? TTerm::debit_only(amount) : TTerm::credit_only(amount);
}

IntVec BalanceSheetEquation::lhs_total() const {
  IntVec total = IntVec::zero(dimension());
  for (const auto& t : lhs) total = total + t.value;
  return total;
}

IntVec BalanceSheetEquation::rhs_total() const {
  IntVec total = IntVec::zero(dimension());
  for (const auto& t : rhs) total = total + t.value;
  return total;
}

Ledger encode_equation(const BalanceSheetEquation& eq) {
  std::vector<Account> accounts;
  for (const auto& t : eq.lhs) {
    if (t.value.dimension() != eq.dimension()) {
      throw DimensionMismatch(eq.dimension(), t.value.dimension());
    }
    accounts.push_back({t.name, AccountRole::debit_balance, encode_debit(t.value)});
  }
  for (const auto& t : eq.rhs) {
    if (t.value.dimension() != eq.dimension()) {
      throw DimensionMismatch(eq.dimension(), t.value.dimension());
    }
    accounts.push_back({t.name, AccountRole::credit_balance, encode_credit(t.value)});
  }
  if (!eq.balanced()) {
    throw LedgerError("unbalanced equation: left side " + to_string(eq.lhs_total()) +
                      " != right side " + to_string(eq.rhs_total()));
  }
  return Ledger(eq.unit_names, std::move(accounts));
}

BalanceSheetEquation decode_equation(const Ledger& ledger) {
  BalanceSheetEquation eq{ledger.unit_names(), {}, {}};
  for (const Account& a : ledger.accounts()) {
    if (a.role == AccountRole::debit_balance) {
      eq.lhs.push_back({a.name, debit_value(a.balance)});
    } else {
      eq.rhs.push_back({a.name, credit_value(a.balance)});
    }
  }
  return eq;
}

std::vector<std::string> ValidationReport::errors() const {
  std::vector<std::string> out;
  if (too_few_postings) out.push_back("entry needs at least two postings");
  for (const auto& name : unknown_accounts) out.push_back("unknown account '" + name + "'");
  for (const auto& d : dimension_issues) {
    out.push_back("posting " + std::to_string(d.posting_index + 1) + " to '" + d.account +
                  "' has " + std::to_string(d.actual) + " components, expected " +
                  std::to_string(d.expected));
  }
  if (residual) {
    out.push_back("debits and credits differ: residual " + to_string(*residual) +
                  " is not a zero-account");
  }
  return out;
}

ValidationReport validate_entry(const JournalEntry& entry, const Ledger& ledger) {
  ValidationReport report;
  report.too_few_postings = entry.postings.size() < 2;

  TTerm total = TTerm::zero(ledger.dimension());
  std::set<std::string> debited;
  std::set<std::string> credited;
  for (std::size_t i = 0; i < entry.postings.size(); ++i) {
    const Posting& p = entry.postings[i];
    if (ledger.find(p.account) == nullptr &&
        std::find(report.unknown_accounts.begin(), report.unknown_accounts.end(),
                  p.account) == report.unknown_accounts.end()) {
      report.unknown_accounts.push_back(p.account);
    }
    if (p.amount.dimension() != ledger.dimension()) {
      report.dimension_issues.push_back(
          {i, p.account, ledger.dimension(), p.amount.dimension()});
      continue;
    }
    total = total + p.term();
    (p.side == Side::debit ? debited : credited).insert(p.account);
  }
  if (!is_zero_account(total)) report.residual = total;

  for (const auto& name : debited) {
    if (credited.count(name) != 0) {
      report.warnings.push_back("account '" + name + "' is both debited and credited");
    }
  }
  return report;
}

PostingError::PostingError(std::size_t entry_index, std::string description,
                           ValidationReport report)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "entry " << entry_index + 1 << " \"" << description << "\" is invalid";
        for (const auto& e : report.errors()) os << "; " << e;
        return os.str();
      }()),
      entry_index_(entry_index),
      description_(std::move(description)),
      report_(std::move(report)) {}

Ledger post(const Ledger& ledger, const Journal& journal) {
  for (std::size_t i = 0; i < journal.size(); ++i) {
    ValidationReport report = validate_entry(journal[i], ledger);
    if (!report.ok()) throw PostingError(i, journal[i].description, std::move(report));
  }

  std::vector<Account> accounts = ledger.accounts();
  for (const JournalEntry& entry : journal) {
    for (const Posting& p : entry.postings) {
      Account& a = accounts[*ledger.index_of(p.account)];
      a.balance = a.balance + p.term();
    }
  }
  return Ledger(ledger.unit_names(), std::move(accounts));
}

std::vector<std::pair<std::string, TTerm>> entry_effects(const JournalEntry& entry,
                                                         std::size_t dimension) {
  std::vector<std::pair<std::string, TTerm>> effects;
  for (const Posting& p : entry.postings) {
    auto it = std::find_if(effects.begin(), effects.end(),
                           [&](const auto& e) { return e.first == p.account; });
    if (it == effects.end()) {
      effects.emplace_back(p.account, TTerm::zero(dimension) + p.term());
    } else {
      it->second = it->second + p.term();
    }
  }
  return effects;
}

TTerm ledger_total(const Ledger& ledger) {
  TTerm total = TTerm::zero(ledger.dimension());
  for (const Account& a : ledger.accounts()) total = total + a.balance;
  return total;
}

TrialBalance trial_balance(const Ledger& ledger) {
  TTerm total = ledger_total(ledger);
  bool balanced = total.debit() == total.credit();
  return {total.debit(), total.credit(), balanced};
}

Ledger reduce_ledger(const Ledger& ledger) {
  std::vector<Account> accounts = ledger.accounts();
  for (Account& a : accounts) a.balance = reduce(a.balance);
  return Ledger(ledger.unit_names(), std::move(accounts));
}

ClosingResult close_nominal(const Ledger& ledger, std::string_view equity_account) {
  const Account* equity = ledger.find(equity_account);
  if (equity == nullptr) {
    throw LedgerError("unknown equity account '" + std::string(equity_account) + "'");
  }
  if (equity->nominal) {
    throw LedgerError("equity account '" + equity->name + "' is nominal");
  }
  if (equity->role != AccountRole::credit_balance) {
    throw LedgerError("equity account '" + equity->name + "' is not credit-balance");
  }

  Journal entries;
  for (const Account& a : ledger.accounts()) {
    if (!a.nominal) continue;
    const TTerm r = reduce(a.balance);
    if (is_zero_account(r)) continue;

    // Post the negation of the nominal balance to the nominal account and the
    // balance itself to equity.
    JournalEntry entry{"Close " + a.name + " into " + equity->name, {}};
    if (!r.debit().is_zero()) {
      entry.postings.push_back({a.name, Side::credit, r.debit()});
    }
    if (!r.credit().is_zero()) {
      entry.postings.push_back({a.name, Side::debit, r.credit()});
    }
    if (!r.debit().is_zero()) {
      entry.postings.push_back({equity->name, Side::debit, r.debit()});
    }
    if (!r.credit().is_zero()) {
      entry.postings.push_back({equity->name, Side::credit, r.credit()});
    }
    entries.push_back(std::move(entry));
  }
  Ledger closed = post(ledger, entries);
  return {std::move(closed), std::move(entries)};
}

}  // namespace pacioli
