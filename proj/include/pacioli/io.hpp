#pragma once

// Line-oriented ledger and journal files.
//
//   pacioli-ledger v1
//   dimension 3
//   units cash widgets half-widgets
//   account Assets dr 9000 40 50 // 0 0 0
//   account Revenue cr nominal 0 0 0 // 0 0 0
//
//   pacioli-journal v1
//   dimension 1
//   entry "Inputs used up"
//   cr Assets 1200
//   dr Equity 1200
//   end
//
// `#` starts a comment (outside a quoted description). Amounts are base-10
// unsigned integer literals, exactly `dimension` of them per side.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pacioli/ledger.hpp"

namespace pacioli {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const noexcept { return line_; }
  /// The message without the line prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

struct LedgerParseOptions {
  /// Reject a ledger whose balances do not sum to a zero-account.
  bool require_balanced = true;
};

/// Throws ParseError. An unbalanced ledger is reported with its residual and
/// the line of the last account.
Ledger parse_ledger(std::string_view text, LedgerParseOptions options = {});

struct JournalFile {
  std::size_t dimension = 0;
  Journal entries;
};

/// Checks shape only; whether entries balance is left to validate_entry.
JournalFile parse_journal(std::string_view text);

std::string render_ledger(const Ledger& ledger);
std::string render_journal(const Journal& journal, std::size_t dimension);

/// Two lines: account names joined by " = " and " + ", then their values.
/// An empty equation renders as "(empty)".
std::string render_balance_sheet(const BalanceSheetEquation& eq);

}  // namespace pacioli
