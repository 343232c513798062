#include "pacioli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>

#include "pacioli/io.hpp"
#include "pacioli/ledger.hpp"
#include "pacioli/matrix.hpp"
#include "pacioli/sss.hpp"
#include "pacioli/valuation.hpp"

namespace pacioli {

namespace {

// Unreadable input: I/O failures and parse errors, tagged with the file.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw InputError("error writing '" + path + "'");
}

Ledger load_ledger(const std::string& path, LedgerParseOptions options = {}) {
  const std::string text = read_file(path);
  try {
    return parse_ledger(text, options);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  }
}

JournalFile load_journal(const std::string& path, const Ledger& ledger) {
  const std::string text = read_file(path);
  JournalFile file;
  try {
    file = parse_journal(text);
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  if (file.dimension != ledger.dimension()) {
    throw InputError(path + ": journal dimension " + std::to_string(file.dimension) +
                     " does not match ledger dimension " + std::to_string(ledger.dimension()));
  }
  return file;
}

// Left-aligned first column, right-aligned rest.
std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) widths[j] = std::max(widths[j], row[j].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t j = 0; j < row.size(); ++j) {
      std::ostringstream cell;
      if (j == 0) {
        cell << std::left << std::setw(static_cast<int>(widths[j])) << row[j];
      } else {
        cell << "  " << std::right << std::setw(static_cast<int>(widths[j])) << row[j];
      }
      line += cell.str();
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

std::string render_accounts(const Ledger& ledger) {
  std::vector<std::vector<std::string>> rows;
  for (const Account& a : ledger.accounts()) {
    std::string role = a.role == AccountRole::debit_balance ? "debit-balance" : "credit-balance";
    if (a.nominal) role += ", nominal";
    rows.push_back({a.name, "(" + role + ")", to_string(a.balance)});
  }
  return render_grid(rows);
}

std::string render_trial_balance(const TrialBalance& tb) {
  std::ostringstream os;
  os << "debit total:  " << tb.debit_total << '\n';
  os << "credit total: " << tb.credit_total << '\n';
  os << (tb.balanced ? "BALANCED" : "UNBALANCED") << '\n';
  return os.str();
}

Rational parse_price(const std::string& text) {
  static const std::regex pattern(R"(\d+(/[1-9]\d*)?)");
  if (!std::regex_match(text, pattern)) {
    throw ValuationError("'" + text + "' is not a non-negative integer or fraction p/q");
  }
  return Rational(text);
}

int cmd_validate(const std::string& ledger_path, const std::string& journal_path,
                 std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path);
  const JournalFile journal = load_journal(journal_path, ledger);
  std::size_t invalid = 0;
  for (std::size_t i = 0; i < journal.entries.size(); ++i) {
    const JournalEntry& entry = journal.entries[i];
    const ValidationReport report = validate_entry(entry, ledger);
    out << "entry " << i + 1 << " \"" << entry.description << "\": "
        << (report.ok() ? "OK" : "INVALID") << '\n';
    for (const auto& e : report.errors()) out << "  error: " << e << '\n';
    for (const auto& w : report.warnings) out << "  warning: " << w << '\n';
    if (!report.ok()) ++invalid;
  }
  out << journal.entries.size() << " entries, " << invalid << " invalid\n";
  return invalid == 0 ? kExitOk : kExitValidation;
}

int cmd_post(const std::string& ledger_path, const std::string& journal_path,
             const std::string& out_path, std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path);
  const JournalFile journal = load_journal(journal_path, ledger);
  const Ledger ending = reduce_ledger(post(ledger, journal.entries));
  const std::string text = render_ledger(ending);
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
    out << "posted " << journal.entries.size() << " entries to " << out_path << '\n';
  }
  return kExitOk;
}

int cmd_trial_balance(const std::string& ledger_path, std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path, {.require_balanced = false});
  const TrialBalance tb = trial_balance(ledger);
  out << render_trial_balance(tb);
  return tb.balanced ? kExitOk : kExitValidation;
}

int cmd_report(const std::string& ledger_path, std::ostream& out) {
  const Ledger reduced = reduce_ledger(load_ledger(ledger_path));
  out << render_accounts(reduced) << '\n' << render_balance_sheet(decode_equation(reduced));
  return kExitOk;
}

int cmd_matrix(const std::string& ledger_path, const std::string& journal_path,
               std::ostream& out, std::ostream& err) {
  const Ledger ledger = load_ledger(ledger_path);
  const JournalFile journal = load_journal(journal_path, ledger);
  const TransactionsTable table = build_table(journal.entries, ledger);
  const TableSums sums = table_sums(table);

  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"Dr.\\Cr."};
  for (const auto& name : table.account_names) header.push_back(name);
  header.push_back("Row sum");
  rows.push_back(header);
  Integer grand = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::vector<std::string> row{table.account_names[i]};
    for (const Integer& cell : table.cells[i]) row.push_back(cell.str());
    row.push_back(sums.row_sums[i].str());
    grand += sums.row_sums[i];
    rows.push_back(row);
  }
  std::vector<std::string> footer{"Col sum"};
  for (const Integer& c : sums.col_sums) footer.push_back(c.str());
  footer.push_back(grand.str());
  rows.push_back(footer);
  out << render_grid(rows);

  out << "\nnet changes:\n";
  const auto changes = net_changes(table, ledger);
  for (std::size_t i = 0; i < changes.size(); ++i) {
    const NetChange& c = changes[i];
    const Account& a = ledger.accounts()[i];
    const bool debit = c.role == AccountRole::debit_balance;
    const Integer begin = (debit ? debit_value(a.balance) : credit_value(a.balance))[0];
    out << "  " << c.account << " (" << (debit ? "debit" : "credit") << "-balance): ";
    if (debit) {
      out << "row " << sums.row_sums[i] << " - col " << sums.col_sums[i];
    } else {
      out << "col " << sums.col_sums[i] << " - row " << sums.row_sums[i];
    }
    out << " = " << c.change << "; " << begin << " + (" << c.change << ") = "
        << begin + c.change << '\n';
  }
  for (const auto& w : table.warnings) err << "warning: " << w << '\n';
  const bool consistent = consistency_check(table, journal.entries, ledger);
  out << "consistent with journal T-terms: " << (consistent ? "yes" : "no") << '\n';
  return consistent ? kExitOk : kExitValidation;
}

std::vector<std::string> signed_cells(const std::vector<std::string>& names,
                                      const std::vector<std::pair<std::string, IntVec>>& amounts) {
  std::vector<std::string> cells;
  for (const auto& name : names) {
    auto it = std::find_if(amounts.begin(), amounts.end(),
                           [&](const auto& a) { return a.first == name; });
    cells.push_back(it == amounts.end() ? "" : to_string(it->second));
  }
  return cells;
}

std::vector<std::pair<std::string, IntVec>> named_balances(const SignedLedger& ledger) {
  std::vector<std::pair<std::string, IntVec>> out;
  for (const auto& a : ledger.accounts) out.emplace_back(a.name, a.balance);
  return out;
}

int cmd_sss(const std::string& ledger_path, const std::string& journal_path,
            std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path);
  const SignedLedger beginning = to_signed(ledger);
  std::vector<std::string> names;
  for (const auto& a : beginning.accounts) names.push_back(a.name);

  std::vector<std::vector<std::string>> rows;
  auto add_row = [&](std::string label, std::vector<std::string> cells) {
    cells.insert(cells.begin(), std::move(label));
    rows.push_back(std::move(cells));
  };
  std::vector<std::string> header = names;
  add_row("", header);
  add_row("beginning", signed_cells(names, named_balances(beginning)));

  SignedLedger ending = beginning;
  bool equivalent = true;
  if (!journal_path.empty()) {
    const JournalFile journal = load_journal(journal_path, ledger);
    const auto signed_rows = journal_to_signed(journal.entries, ledger);
    for (std::size_t i = 0; i < signed_rows.size(); ++i) {
      add_row(std::to_string(i + 1) + ". " + signed_rows[i].description,
              signed_cells(names, signed_rows[i].amounts));
    }
    ending = signed_post(beginning, signed_rows);
    add_row("ending", signed_cells(names, named_balances(ending)));
    equivalent = to_signed(post(ledger, journal.entries)) == ending;
  }
  out << render_grid(rows) << '\n';

  const bool zero_row = zero_row_check(ending.balances());
  out << "zero-row: " << (zero_row ? "yes" : "no") << '\n';
  if (!journal_path.empty()) {
    out << "matches double-entry posting: " << (equivalent ? "yes" : "no") << '\n';
  }
  out << '\n' << render_balance_sheet(to_equation(ending));
  return zero_row && equivalent ? kExitOk : kExitValidation;
}

int cmd_value(const std::string& ledger_path, const std::vector<std::string>& price_text,
              std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path);
  std::vector<Rational> prices;
  for (const auto& p : price_text) prices.push_back(parse_price(p));
  if (prices.size() != ledger.dimension()) {
    throw ValuationError("expected " + std::to_string(ledger.dimension()) + " prices, got " +
                         std::to_string(prices.size()));
  }
  const Ledger valued = value_ledger(ledger, PriceVector(std::move(prices)));
  out << render_accounts(valued) << '\n' << render_balance_sheet(decode_equation(valued));
  return kExitOk;
}

int cmd_close(const std::string& ledger_path, const std::string& equity,
              const std::string& out_path, std::ostream& out) {
  const Ledger ledger = load_ledger(ledger_path);
  const ClosingResult result = close_nominal(ledger, equity);
  const std::string ledger_text = render_ledger(reduce_ledger(result.ledger));
  out << render_journal(result.entries, ledger.dimension());
  if (out_path.empty()) {
    out << '\n' << ledger_text;
  } else {
    write_file(out_path, ledger_text);
  }
  return kExitOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Double-entry bookkeeping in the group of differences", "pacioli"};
  app.require_subcommand(1, 1);

  std::string ledger_path;
  std::string journal_path;
  std::string out_path;
  std::string equity;
  std::vector<std::string> prices;

  auto* validate = app.add_subcommand("validate", "Check each journal entry against a ledger");
  validate->add_option("--ledger", ledger_path, "Ledger file")->required();
  validate->add_option("--journal", journal_path, "Journal file")->required();

  auto* post_cmd = app.add_subcommand("post", "Post a journal and write the reduced ending ledger");
  post_cmd->add_option("--ledger", ledger_path, "Ledger file")->required();
  post_cmd->add_option("--journal", journal_path, "Journal file")->required();
  post_cmd->add_option("--out", out_path, "Output ledger file (default: stdout)");

  auto* tb = app.add_subcommand("trial-balance", "Sum debit and credit sides of a ledger");
  tb->add_option("--ledger", ledger_path, "Ledger file")->required();

  auto* report = app.add_subcommand("report", "Reduced accounts and decoded balance sheet");
  report->add_option("--ledger", ledger_path, "Ledger file")->required();

  auto* matrix = app.add_subcommand("matrix", "Scalar transactions table");
  matrix->add_option("--ledger", ledger_path, "Ledger file")->required();
  matrix->add_option("--journal", journal_path, "Journal file")->required();

  auto* sss = app.add_subcommand("sss", "Single-sided signed view");
  sss->add_option("--ledger", ledger_path, "Ledger file")->required();
  sss->add_option("--journal", journal_path, "Journal file");

  auto* value = app.add_subcommand("value", "Value a vector ledger with a price vector");
  value->add_option("--ledger", ledger_path, "Ledger file")->required();
  value->add_option("--prices", prices, "One price per unit, integer or p/q")
      ->required()
      ->expected(1, -1);

  auto* close = app.add_subcommand("close", "Close nominal accounts into equity");
  close->add_option("--ledger", ledger_path, "Ledger file")->required();
  close->add_option("--equity", equity, "Equity account")->required();
  close->add_option("--out", out_path, "Output ledger file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(ledger_path, journal_path, out);
    if (post_cmd->parsed()) return cmd_post(ledger_path, journal_path, out_path, out);
    if (tb->parsed()) return cmd_trial_balance(ledger_path, out);
    if (report->parsed()) return cmd_report(ledger_path, out);
    if (matrix->parsed()) return cmd_matrix(ledger_path, journal_path, out, err);
    if (sss->parsed()) return cmd_sss(ledger_path, journal_path, out);
    if (value->parsed()) return cmd_value(ledger_path, prices, out);
    if (close->parsed()) return cmd_close(ledger_path, equity, out_path, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace pacioli
