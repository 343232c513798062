#include "pacioli/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace pacioli {

namespace {

constexpr std::string_view kLedgerMagic = "pacioli-ledger v1";
constexpr std::string_view kJournalMagic = "pacioli-journal v1";

struct Token {
  std::string text;
  bool quoted = false;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line, std::size_t number) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char ch = line[i];
    if (ch == '#') break;
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    if (ch == '"') {
      const std::size_t close = line.find('"', i + 1);
      if (close == std::string_view::npos) throw ParseError(number, "unterminated quoted string");
      tokens.push_back({std::string(line.substr(i + 1, close - i - 1)), true});
      i = close + 1;
      if (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) &&
          line[i] != '#') {
        throw ParseError(number, "expected whitespace after closing quote");
      }
      continue;
    }
    std::size_t end = i;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) &&
           line[end] != '#' && line[end] != '"') {
      ++end;
    }
    tokens.push_back({std::string(line.substr(i, end - i)), false});
    i = end;
  }
  return tokens;
}

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    auto tokens = tokenize(raw, number);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

std::string joined(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t.text;
  }
  return out;
}

void expect_magic(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError(1, "missing header '" + std::string(magic) + "'");
  if (joined(lines.front().tokens) != magic) {
    throw ParseError(lines.front().number,
                     "expected header '" + std::string(magic) + "'");
  }
}

bool is_keyword(const Token& t, std::string_view word) {
  return !t.quoted && t.text == word;
}

Integer parse_unsigned(const Token& t, std::size_t line) {
  if (t.quoted || t.text.empty() ||
      !std::all_of(t.text.begin(), t.text.end(),
                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError(line, "'" + t.text + "' is not an unsigned integer");
  }
  return Integer(t.text);
}

std::size_t parse_dimension(const Line& line) {
  if (line.tokens.size() != 2 || !is_keyword(line.tokens[0], "dimension")) {
    throw ParseError(line.number, "expected 'dimension <n>'");
  }
  const Integer n = parse_unsigned(line.tokens[1], line.number);
  if (n < 1 || n > 1'000'000) throw ParseError(line.number, "dimension must be positive");
  return static_cast<std::size_t>(n);
}

void check_name(const Token& t, std::size_t line, std::string_view what) {
  if (t.quoted || t.text.empty()) {
    throw ParseError(line, std::string(what) + " name must be a bare word");
  }
}

NatVec parse_amount(const std::vector<Token>& tokens, std::size_t first, std::size_t last,
                    std::size_t dimension, std::size_t line) {
  if (last - first != dimension) {
    throw ParseError(line, "expected " + std::to_string(dimension) + " components, got " +
                               std::to_string(last - first));
  }
  std::vector<Integer> components;
  for (std::size_t i = first; i < last; ++i) {
    components.push_back(parse_unsigned(tokens[i], line));
  }
  return NatVec(std::move(components));
}

void write_components(std::ostream& os, const NatVec& v) {
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i != 0) os << ' ';
    os << v[i];
  }
}

std::string join_names(const std::vector<NamedTerm>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += t.name;
  }
  return out;
}

std::string join_values(const std::vector<NamedTerm>& terms, std::size_t dimension) {
  if (terms.empty()) return to_string(IntVec::zero(dimension));
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += " + ";
    out += to_string(t.value);
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line),
      message_(message) {}

Ledger parse_ledger(std::string_view text, LedgerParseOptions options) {
  const std::vector<Line> lines = split_lines(text);
  expect_magic(lines, kLedgerMagic);
  if (lines.size() < 2) throw ParseError(lines.front().number, "missing 'dimension <n>'");
  const std::size_t dimension = parse_dimension(lines[1]);

  if (lines.size() < 3 || !is_keyword(lines[2].tokens[0], "units")) {
    const std::size_t n = lines.size() < 3 ? lines[1].number : lines[2].number;
    throw ParseError(n, "expected 'units <name_1> ... <name_n>'");
  }
  const Line& units_line = lines[2];
  if (units_line.tokens.size() - 1 != dimension) {
    throw ParseError(units_line.number, "expected " + std::to_string(dimension) +
                                            " unit names, got " +
                                            std::to_string(units_line.tokens.size() - 1));
  }
  std::vector<std::string> units;
  std::set<std::string> seen_units;
  for (std::size_t i = 1; i < units_line.tokens.size(); ++i) {
    check_name(units_line.tokens[i], units_line.number, "unit");
    if (!seen_units.insert(units_line.tokens[i].text).second) {
      throw ParseError(units_line.number, "duplicate unit '" + units_line.tokens[i].text + "'");
    }
    units.push_back(units_line.tokens[i].text);
  }

  std::vector<Account> accounts;
  std::set<std::string> names;
  for (std::size_t li = 3; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tok = line.tokens;
    if (!is_keyword(tok[0], "account")) {
      throw ParseError(line.number, "expected 'account', got '" + tok[0].text + "'");
    }
    if (tok.size() < 3) throw ParseError(line.number, "expected 'account <Name> <dr|cr> ...'");
    check_name(tok[1], line.number, "account");
    if (!names.insert(tok[1].text).second) {
      throw ParseError(line.number, "duplicate account '" + tok[1].text + "'");
    }
    AccountRole role;
    if (is_keyword(tok[2], "dr")) {
      role = AccountRole::debit_balance;
    } else if (is_keyword(tok[2], "cr")) {
      role = AccountRole::credit_balance;
    } else {
      throw ParseError(line.number, "expected 'dr' or 'cr', got '" + tok[2].text + "'");
    }
    std::size_t pos = 3;
    bool nominal = false;
    if (pos < tok.size() && is_keyword(tok[pos], "nominal")) {
      nominal = true;
      ++pos;
    }
    auto sep = std::find_if(tok.begin() + static_cast<std::ptrdiff_t>(pos), tok.end(),
                            [](const Token& t) { return is_keyword(t, "//"); });
    if (sep == tok.end()) throw ParseError(line.number, "missing '//' between debit and credit");
    const auto sep_pos = static_cast<std::size_t>(sep - tok.begin());
    NatVec debit = parse_amount(tok, pos, sep_pos, dimension, line.number);
    NatVec credit = parse_amount(tok, sep_pos + 1, tok.size(), dimension, line.number);
    accounts.push_back({tok[1].text, role, TTerm(std::move(debit), std::move(credit)), nominal});
  }

  Ledger ledger(std::move(units), std::move(accounts));
  if (options.require_balanced) {
    const TTerm total = ledger_total(ledger);
    if (!is_zero_account(total)) {
      throw ParseError(lines.back().number,
                       "unbalanced ledger: accounts sum to " + to_string(total) +
                           ", residual " + to_string(reduce(total)) +
                           " is not a zero-account");
    }
  }
  return ledger;
}

JournalFile parse_journal(std::string_view text) {
  const std::vector<Line> lines = split_lines(text);
  expect_magic(lines, kJournalMagic);
  if (lines.size() < 2) throw ParseError(lines.front().number, "missing 'dimension <n>'");

  JournalFile file;
  file.dimension = parse_dimension(lines[1]);

  std::optional<JournalEntry> open;
  std::size_t open_line = 0;
  for (std::size_t li = 2; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& tok = line.tokens;
    if (is_keyword(tok[0], "entry")) {
      if (open) {
        throw ParseError(line.number, "entry started on line " + std::to_string(open_line) +
                                          " is missing 'end'");
      }
      if (tok.size() != 2 || !tok[1].quoted) {
        throw ParseError(line.number, "expected 'entry \"<description>\"'");
      }
      open = JournalEntry{tok[1].text, {}};
      open_line = line.number;
    } else if (is_keyword(tok[0], "dr") || is_keyword(tok[0], "cr")) {
      if (!open) throw ParseError(line.number, "posting outside of an entry");
      if (tok.size() < 2) throw ParseError(line.number, "expected '<dr|cr> <Account> <amount>'");
      check_name(tok[1], line.number, "account");
      const Side side = tok[0].text == "dr" ? Side::debit : Side::credit;
      open->postings.push_back(
          {tok[1].text, side, parse_amount(tok, 2, tok.size(), file.dimension, line.number)});
    } else if (is_keyword(tok[0], "end")) {
      if (!open) throw ParseError(line.number, "'end' without an entry");
      if (tok.size() != 1) throw ParseError(line.number, "unexpected tokens after 'end'");
      if (open->postings.empty()) throw ParseError(line.number, "entry has no postings");
      file.entries.push_back(std::move(*open));
      open.reset();
    } else {
      throw ParseError(line.number, "unexpected '" + tok[0].text + "'");
    }
  }
  if (open) {
    throw ParseError(open_line, "entry \"" + open->description + "\" is missing 'end'");
  }
  return file;
}

std::string render_ledger(const Ledger& ledger) {
  std::ostringstream os;
  os << kLedgerMagic << '\n';
  os << "dimension " << ledger.dimension() << '\n';
  os << "units";
  for (const auto& u : ledger.unit_names()) os << ' ' << u;
  os << '\n';
  for (const Account& a : ledger.accounts()) {
    os << "account " << a.name << ' ' << to_string(a.role);
    if (a.nominal) os << " nominal";
    os << ' ';
    write_components(os, a.balance.debit());
    os << " // ";
    write_components(os, a.balance.credit());
    os << '\n';
  }
  return os.str();
}

std::string render_journal(const Journal& journal, std::size_t dimension) {
  std::ostringstream os;
  os << kJournalMagic << '\n';
  os << "dimension " << dimension << '\n';
  for (const JournalEntry& e : journal) {
    std::string description = e.description;
    std::replace(description.begin(), description.end(), '"', '\'');
    os << "entry \"" << description << "\"\n";
    for (const Posting& p : e.postings) {
      os << to_string(p.side) << ' ' << p.account << ' ';
      write_components(os, p.amount);
      os << '\n';
    }
    os << "end\n";
  }
  return os.str();
}

std::string render_balance_sheet(const BalanceSheetEquation& eq) {
  if (eq.empty()) return "(empty)\n";
  return join_names(eq.lhs) + " = " + join_names(eq.rhs) + "\n" +
         join_values(eq.lhs, eq.dimension()) + " = " + join_values(eq.rhs, eq.dimension()) +
         "\n";
}

}  // namespace pacioli
