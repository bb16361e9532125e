#include "bnfix/io.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "bnfix/errors.hpp"

namespace bnfix {

namespace {

struct Line {
  std::string text;
  int number;  // 1-based
};

// Blank lines and '#' comment lines carry no content in any of the formats.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({line, number});
  }
  return out;
}

std::vector<std::string> split_fields(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string field;
  while (in >> field) out.push_back(field);
  return out;
}

int parse_int(const std::string& s, int line, int col, const char* what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(),
                                [](unsigned char c) { return std::isdigit(c); }))
    throw parse_error(std::string("expected ") + what + ", got '" + s + "'", line, col);
  long long v = 0;
  for (char c : s) {
    v = v * 10 + (c - '0');
    if (v > 1000000000) throw parse_error(std::string(what) + " out of range", line, col);
  }
  return static_cast<int>(v);
}

// ---- formula expressions --------------------------------------------------

struct Expr {
  enum class Kind { variable, constant, negation, conjunction, disjunction };
  Kind kind;
  int var = 0;
  bool value = false;
  std::unique_ptr<Expr> lhs, rhs;
};

struct Token {
  enum class Kind { variable, zero, one, bang, amp, pipe, lparen, rparen, end };
  Kind kind;
  int var = 0;
  int col = 0;  // 1-based byte column
};

std::vector<Token> tokenize_formula(const std::string& s, int line) {
  std::vector<Token> out;
  std::size_t p = 0;
  auto starts_with = [&](const char* bytes, std::size_t len) {
    return s.compare(p, len, bytes, len) == 0;
  };
  while (p < s.size()) {
    const int col = static_cast<int>(p) + 1;
    const char c = s[p];
    if (c == ' ' || c == '\t') {
      ++p;
    } else if (c == 'x' || c == 'X') {
      std::size_t q = p + 1;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
      if (q == p + 1) throw parse_error("expected a component index after 'x'", line, col);
      out.push_back({Token::Kind::variable,
                     parse_int(s.substr(p + 1, q - p - 1), line, col, "component index"),
                     col});
      p = q;
    } else if (c == '0') {
      out.push_back({Token::Kind::zero, 0, col});
      ++p;
    } else if (c == '1') {
      out.push_back({Token::Kind::one, 0, col});
      ++p;
    } else if (c == '!') {
      out.push_back({Token::Kind::bang, 0, col});
      ++p;
    } else if (c == '&') {
      out.push_back({Token::Kind::amp, 0, col});
      ++p;
    } else if (c == '|') {
      out.push_back({Token::Kind::pipe, 0, col});
      ++p;
    } else if (c == '(') {
      out.push_back({Token::Kind::lparen, 0, col});
      ++p;
    } else if (c == ')') {
      out.push_back({Token::Kind::rparen, 0, col});
      ++p;
    } else if (starts_with("\xc2\xac", 2)) {  // not sign
      out.push_back({Token::Kind::bang, 0, col});
      p += 2;
    } else if (starts_with("\xe2\x88\xa7", 3)) {  // logical and
      out.push_back({Token::Kind::amp, 0, col});
      p += 3;
    } else if (starts_with("\xe2\x88\xa8", 3)) {  // logical or
      out.push_back({Token::Kind::pipe, 0, col});
      p += 3;
    } else {
      throw parse_error(std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Token::Kind::end, 0, static_cast<int>(s.size()) + 1});
  return out;
}

// expr := term ('|' term)*; term := factor ('&' factor)*;
// factor := '!' factor | '(' expr ')' | 'x'digits | '0' | '1'
class FormulaParser {
 public:
  FormulaParser(std::vector<Token> tokens, int line)
      : tokens_(std::move(tokens)), line_(line) {}

  std::unique_ptr<Expr> parse() {
    auto e = parse_expr();
    if (peek().kind != Token::Kind::end)
      throw parse_error("unexpected trailing input", line_, peek().col);
    return e;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  Token take() { return tokens_[pos_++]; }

  std::unique_ptr<Expr> parse_expr() {
    auto e = parse_term();
    while (peek().kind == Token::Kind::pipe) {
      take();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::disjunction;
      node->lhs = std::move(e);
      node->rhs = parse_term();
      e = std::move(node);
    }
    return e;
  }

  std::unique_ptr<Expr> parse_term() {
    auto e = parse_factor();
    while (peek().kind == Token::Kind::amp) {
      take();
      auto node = std::make_unique<Expr>();
      node->kind = Expr::Kind::conjunction;
      node->lhs = std::move(e);
      node->rhs = parse_factor();
      e = std::move(node);
    }
    return e;
  }

  std::unique_ptr<Expr> parse_factor() {
    const Token t = take();
    auto node = std::make_unique<Expr>();
    switch (t.kind) {
      case Token::Kind::bang:
        node->kind = Expr::Kind::negation;
        node->lhs = parse_factor();
        return node;
      case Token::Kind::lparen: {
        auto inner = parse_expr();
        if (peek().kind != Token::Kind::rparen)
          throw parse_error("expected ')'", line_, peek().col);
        take();
        return inner;
      }
      case Token::Kind::variable:
        node->kind = Expr::Kind::variable;
        node->var = t.var;
        return node;
      case Token::Kind::zero:
      case Token::Kind::one:
        node->kind = Expr::Kind::constant;
        node->value = t.kind == Token::Kind::one;
        return node;
      default:
        throw parse_error("expected a variable, constant, '!' or '('", line_, t.col);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int line_;
};

bool eval(const Expr& e, std::uint32_t x, int n) {
  switch (e.kind) {
    case Expr::Kind::variable:
      return (x >> (n - e.var)) & 1u;
    case Expr::Kind::constant:
      return e.value;
    case Expr::Kind::negation:
      return !eval(*e.lhs, x, n);
    case Expr::Kind::conjunction:
      return eval(*e.lhs, x, n) && eval(*e.rhs, x, n);
    case Expr::Kind::disjunction:
      return eval(*e.lhs, x, n) || eval(*e.rhs, x, n);
  }
  return false;
}

void check_vars(const Expr& e, int n, int line) {
  if (e.kind == Expr::Kind::variable && (e.var < 1 || e.var > n))
    throw parse_error("variable x" + std::to_string(e.var) +
                          " out of range: network has " + std::to_string(n) +
                          " components",
                      line, 0);
  if (e.lhs) check_vars(*e.lhs, n, line);
  if (e.rhs) check_vars(*e.rhs, n, line);
}

BooleanNetwork parse_table_network(const std::vector<Line>& lines) {
  const auto header = split_fields(lines[0].text);
  if (header.size() != 2 || header[0] != "n")
    throw parse_error("expected header 'n <count>'", lines[0].number, 1);
  const int n = parse_int(header[1], lines[0].number, 1, "component count");
  if (n < 1 || n > kMaxComponents)
    throw parse_error("component count must be in [1,24]", lines[0].number, 1);
  const std::uint32_t rows = 1u << n;
  if (lines.size() - 1 < rows) {
    const State missing(n, static_cast<std::uint32_t>(lines.size() - 1));
    throw parse_error("missing state row " + missing.to_string(),
                      lines.back().number, 1);
  }
  if (lines.size() - 1 > rows)
    throw parse_error("unexpected extra row", lines[rows + 1].number, 1);

  std::vector<std::vector<std::uint8_t>> tables(
      static_cast<std::size_t>(n), std::vector<std::uint8_t>(rows, 0));
  for (std::uint32_t r = 0; r < rows; ++r) {
    const Line& line = lines[r + 1];
    const auto fields = split_fields(line.text);
    if (fields.size() != 2)
      throw parse_error("expected '<state> <image>'", line.number, 1);
    const std::string expected = State(n, r).to_string();
    if (fields[0] != expected)
      throw parse_error("rows must cover all states in lexicographic order; expected '" +
                            expected + "'",
                        line.number, 1);
    if (fields[1].size() != static_cast<std::size_t>(n))
      throw parse_error("image must have exactly " + std::to_string(n) + " bits",
                        line.number, 1);
    for (int i = 1; i <= n; ++i) {
      const char c = fields[1][static_cast<std::size_t>(i - 1)];
      if (c != '0' && c != '1')
        throw parse_error("image bits must be 0 or 1", line.number, 1);
      tables[static_cast<std::size_t>(i - 1)][r] = static_cast<std::uint8_t>(c - '0');
    }
  }
  return BooleanNetwork(n, tables);
}

BooleanNetwork parse_formula_network(const std::vector<Line>& lines) {
  struct Definition {
    std::string body;
    int line = 0;
    bool present = false;
  };
  int n = 0;
  std::vector<std::pair<int, Definition>> defs;
  for (const Line& line : lines) {
    const auto& s = line.text;
    std::size_t p = s.find_first_not_of(" \t");
    if (s[p] != 'f' && s[p] != 'F')
      throw parse_error("expected a component definition 'f<i> = <expr>'", line.number,
                        static_cast<int>(p) + 1);
    std::size_t q = p + 1;
    while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) ++q;
    if (q == p + 1)
      throw parse_error("expected a component index after 'f'", line.number,
                        static_cast<int>(p) + 2);
    const int idx = parse_int(s.substr(p + 1, q - p - 1), line.number,
                              static_cast<int>(p) + 2, "component index");
    while (q < s.size() && (s[q] == ' ' || s[q] == '\t')) ++q;
    if (q >= s.size() || s[q] != '=')
      throw parse_error("expected '=' after the component name", line.number,
                        static_cast<int>(q) + 1);
    Definition def;
    def.body = s.substr(q + 1);
    def.line = line.number;
    def.present = true;
    defs.emplace_back(idx, std::move(def));
    n = std::max(n, idx);
  }
  if (n < 1 || n > kMaxComponents)
    throw parse_error("component count must be in [1,24]", lines[0].number, 1);
  std::vector<Definition> by_index(static_cast<std::size_t>(n) + 1);
  for (auto& [idx, def] : defs) {
    if (idx < 1) throw parse_error("component index must be >= 1", def.line, 1);
    if (by_index[static_cast<std::size_t>(idx)].present)
      throw parse_error("component f" + std::to_string(idx) + " defined more than once",
                        def.line, 1);
    by_index[static_cast<std::size_t>(idx)] = std::move(def);
  }
  for (int i = 1; i <= n; ++i)
    if (!by_index[static_cast<std::size_t>(i)].present)
      throw parse_error("component f" + std::to_string(i) + " is never defined",
                        lines.back().number, 1);

  const std::uint32_t rows = 1u << n;
  std::vector<std::vector<std::uint8_t>> tables(
      static_cast<std::size_t>(n), std::vector<std::uint8_t>(rows, 0));
  for (int i = 1; i <= n; ++i) {
    const Definition& def = by_index[static_cast<std::size_t>(i)];
    FormulaParser parser(tokenize_formula(def.body, def.line), def.line);
    const auto expr = parser.parse();
    check_vars(*expr, n, def.line);
    for (std::uint32_t x = 0; x < rows; ++x)
      tables[static_cast<std::size_t>(i - 1)][x] = eval(*expr, x, n) ? 1 : 0;
  }
  return BooleanNetwork(n, tables);
}

}  // namespace

BooleanNetwork parse_network(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw parse_error("empty network file", 1, 1);
  const auto first = lines[0].text.find_first_not_of(" \t");
  const char c = lines[0].text[first];
  if (c == 'n') return parse_table_network(lines);
  if (c == 'f' || c == 'F') return parse_formula_network(lines);
  throw parse_error("expected a TABLE header 'n <count>' or FORMULA lines 'f<i> = <expr>'",
                    lines[0].number, static_cast<int>(first) + 1);
}

std::string emit_network(const BooleanNetwork& f) {
  std::ostringstream out;
  out << "n " << f.n() << "\n";
  const std::uint32_t rows = f.state_count();
  for (std::uint32_t x = 0; x < rows; ++x)
    out << State(f.n(), x).to_string() << ' '
        << State(f.n(), f.image(x)).to_string() << "\n";
  return out.str();
}

Digraph parse_digraph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw parse_error("empty digraph file", 1, 1);
  const auto header = split_fields(lines[0].text);
  if (header.size() != 2 || header[0] != "n")
    throw parse_error("expected header 'n <count>'", lines[0].number, 1);
  const int n = parse_int(header[1], lines[0].number, 1, "vertex count");
  if (n < 1) throw parse_error("vertex count must be >= 1", lines[0].number, 1);
  Digraph g(n);
  for (std::size_t r = 1; r < lines.size(); ++r) {
    const auto fields = split_fields(lines[r].text);
    if (fields.size() != 2)
      throw parse_error("expected an arc line '<from> <to>'", lines[r].number, 1);
    const int u = parse_int(fields[0], lines[r].number, 1, "vertex");
    const int v = parse_int(fields[1], lines[r].number, 1, "vertex");
    if (u < 1 || u > n || v < 1 || v > n)
      throw parse_error("vertex " + std::to_string(u < 1 || u > n ? u : v) +
                            " out of range [1," + std::to_string(n) + "]",
                        lines[r].number, 1);
    if (!g.add_arc(u, v))
      throw parse_error("duplicate arc " + std::to_string(u) + " " + std::to_string(v),
                        lines[r].number, 1);
  }
  return g;
}

std::string emit_digraph(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.arcs()) out << u << ' ' << v << "\n";
  return out.str();
}

std::string export_dot(const Digraph& g) {
  std::ostringstream out;
  out << "digraph G {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot_interaction(const BooleanNetwork& f) {
  const Digraph g = interaction_graph(f);
  std::ostringstream out;
  out << "digraph interaction {\n";
  for (int v = 1; v <= g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.arcs()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_dot_async(const BooleanNetwork& f, bool force) {
  const int n = f.n();
  if (n > kAsyncGraphLimit && !force)
    throw infeasible_error("export_dot_async: 2^n vertices exceed the bound (n <= 20)");
  std::ostringstream out;
  out << "digraph async {\n";
  const std::uint32_t rows = f.state_count();
  for (std::uint32_t x = 0; x < rows; ++x)
    out << "  \"" << State(n, x).to_string() << "\";\n";
  for (std::uint32_t x = 0; x < rows; ++x)
    for (int i = 1; i <= n; ++i) {
      const std::uint32_t y = f.apply_letter(i, x);
      if (y != x)
        out << "  \"" << State(n, x).to_string() << "\" -> \""
            << State(n, y).to_string() << "\";\n";
    }
  out << "}\n";
  return out.str();
}

Word parse_word_arg(const std::string& text, int n) {
  const auto first = text.find_first_not_of(" \t");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t");
  const std::string s = text.substr(first, last - first + 1);

  const bool separated = s.find_first_of(", \t") != std::string::npos;
  Word w;
  if (separated) {
    std::string token;
    auto flush = [&]() {
      if (token.empty()) return;
      const int a = parse_int(token, 0, 0, "letter");
      if (a < 1) throw parse_error("letters must be >= 1");
      w.push_back(a);
      token.clear();
    };
    for (char c : s) {
      if (c == ',' || c == ' ' || c == '\t')
        flush();
      else
        token.push_back(c);
    }
    flush();
    return w;
  }
  if (n <= 9) {
    for (char c : s) {
      if (c < '1' || c > '9')
        throw parse_error(std::string("invalid letter '") + c +
                          "' in compact word (digits 1-9)");
      w.push_back(c - '0');
    }
    return w;
  }
  const int a = parse_int(s, 0, 0, "letter");
  if (a < 1) throw parse_error("letters must be >= 1");
  w.push_back(a);
  return w;
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << w[i];
  }
  return out.str();
}

std::string format_word_csv(const Word& w) {
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  return out.str();
}

std::string format_word_compact(const Word& w) {
  std::string out;
  for (int a : w) {
    if (a < 1 || a > 9) return "";
    out.push_back(static_cast<char>('0' + a));
  }
  return out;
}

}  // namespace bnfix
