#include "hullkit/document.hpp"

#include <cctype>
#include <set>
#include <sstream>

#include "hullkit/errors.hpp"

namespace hullkit {

AnalysisInput InputDocument::analysis_input() const { return {algebra, hull_override, omega, options}; }

bool operator==(const InputDocument& a, const InputDocument& b) {
  auto same_hull = [](const std::optional<HullData>& x, const std::optional<HullData>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->u == y->u && x->torus_derivations == y->torus_derivations &&
           x->finite_generators == y->finite_generators;
  };
  return a.schema_version == b.schema_version && a.algebra == b.algebra && same_hull(a.hull_override, b.hull_override) &&
         a.omega == b.omega && a.options.massey_depth == b.options.massey_depth &&
         a.options.finite_bound == b.options.finite_bound;
}

namespace {

struct Token {
  enum class Kind { word, number, symbol } kind;
  std::string text;
  int column;
};

struct Line {
  int number;
  std::vector<Token> tokens;
};

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_number_char(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/'; }

std::vector<Token> tokenize(std::string_view s, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const int col = static_cast<int>(i) + 1;
    std::size_t j = i + 1;
    if (is_word_start(c)) {
      while (j < s.size() && is_word_char(s[j])) ++j;
      out.push_back({Token::Kind::word, std::string(s.substr(i, j - i)), col});
    } else if (is_number_char(c)) {
      while (j < s.size() && is_number_char(s[j])) ++j;
      out.push_back({Token::Kind::number, std::string(s.substr(i, j - i)), col});
    } else if (std::string_view("+-*^=").find(c) != std::string_view::npos) {
      out.push_back({Token::Kind::symbol, std::string(1, c), col});
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
    i = j;
  }
  return out;
}

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    auto tokens = tokenize(raw, number);
    if (!tokens.empty()) lines.push_back({number, std::move(tokens)});
    start = end + 1;
  }
  return lines;
}

Rational number_value(const Token& t, int line) {
  try {
    return parse_rational(t.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line, t.column);
  }
}

std::size_t integer_value(const Token& t, int line) {
  if (t.kind != Token::Kind::number) throw ParseError("expected a non-negative integer", line, t.column);
  const Rational r = number_value(t, line);
  if (r.get_den() != 1 || sgn(r) < 0 || !r.get_num().fits_ulong_p())
    throw ParseError("expected a non-negative integer, got '" + t.text + "'", line, t.column);
  return r.get_num().get_ui();
}

int end_column(const Line& l) {
  const Token& t = l.tokens.back();
  return t.column + static_cast<int>(t.text.size());
}

/// Parses a homogeneous form from tokens[pos..]. `degree` fixes the expected
/// degree; otherwise it is taken from the first monomial.
ExteriorForm parse_form_tokens(const Line& l, std::size_t pos, const std::vector<std::string>& names,
                               std::optional<std::size_t> degree) {
  const auto& t = l.tokens;
  const std::size_t dim = names.size();
  auto index_of = [&](const Token& tok) -> std::size_t {
    for (std::size_t i = 0; i < dim; ++i)
      if (names[i] == tok.text) return i;
    throw ParseError("unknown basis element '" + tok.text + "'", l.number, tok.column);
  };
  if (pos >= t.size()) throw ParseError("expected an expression", l.number, end_column(l));

  std::optional<ExteriorForm> result;
  if (degree) result = ExteriorForm(dim, *degree);
  bool first = true;
  while (pos < t.size()) {
    const int term_col = t[pos].column;
    Rational sign = 1;
    if (t[pos].kind == Token::Kind::symbol && (t[pos].text == "+" || t[pos].text == "-")) {
      if (t[pos].text == "-") sign = -1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-'", l.number, t[pos].column);
    }
    first = false;
    if (pos >= t.size()) throw ParseError("expected a term", l.number, end_column(l));

    std::optional<Rational> coeff;
    if (t[pos].kind == Token::Kind::number) {
      coeff = number_value(t[pos], l.number);
      ++pos;
      if (pos < t.size() && t[pos].text == "*") {
        ++pos;
        if (pos >= t.size() || t[pos].kind != Token::Kind::word)
          throw ParseError("expected a basis element after '*'", l.number, pos < t.size() ? t[pos].column : end_column(l));
      }
    }
    std::vector<std::size_t> indices;
    if (pos < t.size() && t[pos].kind == Token::Kind::word) {
      indices.push_back(index_of(t[pos++]));
      while (pos < t.size() && t[pos].text == "^") {
        ++pos;
        if (pos >= t.size() || t[pos].kind != Token::Kind::word)
          throw ParseError("expected a basis element after '^'", l.number, pos < t.size() ? t[pos].column : end_column(l));
        indices.push_back(index_of(t[pos++]));
      }
    }
    if (indices.empty()) {
      if (!coeff) throw ParseError("expected a term", l.number, t[pos].column);
      if (*coeff != 0) throw ParseError("constant terms are not allowed here", l.number, term_col);
      continue;
    }
    if (!result) result = ExteriorForm(dim, indices.size());
    if (indices.size() != result->degree())
      throw ParseError("expected a " + std::to_string(result->degree()) + "-form term", l.number, term_col);
    *result += (sign * coeff.value_or(Rational(1))) * ExteriorForm::basis(dim, indices);
  }
  if (!result) result = ExteriorForm(dim, degree.value_or(0));
  return *result;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(split_lines(text)) {}

  InputDocument document() {
    InputDocument doc;
    bool have_version = false;
    bool have_algebra = false;
    bool have_options = false;
    std::optional<std::pair<Line, std::size_t>> omega_line;
    while (pos_ < lines_.size()) {
      const Line& l = lines_[pos_];
      const Token& head = l.tokens[0];
      if (head.text == "schema_version") {
        if (have_version) throw ParseError("duplicate schema_version", l.number, head.column);
        expect_count(l, 2);
        const std::size_t v = integer_value(l.tokens[1], l.number);
        if (v != static_cast<std::size_t>(kSchemaVersion))
          throw ParseError("unsupported schema_version " + l.tokens[1].text, l.number, l.tokens[1].column);
        doc.schema_version = static_cast<int>(v);
        have_version = true;
        ++pos_;
      } else if (head.text == "algebra") {
        if (have_algebra) throw ParseError("duplicate algebra block", l.number, head.column);
        doc.algebra = algebra_block();
        have_algebra = true;
      } else if (head.text == "hull_override") {
        if (doc.hull_override) throw ParseError("duplicate hull_override block", l.number, head.column);
        doc.hull_override = hull_block();
      } else if (head.text == "omega") {
        if (omega_line) throw ParseError("duplicate omega", l.number, head.column);
        omega_line.emplace(l, 1);
        ++pos_;
      } else if (head.text == "options") {
        if (have_options) throw ParseError("duplicate options block", l.number, head.column);
        doc.options = options_block();
        have_options = true;
      } else {
        throw ParseError("unknown directive '" + head.text + "'", l.number, head.column);
      }
    }
    if (!have_version) throw ParseError("missing schema_version", 1, 1);
    if (!have_algebra) throw ParseError("missing algebra block", 1, 1);
    if (omega_line) {
      const auto& [line, start] = *omega_line;
      doc.omega = parse_form_tokens(line, start, doc.form_algebra().basis_names(), 2);
    }
    return doc;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;

  static void expect_count(const Line& l, std::size_t n) {
    if (l.tokens.size() < n) throw ParseError("missing argument", l.number, end_column(l));
    if (l.tokens.size() > n) throw ParseError("unexpected token '" + l.tokens[n].text + "'", l.number, l.tokens[n].column);
  }

  // Consumes the header line; returns it for error reporting.
  const Line& open_block() {
    const Line& l = lines_[pos_];
    expect_count(l, 1);
    ++pos_;
    return l;
  }

  bool at_end(const Line& header) {
    if (pos_ >= lines_.size())
      throw ParseError("unterminated '" + header.tokens[0].text + "' block", header.number, header.tokens[0].column);
    const Line& l = lines_[pos_];
    if (l.tokens[0].text != "end") return false;
    expect_count(l, 1);
    ++pos_;
    return true;
  }

  LieAlgebra algebra_block() {
    const Line& header = open_block();
    std::optional<std::size_t> dim;
    std::optional<LieAlgebra> g;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    while (!at_end(header)) {
      const Line& l = lines_[pos_++];
      const Token& head = l.tokens[0];
      if (head.text == "dim") {
        if (dim || g) throw ParseError("dim must appear once, before basis", l.number, head.column);
        expect_count(l, 2);
        dim = integer_value(l.tokens[1], l.number);
      } else if (head.text == "basis") {
        if (g) throw ParseError("duplicate basis", l.number, head.column);
        std::vector<std::string> names;
        std::set<std::string> unique;
        for (std::size_t i = 1; i < l.tokens.size(); ++i) {
          const Token& t = l.tokens[i];
          if (t.kind != Token::Kind::word) throw ParseError("basis names must be identifiers", l.number, t.column);
          if (t.text == "end") throw ParseError("'end' is reserved", l.number, t.column);
          if (!unique.insert(t.text).second) throw ParseError("duplicate basis name '" + t.text + "'", l.number, t.column);
          names.push_back(t.text);
        }
        if (names.empty()) throw ParseError("empty basis", l.number, end_column(l));
        if (dim && *dim != names.size())
          throw ParseError("basis has " + std::to_string(names.size()) + " elements but dim is " + std::to_string(*dim),
                           l.number, head.column);
        g.emplace(std::move(names));
      } else if (head.text == "bracket") {
        if (!g) throw ParseError("bracket before basis", l.number, head.column);
        if (l.tokens.size() < 5) throw ParseError("expected 'bracket a b = <combination>'", l.number, end_column(l));
        const std::size_t i = operand(*g, l, l.tokens[1]);
        const std::size_t j = operand(*g, l, l.tokens[2]);
        if (l.tokens[3].text != "=") throw ParseError("expected '='", l.number, l.tokens[3].column);
        const ExteriorForm rhs = parse_form_tokens(l, 4, g->basis_names(), 1);
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
          throw ParseError("duplicate bracket for (" + g->basis_names()[i] + ", " + g->basis_names()[j] + ")", l.number,
                           head.column);
        if (i == j) {
          if (!rhs.is_zero()) throw ParseError("self-bracket must be zero", l.number, l.tokens[1].column);
          continue;
        }
        g->set_bracket(i, j, rhs.coords());
      } else {
        throw ParseError("unknown algebra directive '" + head.text + "'", l.number, head.column);
      }
    }
    if (!g) throw ParseError("algebra block has no basis", header.number, header.tokens[0].column);
    return *g;
  }

  static std::size_t operand(const LieAlgebra& g, const Line& l, const Token& t) {
    if (t.kind == Token::Kind::word) {
      if (auto i = g.index_of(t.text)) return *i;
      throw ParseError("unknown basis element '" + t.text + "'", l.number, t.column);
    }
    if (t.kind == Token::Kind::number) {
      const std::size_t i = integer_value(t, l.number);
      if (i < 1 || i > g.dim())
        throw ParseError("index " + t.text + " out of range 1.." + std::to_string(g.dim()), l.number, t.column);
      return i - 1;
    }
    throw ParseError("expected a basis element", l.number, t.column);
  }

  Mat matrix_block(std::size_t n) {
    const Line& header = open_block();
    std::vector<Vec> rows;
    while (!at_end(header)) {
      const Line& l = lines_[pos_++];
      Vec row;
      for (std::size_t i = 0; i < l.tokens.size(); ++i) {
        Rational sign = 1;
        if (l.tokens[i].text == "-" || l.tokens[i].text == "+") {
          if (l.tokens[i].text == "-") sign = -1;
          ++i;
          if (i >= l.tokens.size()) throw ParseError("expected a number", l.number, end_column(l));
        }
        if (l.tokens[i].kind != Token::Kind::number)
          throw ParseError("expected a number, got '" + l.tokens[i].text + "'", l.number, l.tokens[i].column);
        row.push_back(sign * number_value(l.tokens[i], l.number));
      }
      if (row.size() != n)
        throw ParseError("row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), l.number,
                         l.tokens[0].column);
      rows.push_back(std::move(row));
    }
    if (rows.size() != n)
      throw ParseError("matrix has " + std::to_string(rows.size()) + " rows, expected " + std::to_string(n),
                       header.number, header.tokens[0].column);
    return Mat::from_rows(n, rows);
  }

  HullData hull_block() {
    const Line& header = open_block();
    std::optional<HullData> h;
    while (!at_end(header)) {
      const Line& l = lines_[pos_];
      const Token& head = l.tokens[0];
      if (head.text == "algebra") {
        if (h) throw ParseError("duplicate algebra in hull_override", l.number, head.column);
        h.emplace();
        h->u = algebra_block();
      } else if (head.text == "torus_derivation" || head.text == "finite_generator") {
        if (!h) throw ParseError("hull_override needs its algebra first", l.number, head.column);
        auto& list = head.text == "torus_derivation" ? h->torus_derivations : h->finite_generators;
        list.push_back(matrix_block(h->u.dim()));
      } else {
        throw ParseError("unknown hull_override directive '" + head.text + "'", l.number, head.column);
      }
    }
    if (!h) throw ParseError("hull_override has no algebra", header.number, header.tokens[0].column);
    return *h;
  }

  AnalysisOptions options_block() {
    const Line& header = open_block();
    AnalysisOptions o;
    while (!at_end(header)) {
      const Line& l = lines_[pos_++];
      const Token& head = l.tokens[0];
      expect_count(l, 2);
      if (head.text == "massey_depth") {
        o.massey_depth = integer_value(l.tokens[1], l.number);
      } else if (head.text == "finite_bound") {
        o.finite_bound = integer_value(l.tokens[1], l.number);
        if (o.finite_bound == 0) throw ParseError("finite_bound must be positive", l.number, l.tokens[1].column);
      } else {
        throw ParseError("unknown option '" + head.text + "'", l.number, head.column);
      }
    }
    return o;
  }
};

void render_algebra(std::ostream& os, const LieAlgebra& g, const std::string& indent) {
  const auto& names = g.basis_names();
  os << indent << "algebra\n";
  os << indent << "  dim " << g.dim() << "\n";
  os << indent << "  basis";
  for (const auto& n : names) os << ' ' << n;
  os << "\n";
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      const Vec v = g.bracket_basis(i, j);
      if (is_zero(v)) continue;
      os << indent << "  bracket " << names[i] << ' ' << names[j] << " = "
         << to_string(ExteriorForm::from_coords(g.dim(), 1, v), names) << "\n";
    }
  os << indent << "end\n";
}

void render_matrix(std::ostream& os, const std::string& keyword, const Mat& m, const std::string& indent) {
  os << indent << keyword << "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << indent << " ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << ' ' << to_string(m(r, c));
    os << "\n";
  }
  os << indent << "end\n";
}

}  // namespace

InputDocument parse_document(std::string_view text) { return Parser(text).document(); }

std::string render_document(const InputDocument& doc) {
  std::ostringstream os;
  os << "schema_version " << doc.schema_version << "\n";
  render_algebra(os, doc.algebra, "");
  if (doc.hull_override) {
    os << "hull_override\n";
    render_algebra(os, doc.hull_override->u, "  ");
    for (const auto& d : doc.hull_override->torus_derivations) render_matrix(os, "torus_derivation", d, "  ");
    for (const auto& a : doc.hull_override->finite_generators) render_matrix(os, "finite_generator", a, "  ");
    os << "end\n";
  }
  if (doc.omega) os << "omega " << to_string(*doc.omega, doc.form_algebra().basis_names()) << "\n";
  os << "options\n";
  os << "  massey_depth " << doc.options.massey_depth << "\n";
  os << "  finite_bound " << doc.options.finite_bound << "\n";
  os << "end\n";
  return os.str();
}

ExteriorForm parse_form(std::string_view text, const std::vector<std::string>& names) {
  const auto tokens = tokenize(text, 1);
  if (tokens.empty()) throw ParseError("empty form", 1, 1);
  return parse_form_tokens(Line{1, tokens}, 0, names, std::nullopt);
}

}  // namespace hullkit
