#include "hullkit/fixtures.hpp"

#include <functional>
#include <set>

#include "hullkit/errors.hpp"

namespace hullkit {

FixtureId parse_fixture_id(std::string_view text) {
  FixtureId id;
  std::size_t start = 0;
  bool first = true;
  while (start <= text.size()) {
    std::size_t end = text.find(':', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view part = text.substr(start, end - start);
    const int column = static_cast<int>(start) + 1;
    if (part.empty()) throw ParseError("empty component in fixture id", 1, column);
    if (first) {
      id.name = std::string(part);
      first = false;
    } else {
      const auto eq = part.find('=');
      if (eq == std::string_view::npos || eq == 0)
        throw ParseError("expected key=value in fixture id", 1, column);
      const std::string key(part.substr(0, eq));
      if (id.params.count(key)) throw ParseError("duplicate fixture parameter '" + key + "'", 1, column);
      std::vector<Rational> values;
      std::string_view rest = part.substr(eq + 1);
      std::size_t vstart = 0;
      while (vstart <= rest.size()) {
        std::size_t vend = rest.find(',', vstart);
        if (vend == std::string_view::npos) vend = rest.size();
        const std::string_view v = rest.substr(vstart, vend - vstart);
        try {
          if (!v.empty()) values.push_back(parse_rational(v));
        } catch (const ParseError& e) {
          throw ParseError(e.what(), 1, column + static_cast<int>(eq + 1 + vstart));
        }
        vstart = vend + 1;
      }
      id.params[key] = std::move(values);
    }
    start = end + 1;
  }
  return id;
}

std::string to_string(const FixtureId& id) {
  std::string s = id.name;
  for (const auto& [key, values] : id.params) {
    s += ":" + key + "=";
    for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + to_string(values[i]);
  }
  return s;
}

namespace {

class Params {
 public:
  explicit Params(const FixtureId& id) : id_(id) {}

  std::optional<std::vector<Rational>> list(const std::string& key) {
    used_.insert(key);
    auto it = id_.params.find(key);
    if (it == id_.params.end()) return std::nullopt;
    return it->second;
  }

  std::optional<std::size_t> count(const std::string& key, std::size_t max) {
    auto v = list(key);
    if (!v) return std::nullopt;
    if (v->size() != 1 || v->front().get_den() != 1 || sgn(v->front()) < 0 || v->front() > static_cast<unsigned long>(max))
      throw PreconditionError(id_.name + ": " + key + " must be an integer in 0.." + std::to_string(max));
    return v->front().get_num().get_ui();
  }

  void finish() const {
    for (const auto& [key, _] : id_.params)
      if (!used_.count(key)) throw PreconditionError(id_.name + ": unknown parameter '" + key + "'");
  }

 private:
  const FixtureId& id_;
  std::set<std::string> used_;
};

InputDocument bare(LieAlgebra g) {
  InputDocument doc;
  doc.algebra = std::move(g);
  return doc;
}

void set(LieAlgebra& g, const std::string& a, const std::string& b, const std::vector<std::pair<Rational, std::string>>& rhs) {
  Vec v = zero_vec(g.dim());
  for (const auto& [c, name] : rhs) v[*g.index_of(name)] += c;
  g.set_bracket(*g.index_of(a), *g.index_of(b), v);
}

ExteriorForm form(const LieAlgebra& g, const std::vector<std::pair<std::string, std::string>>& pairs) {
  ExteriorForm w(g.dim(), 2);
  for (const auto& [a, b] : pairs) w += ExteriorForm::basis(g.dim(), {*g.index_of(a), *g.index_of(b)});
  return w;
}

LieAlgebra heisenberg_algebra(std::vector<std::string> names) {
  LieAlgebra g(std::move(names));
  g.set_bracket(0, 1, unit_vec(3, 2));
  return g;
}

InputDocument sol(Params& p) {
  p.finish();
  LieAlgebra g({"t", "x", "y"});
  set(g, "t", "x", {{1, "x"}});
  set(g, "t", "y", {{-1, "y"}});
  return bare(g);
}

InputDocument heisenberg(Params& p) {
  p.finish();
  return bare(heisenberg_algebra({"x1", "x2", "x3"}));
}

InputDocument filiform4(Params& p) {
  p.finish();
  LieAlgebra g({"e1", "e2", "e3", "e4"});
  set(g, "e1", "e2", {{1, "e3"}});
  set(g, "e1", "e3", {{1, "e4"}});
  return bare(g);
}

InputDocument kodaira_thurston(Params& p) {
  p.finish();
  LieAlgebra g({"e1", "e2", "e3", "e4"});
  set(g, "e1", "e2", {{1, "e3"}});
  InputDocument doc = bare(g);
  doc.omega = form(g, {{"e1", "e3"}, {"e2", "e4"}});
  return doc;
}

InputDocument example1(Params& p) {
  auto a = p.list("a");
  auto b = p.list("b");
  const auto m_given = p.count("m", 11);
  const auto n_given = p.count("n", 11);
  p.finish();
  const std::size_t m = m_given.value_or(a ? a->size() : 1);
  const std::size_t n = n_given.value_or(b ? b->size() : 1);
  if (!a) a = std::vector<Rational>(m, Rational(1));
  if (!b) b = std::vector<Rational>(n, Rational(1));
  if (a->size() != m) throw PreconditionError("example1: a needs m = " + std::to_string(m) + " values");
  if (b->size() != n) throw PreconditionError("example1: b needs n = " + std::to_string(n) + " values");

  std::vector<std::string> names{"tau"};
  for (std::size_t i = 1; i <= m; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    names.push_back("z" + std::to_string(j));
    names.push_back("w" + std::to_string(j));
  }
  names.push_back("sigma");
  LieAlgebra g(names);
  std::vector<std::pair<std::string, std::string>> omega{{"tau", "sigma"}};
  for (std::size_t i = 1; i <= m; ++i) {
    const std::string x = "x" + std::to_string(i), y = "y" + std::to_string(i);
    set(g, "tau", x, {{(*a)[i - 1], x}});
    set(g, "tau", y, {{-(*a)[i - 1], y}});
    omega.emplace_back(x, y);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    const std::string z = "z" + std::to_string(j), w = "w" + std::to_string(j);
    set(g, "tau", z, {{(*b)[j - 1], w}});
    set(g, "tau", w, {{-(*b)[j - 1], z}});
    omega.emplace_back(z, w);
  }
  InputDocument doc = bare(g);
  doc.omega = form(g, omega);
  return doc;
}

InputDocument example2(Params& p) {
  p.finish();
  // Structure constants read off the differentials
  // dy1 = -x1^y1 + x2^y2, dy2 = -x2^y1 - x1^y2, dz1 = x1^z1 - x2^z2, dz2 = x1^z2 + x2^z1.
  LieAlgebra g({"x1", "x2", "y1", "y2", "z1", "z2"});
  set(g, "x1", "y1", {{1, "y1"}});
  set(g, "x1", "y2", {{1, "y2"}});
  set(g, "x1", "z1", {{-1, "z1"}});
  set(g, "x1", "z2", {{-1, "z2"}});
  set(g, "x2", "y1", {{1, "y2"}});
  set(g, "x2", "y2", {{-1, "y1"}});
  set(g, "x2", "z1", {{-1, "z2"}});
  set(g, "x2", "z2", {{1, "z1"}});
  InputDocument doc = bare(g);
  doc.omega = form(g, {{"x1", "x2"}, {"z1", "y1"}, {"y2", "z2"}});
  return doc;
}

InputDocument section7(Params& p) {
  p.finish();
  const LieAlgebra u = heisenberg_algebra({"x1", "x2", "x3"});
  InputDocument doc = bare(u);
  doc.hull_override = HullData{u, {}, {Mat::diagonal({1, -1, -1})}};
  return doc;
}

InputDocument section7_mdelta(Params& p) {
  p.finish();
  LieAlgebra u({"x1", "x2", "x3", "y"});
  u.set_bracket(0, 1, unit_vec(4, 2));
  InputDocument doc = bare(u);
  doc.hull_override = HullData{u, {}, {Mat::diagonal({1, -1, -1, 1})}};
  doc.omega = form(u, {{"x1", "y"}, {"x2", "x3"}});
  return doc;
}

InputDocument rotation(Params& p) {
  p.finish();
  LieAlgebra g({"t", "z", "w"});
  set(g, "t", "z", {{1, "w"}});
  set(g, "t", "w", {{-1, "z"}});
  return bare(g);
}

InputDocument abelian(Params& p) {
  const std::size_t n = p.count("n", 24).value_or(2);
  p.finish();
  if (n == 0) throw PreconditionError("abelian: n must be positive");
  return bare(LieAlgebra::abelian(n));
}

InputDocument sl2(Params& p) {
  p.finish();
  LieAlgebra g({"h", "e", "f"});
  set(g, "h", "e", {{2, "e"}});
  set(g, "h", "f", {{-2, "f"}});
  set(g, "e", "f", {{1, "h"}});
  return bare(g);
}

const std::map<std::string, std::function<InputDocument(Params&)>>& registry() {
  static const std::map<std::string, std::function<InputDocument(Params&)>> r{
      {"abelian", abelian},
      {"example1", example1},
      {"example2", example2},
      {"filiform4", filiform4},
      {"heisenberg", heisenberg},
      {"kodaira_thurston", kodaira_thurston},
      {"rotation", rotation},
      {"section7", section7},
      {"section7_Mdelta", section7_mdelta},
      {"sl2", sl2},
      {"sol", sol},
  };
  return r;
}

}  // namespace

InputDocument fixture(const FixtureId& id) {
  auto it = registry().find(id.name);
  if (it == registry().end()) throw PreconditionError("unknown fixture '" + id.name + "'");
  Params p(id);
  return it->second(p);
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

}  // namespace hullkit
