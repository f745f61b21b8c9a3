#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "hullkit/commands.hpp"
#include "hullkit/errors.hpp"
#include "hullkit/fixtures.hpp"

namespace {

constexpr std::size_t kSoftDimension = 16;

struct Flags {
  std::string input;
  std::string omega;
  std::optional<std::size_t> massey_depth;
  std::optional<std::size_t> finite_bound;
  std::string format = "text";
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

hullkit::InputDocument load(const Flags& f) {
  constexpr std::string_view prefix = "fixture:";
  hullkit::InputDocument doc = f.input.rfind(prefix, 0) == 0 ? hullkit::fixture(f.input.substr(prefix.size()))
                                                             : hullkit::parse_document(read_input(f.input));
  if (!f.omega.empty()) doc.omega = hullkit::parse_form(f.omega, doc.form_algebra().basis_names());
  if (f.massey_depth) doc.options.massey_depth = *f.massey_depth;
  if (f.finite_bound) doc.options.finite_bound = *f.finite_bound;
  return doc;
}

int emit(const hullkit::CommandResult& r, const std::string& format) {
  if (format == "structured") {
    std::cout << r.structured;
  } else {
    (r.exit_code == hullkit::kExitOk ? std::cout : std::cerr) << r.text;
  }
  return r.exit_code;
}

int run_command(const std::string& command, const Flags& f) {
  hullkit::InputDocument doc;
  try {
    doc = load(f);
  } catch (const hullkit::ParseError& e) {
    return emit(hullkit::parse_failure(command, e.what()), f.format);
  } catch (const hullkit::PreconditionError& e) {
    std::cerr << "precondition error: " << e.what() << "\n";
    return hullkit::kExitPrecondition;
  } catch (const std::runtime_error& e) {
    std::cerr << e.what() << "\n";
    return hullkit::kExitUsage;
  }
  if (doc.algebra.dim() > kSoftDimension)
    std::cerr << "warning: dimension " << doc.algebra.dim() << " is above " << kSoftDimension
              << "; exterior algebra computations may be slow\n";
  return emit(hullkit::run(command, doc), f.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splittable hulls, invariant models, formality and hard Lefschetz checks for solvable Lie algebras"};
  app.require_subcommand(1);

  Flags flags;
  std::string chosen;
  for (const auto& name : hullkit::command_names()) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " stage");
    sub->add_option("input", flags.input, "Input document path, '-' for stdin, or fixture:<id>")->required();
    sub->add_option("--omega", flags.omega, "Symplectic form, e.g. \"x1^y + x2^x3\"");
    sub->add_option("--massey-depth", flags.massey_depth, "Maximum total degree of scanned Massey triples");
    sub->add_option("--finite-bound", flags.finite_bound, "Maximum order of the finite group");
    sub->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "structured"}));
    sub->callback([&chosen, name] { chosen = name; });
  }

  std::string fixture_id;
  auto* fix = app.add_subcommand("fixture", "Print a built-in fixture as an input document");
  fix->add_option("id", fixture_id, "Fixture id, e.g. example1:m=2:a=1,0")->required();
  app.add_subcommand("fixtures", "List built-in fixtures")->callback([] {
    for (const auto& n : hullkit::fixture_names()) std::cout << n << "\n";
  });

  CLI11_PARSE(app, argc, argv);

  if (fix->parsed()) {
    try {
      std::cout << hullkit::render_document(hullkit::fixture(fixture_id));
    } catch (const hullkit::ParseError& e) {
      std::cerr << "parse error: " << e.what() << "\n";
      return hullkit::kExitParse;
    } catch (const hullkit::PreconditionError& e) {
      std::cerr << "precondition error: " << e.what() << "\n";
      return hullkit::kExitPrecondition;
    }
    return 0;
  }
  if (chosen.empty()) return 0;
  return run_command(chosen, flags);
}
