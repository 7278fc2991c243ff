// qhb: command line front end for algebra files and the catalog.
#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qhb/catalog.hpp"
#include "qhb/errors.hpp"
#include "qhb/io.hpp"
#include "qhb/report.hpp"

namespace {

using namespace qhb;
using report::json;

enum Exit { kOk = 0, kNegative = 1, kError = 2, kInconsistent = 3 };

struct Flags {
  std::string format = "json";
  bool no_verify = false;
  int witness_cap = mod::kHomCap;
  std::string path;
};

unsigned seed_from_env() {
  const char* s = std::getenv("QHB_SEED");
  if (!s || !*s) return 1;
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(s, &used);
    if (used == std::string(s).size()) return static_cast<unsigned>(v);
  } catch (const std::exception&) {
  }
  throw Error(std::string("QHB_SEED must be a non-negative integer, got \"") + s + "\"");
}

void print(const json& j, const Flags& f) {
  if (f.format == "text")
    std::cout << report::to_text(j);
  else
    std::cout << io::pretty(j);
}

struct Loaded {
  std::string digest;
  io::Parsed parsed;
};

Loaded load(const Flags& f) {
  std::string text = io::read_file(f.path);
  return {io::digest(text), io::parse_text(text, !f.no_verify)};
}

/// The algebra behind a report; with --no-verify the failing axioms travel along.
qba::QuasiBialgebra algebra(const Loaded& l) {
  qba::QuasiBialgebra A(l.parsed.data);
  if (!A.has_phi_inv()) throw AxiomError({"phi_invertible"});
  return A;
}

json with_axioms(json j, const Loaded& l, const Flags& f) {
  if (f.no_verify && !l.parsed.report.all_pass()) j["axioms"] = report::checks_to_json(l.parsed.report);
  return j;
}

int finish(const json& j, const Flags& f) {
  print(j, f);
  return j["result"].get<bool>() ? kOk : kNegative;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact computations with quasi-bialgebras and their bimodules"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--no-verify", f.no_verify, "Keep going when the algebra axioms fail");
  app.add_option("--witness-cap", f.witness_cap, "Largest dim(M)*dim(N) for witness pairs")
      ->check(CLI::Range(1, 1 << 16));

  int code = kOk;
  auto file_command = [&](const char* name, const char* help, auto body) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("path", f.path, "Algebra file")->required();
    sub->callback([&, body] { code = body(); });
  };

  file_command("verify", "Check the quasi-bialgebra axioms", [&] {
    std::string text = io::read_file(f.path);
    io::Parsed p = io::parse_text(text, false);
    return finish(report::verify_report(io::digest(text), p), f);
  });
  file_command("preantipode", "Solve for a preantipode by both methods", [&] {
    Loaded l = load(f);
    return finish(with_axioms(report::preantipode_report(l.digest, algebra(l)), l, f), f);
  });
  file_command("report", "Evaluate the equivalent characterizations", [&] {
    Loaded l = load(f);
    report::Options opt{f.witness_cap, seed_from_env()};
    return finish(with_axioms(report::main_report(l.digest, algebra(l), opt), l, f), f);
  });
  file_command("integrals", "Left and right integrals", [&] {
    Loaded l = load(f);
    return finish(with_axioms(report::integrals_report(l.digest, algebra(l)), l, f), f);
  });

  CLI::App* ex = app.add_subcommand("examples", "The built-in catalog");
  ex->require_subcommand(1);
  CLI::App* list = ex->add_subcommand("list", "List catalog entries");
  list->callback([&] {
    if (f.format == "text") {
      for (const auto& e : catalog::entries())
        std::cout << e.name << "  " << e.field.name() << "  " << e.description << "\n";
      return;
    }
    json out = json::array();
    for (const auto& e : catalog::entries()) {
      json j;
      j["name"] = e.name;
      j["family"] = e.family;
      j["field"] = e.field.name();
      j["description"] = e.description;
      out.push_back(std::move(j));
    }
    std::cout << io::pretty(out);
  });
  CLI::App* emit = ex->add_subcommand("emit", "Write a catalog entry as an algebra file");
  std::string name;
  emit->add_option("name", name, "Catalog entry")->required();
  emit->add_option("path", f.path, "Output file")->required();
  emit->callback([&] { io::write_file(f.path, io::emit(catalog::data(name))); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kError;
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qhb::InconsistentPredicates& e) {
    std::cerr << "qhb: inconsistent predicates: " << e.what() << "\n";
    return kInconsistent;
  } catch (const std::exception& e) {
    std::cerr << "qhb: " << e.what() << "\n";
    return kError;
  }
}
