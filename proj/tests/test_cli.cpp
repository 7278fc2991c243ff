#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "qhb/catalog.hpp"
#include "qhb/errors.hpp"
#include "qhb/io.hpp"
#include "qhb/report.hpp"

using namespace qhb;
using io::json;
using la::FieldSpec;

namespace {

namespace fs = std::filesystem;

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("qhb_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string write_tmp(const std::string& name, const std::string& text) {
  fs::path p = scratch() / name;
  io::write_file(p.string(), text);
  return p.string();
}

struct Run {
  int code = -1;
  std::string out, err;
};

Run run(const std::string& args, const std::string& env = "") {
  fs::path err = scratch() / "stderr.txt";
  std::string cmd = env + " \"" QHB_CLI_PATH "\" " + args + " 2>\"" + err.string() + "\"";
  Run r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = ::pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.err = io::read_file(err.string());
  return r;
}

bool same(const qba::AlgebraData& a, const qba::AlgebraData& b) {
  return a.field == b.field && a.n == b.n && a.labels == b.labels && a.mult == b.mult &&
         a.unit == b.unit && a.comul == b.comul && a.counit == b.counit && a.phi == b.phi &&
         a.phi_inv == b.phi_inv;
}

}  // namespace

TEST_CASE("emit then parse is the identity on the catalog") {
  for (const auto& name : catalog::names()) {
    CAPTURE(name);
    qba::AlgebraData d = catalog::data(name);
    std::string text = io::emit(d);
    io::Parsed p = io::parse_text(text);
    CHECK(p.report.all_pass());
    CHECK(same(p.data, d));
    CHECK(io::emit(p.data) == text);
    // phi_inv travels along when present
    qba::QuasiBialgebra A(d);
    qba::AlgebraData full = A.data();
    CHECK(same(io::parse_text(io::emit(full)).data, full));
  }
}

TEST_CASE("phi_inv is solved when the file omits it") {
  qba::AlgebraData d = catalog::data("kz2_twisted");
  d.phi_inv.reset();
  std::string path = write_tmp("no_phi_inv.json", io::emit(d));
  CHECK(io::read_file(path).find("phi_inv") == std::string::npos);
  qba::QuasiBialgebra A = io::parse(path);
  REQUIRE(A.has_phi_inv());
  CHECK(A.mul_k(A.phi(), A.phi_inv(), 3) == A.one_k(3));
  CHECK(A.n() == 2);
  CHECK(A.labels() == std::vector<std::string>{"1", "g"});
}

TEST_CASE("scalar strings and fields") {
  json j = io::to_json(catalog::data("kz2_group"));
  j["field"] = {{"Fp", 3}};
  j["phi"][0] = "4/2";  // 2 in F3, makes phi non-trivial but keeps shapes
  qba::AlgebraData d = io::from_json(j);
  CHECK(d.field == FieldSpec::prime(3));
  CHECK(d.phi[0].str() == "2");
  j["phi"][0] = 1;
  CHECK(io::from_json(j).phi[0].is_one());

  json bad = io::to_json(catalog::data("kz2_group"));
  bad["field"] = "R";
  CHECK_THROWS_AS(io::from_json(bad), UnsupportedField);
  bad["field"] = {{"Fp", 4}};
  CHECK_THROWS_AS(io::from_json(bad), UnsupportedField);
  bad["field"] = 7;
  CHECK_THROWS_AS(io::from_json(bad), ParseError);

  json shape = io::to_json(catalog::data("kz2_group"));
  shape["mult"][1].erase(0);
  CHECK_THROWS_AS(io::from_json(shape), ParseError);
  json scalar = io::to_json(catalog::data("kz2_group"));
  scalar["unit"][0] = "one";
  CHECK_THROWS_AS(io::from_json(scalar), ParseError);
  json missing = io::to_json(catalog::data("kz2_group"));
  missing.erase("comul");
  CHECK_THROWS_AS(io::from_json(missing), ParseError);
  CHECK_THROWS_AS(io::parse_text("{\"field\": \"Q\", "), ParseError);
  CHECK_THROWS_AS(io::parse("/nonexistent/algebra.json"), ParseError);
}

TEST_CASE("non-associative multiplication raises AxiomError") {
  // g * 1 = 2g breaks (g 1) 1 = g (1 1)
  qba::AlgebraData d = catalog::corrupt_mult(catalog::data("kz2_group"), 5);
  std::string text = io::emit(d);
  try {
    io::parse_text(text);
    FAIL("expected AxiomError");
  } catch (const AxiomError& e) {
    auto f = e.failed();
    CHECK(std::find(f.begin(), f.end(), "associativity") != f.end());
  }
  io::Parsed raw = io::parse_text(text, false);
  CHECK_FALSE(raw.report.passed("associativity"));
  CHECK(same(raw.data, d));
}

TEST_CASE("FNV-1a digest") {
  // published 64-bit test vectors
  CHECK(io::digest("") == "cbf29ce484222325");
  CHECK(io::digest("a") == "af63dc4c8601ec8c");
  CHECK(io::digest("foobar") == "85944171f73967e8");
}

TEST_CASE("report on kz2_twisted: all predicates true and S swaps 1 and g") {
  std::string path = write_tmp("kz2_twisted.json", io::emit(catalog::data("kz2_twisted")));
  Run r = run("report " + path);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["result"] == true);
  CHECK(j["input_digest"] == "fnv1a64:" + io::digest(io::read_file(path)));
  CHECK(j["predicates"].size() >= 10);
  for (const auto& p : j["predicates"]) {
    CAPTURE(p["name"]);
    CHECK(p["value"] == true);
  }
  CHECK(j["found"]["S"] == json::parse(R"([["0","1"],["1","0"]])"));
  CHECK(j["found"]["sigma_inverse_samples"].size() == 5);
  for (const auto& c : j["checks"]) {
    CAPTURE(c["name"]);
    std::string s = c["status"];
    CHECK((s == "pass" || s.rfind("skipped(", 0) == 0));
  }
}

TEST_CASE("report on idempotent_monoid: all predicates false, exit 1") {
  std::string path = write_tmp("idem.json", io::emit(catalog::data("idempotent_monoid")));
  Run r = run("report " + path);
  CHECK(r.code == 1);
  json j = json::parse(r.out);
  CHECK(j["result"] == false);
  for (const auto& p : j["predicates"]) {
    CAPTURE(p["name"]);
    CHECK(p["value"] == false);
  }
  CHECK_FALSE(j.contains("found"));
  bool skipped = false;
  for (const auto& c : j["checks"]) {
    CAPTURE(c["name"]);
    CHECK(c["status"] != "fail");
    skipped = skipped || c["status"] == "skipped(no preantipode)";
  }
  CHECK(skipped);
}

TEST_CASE("examples emit sweedler4 then report: all true") {
  std::string path = (scratch() / "sweedler4.json").string();
  Run e = run("examples emit sweedler4 " + path);
  REQUIRE(e.code == 0);
  Run r = run("report " + path);
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  for (const auto& p : j["predicates"]) {
    CAPTURE(p["name"]);
    CHECK(p["value"] == true);
  }
}

TEST_CASE("reports are byte-identical across runs") {
  std::string path = write_tmp("det.json", io::emit(catalog::data("kz2_twisted")));
  for (const char* flags : {"", "--format text "}) {
    Run a = run(std::string("report ") + flags + path), b = run(std::string("report ") + flags + path);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
  Run s1 = run("report " + path, "QHB_SEED=5"), s2 = run("report " + path, "QHB_SEED=5");
  CHECK(s1.out == s2.out);
  CHECK(json::parse(s1.out)["seed"] == 5);
  CHECK(run("report " + path, "QHB_SEED=abc").code == 2);
}

TEST_CASE("other commands and exit codes") {
  std::string good = write_tmp("kz2_group.json", io::emit(catalog::data("kz2_group")));
  std::string idem = write_tmp("idem2.json", io::emit(catalog::data("idempotent_monoid")));
  std::string sw = write_tmp("sw.json", io::emit(catalog::data("sweedler4")));
  std::string bad = write_tmp("bad.json", io::emit(catalog::corrupt_mult(catalog::data("kz2_group"), 5)));

  Run v = run("verify " + good);
  CHECK(v.code == 0);
  CHECK(json::parse(v.out)["result"] == true);
  Run vb = run("verify " + bad);
  CHECK(vb.code == 1);
  bool assoc_failed = false;
  json vbj = json::parse(vb.out);
  for (const auto& c : vbj["checks"])
    assoc_failed = assoc_failed || (c["name"] == "associativity" && c["status"] == "fail");
  CHECK(assoc_failed);

  Run rb = run("report " + bad);
  CHECK(rb.code == 2);
  CHECK(rb.err.find("associativity") != std::string::npos);
  Run nv = run("integrals --no-verify " + bad);
  CHECK(nv.code == 0);
  CHECK(json::parse(nv.out).contains("axioms"));

  Run p = run("preantipode " + good);
  CHECK(p.code == 0);
  json pj = json::parse(p.out);
  CHECK(pj["extraction"]["status"] == "found");
  CHECK(pj["linear_solve"]["particular"] == json::parse(R"([["1","0"],["0","1"]])"));
  Run pi = run("preantipode " + idem);
  CHECK(pi.code == 1);
  CHECK(json::parse(pi.out)["extraction"]["status"] == "partial");
  CHECK(json::parse(pi.out)["linear_solve"]["exists"] == false);

  Run in = run("integrals " + sw);
  CHECK(in.code == 0);
  json ij = json::parse(in.out);
  CHECK(ij["left_dim"] == 1);
  CHECK(ij["right_dim"] == 1);
  CHECK(ij["unimodular"] == false);
  Run ig = run("integrals --format text " + good);
  CHECK(ig.out.find("unimodular: true") != std::string::npos);

  Run list = run("examples list");
  CHECK(list.code == 0);
  CHECK(json::parse(list.out).size() == catalog::names().size());
  CHECK(run("examples emit no_such_algebra " + (scratch() / "x.json").string()).code == 2);
  CHECK(run("report /nonexistent/file.json").code == 2);
  CHECK(run("report --format yaml " + good).code == 2);
  CHECK(run("").code == 2);

  Run capped = run("report --witness-cap 64 " + good);
  CHECK(capped.code == 0);
  CHECK(json::parse(capped.out)["witness_cap"] == 64);
}
