#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "krein/io.hpp"

using namespace krein;

TEST_SUITE_BEGIN("cli");

namespace {

struct RunResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"krein"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  RunResult result;
  result.exit_code = cli::run_command(static_cast<int>(argv.size()), argv.data(), out, err);
  result.out = out.str();
  result.err = err.str();
  return result;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& contents = "") {
    path = std::string("/tmp/krein_cli_test_") + name;
    if (!contents.empty()) {
      std::ofstream f(path, std::ios::binary);
      f << contents;
    }
  }
  ~TempFile() { std::remove(path.c_str()); }
  std::string read() const {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << f.rdbuf();
    return buffer.str();
  }
};

std::string pair_text(int id) {
  const ExampleRecord& rec = bundled_example(id);
  return emit_pair(PairDocument{rec.pair.a(), rec.pair.h(), rec.name, ""});
}

}  // namespace

TEST_CASE("usage errors exit with 64") {
  CHECK(run({"frobnicate"}).exit_code == cli::exit_usage);
  CHECK(run({"check"}).exit_code == cli::exit_usage);
  CHECK(run({"check", "x.json", "--bogus"}).exit_code == cli::exit_usage);
  CHECK(run({}).exit_code == cli::exit_usage);
  CHECK(run({"--help"}).exit_code == cli::exit_ok);
}

TEST_CASE("check classifies the bundled pairs") {
  TempFile ex3("ex3.json", pair_text(3));
  const RunResult unitary = run({"check", ex3.path});
  CHECK(unitary.exit_code == cli::exit_ok);
  CHECK(unitary.out.find("unitary:        true") != std::string::npos);
  CHECK(unitary.out.find("expansive:      true") != std::string::npos);

  TempFile ex1("ex1.json", pair_text(1));
  const RunResult expansive = run({"check", ex1.path, "--json"});
  CHECK(expansive.exit_code == cli::exit_ok);
  CHECK(expansive.out.find("\"unitary\": false") != std::string::npos);
}

TEST_CASE("check reports non-expansive pairs with exit 2") {
  const std::string contraction = R"({
    "A": {"rows": 2, "cols": 2, "entries": [["1/2", "0"], ["0", "1/2"]]},
    "H": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}
  })";
  TempFile f("contraction.json", contraction);
  const RunResult result = run({"check", f.path});
  CHECK(result.exit_code == cli::exit_domain_negative);
  CHECK(result.out.find("(0, 2, 0)") != std::string::npos);
}

TEST_CASE("check surfaces input errors with exit 1") {
  TempFile bad("bad.json", "{");
  CHECK(run({"check", bad.path}).exit_code == cli::exit_input_error);
  CHECK(run({"check", "/nonexistent/pair.json"}).exit_code == cli::exit_input_error);

  const std::string singular_h = R"({
    "A": {"rows": 1, "cols": 1, "entries": [["1"]]},
    "H": {"rows": 1, "cols": 1, "entries": [["0"]]}
  })";
  TempFile sing("singular.json", singular_h);
  const RunResult result = run({"check", sing.path});
  CHECK(result.exit_code == cli::exit_input_error);
  CHECK(result.err.find("singular-inner-product") != std::string::npos);
}

TEST_CASE("decompose emits a verified decomposition") {
  TempFile ex1("dec1.json", pair_text(1));
  TempFile out("dec1_out.json");
  TempFile s_out("dec1_s.json");
  const RunResult result =
      run({"decompose", ex1.path, "--out", out.path, "--out-transform", s_out.path});
  CHECK(result.exit_code == cli::exit_ok);
  CHECK(result.out.find("dims (m, m1, m2, m3) = (2, 1, 2, 0)") != std::string::npos);
  CHECK(out.read().find("\"all_pass\": true") != std::string::npos);

  // the emitted transform verifies through the verify subcommand
  const RunResult verified =
      run({"verify", ex1.path, "--transform", s_out.path, "--dims", "2,1,2,0"});
  CHECK(verified.exit_code == cli::exit_ok);
}

TEST_CASE("decompose on a non-expansive pair exits 2") {
  const std::string contraction = R"({
    "A": {"rows": 1, "cols": 1, "entries": [["1/2"]]},
    "H": {"rows": 1, "cols": 1, "entries": [["1"]]}
  })";
  TempFile f("c2.json", contraction);
  const RunResult result = run({"decompose", f.path});
  CHECK(result.exit_code == cli::exit_domain_negative);
  CHECK(result.err.find("not-expansive") != std::string::npos);
}

TEST_CASE("verify accepts the recorded strict transform and rejects a wrong dims split") {
  TempFile ex2("ver2.json", pair_text(2));
  const ExampleRecord& rec = bundled_example(2);
  TempFile s("ver2_s.json", emit_matrix(*rec.recorded_s));
  CHECK(run({"verify", ex2.path, "--transform", s.path, "--dims", "1,3,1,0"}).exit_code ==
        cli::exit_ok);
  CHECK(run({"verify", ex2.path, "--transform", s.path, "--dims", "1,2,1,1"}).exit_code ==
        cli::exit_domain_negative);
  CHECK(run({"verify", ex2.path, "--transform", s.path, "--dims", "nonsense"}).exit_code ==
        cli::exit_input_error);
}

TEST_CASE("verify flags example 1's recorded transform") {
  TempFile ex1("ver1.json", pair_text(1));
  const ExampleRecord& rec = bundled_example(1);
  TempFile s("ver1_s.json", emit_matrix(*rec.recorded_s));
  const RunResult result =
      run({"verify", ex1.path, "--transform", s.path, "--dims", "2,1,2,0", "--json"});
  CHECK(result.exit_code == cli::exit_domain_negative);
  CHECK(result.out.find("\"all_pass\": false") != std::string::npos);
}

TEST_CASE("generate is deterministic and feeds decompose") {
  TempFile a("gen_a.json");
  TempFile b("gen_b.json");
  CHECK(run({"generate", "--dims", "1,1,1", "--seed", "7", "--out", a.path}).exit_code ==
        cli::exit_ok);
  CHECK(run({"generate", "--dims", "1,1,1", "--seed", "7", "--out", b.path}).exit_code ==
        cli::exit_ok);
  CHECK(a.read() == b.read());
  CHECK(run({"decompose", a.path}).exit_code == cli::exit_ok);
}

TEST_CASE("selfadjoint subcommand") {
  const std::string pair_json = R"({
    "A": {"rows": 2, "cols": 2, "entries": [["0", "1"], ["0", "0"]]},
    "H": {"rows": 2, "cols": 2, "entries": [["0", "1"], ["1", "0"]]}
  })";
  const std::string n_json = R"({"rows": 2, "cols": 1, "entries": [["1"], ["0"]]})";
  TempFile p("sa_pair.json", pair_json);
  TempFile n("sa_n.json", n_json);
  const RunResult result = run({"selfadjoint", p.path, "--invariant", n.path});
  CHECK(result.exit_code == cli::exit_ok);
  CHECK(result.out.find("dims (m, m1, m2, m3) = (1, 0, 1, 0)") != std::string::npos);

  // a non-invariant subspace is a domain error
  const std::string bad_n = R"({"rows": 2, "cols": 1, "entries": [["0"], ["1"]]})";
  TempFile nb("sa_nb.json", bad_n);
  CHECK(run({"selfadjoint", p.path, "--invariant", nb.path}).exit_code ==
        cli::exit_domain_negative);
}

TEST_CASE("examples command runs the corpus") {
  const RunResult all = run({"examples"});
  CHECK(all.exit_code == cli::exit_ok);
  CHECK(all.out.find("example-1") != std::string::npos);
  CHECK(all.out.find("example-5") != std::string::npos);
  CHECK(all.out.find("FAIL") == std::string::npos);

  const RunResult one = run({"examples", "--id", "1"});
  CHECK(one.exit_code == cli::exit_ok);
  CHECK(one.out.find("dims (2, 1, 2, 0)") != std::string::npos);

  const RunResult json = run({"examples", "--json"});
  CHECK(json.exit_code == cli::exit_ok);
  CHECK(json.out.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("examples --write-pair exports a loadable document") {
  TempFile out("ex_written.json");
  CHECK(run({"examples", "--id", "2", "--write-pair", out.path}).exit_code == cli::exit_ok);
  const PairDocument doc = parse_pair(out.read());
  CHECK(doc.a == bundled_example(2).pair.a());
  CHECK(run({"check", out.path}).exit_code == cli::exit_ok);
}

TEST_SUITE_END();
