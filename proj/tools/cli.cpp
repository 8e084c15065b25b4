#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "krein/io.hpp"

namespace krein::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::parse_error, "cannot open \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << "\n";
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw Error(ErrorCode::parse_error, "cannot write \"" + path + "\"");
  }
  file << text << "\n";
}

std::vector<std::size_t> cuts3(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<std::size_t> cuts;
  if (a > 0) cuts.push_back(a);
  if (b > 0) cuts.push_back(a + b);
  if (c > 0) cuts.push_back(a + b + c);
  return cuts;
}

void print_blocked(std::ostream& out, const std::string& title, const Matrix& m,
                   const BlockDims& dims) {
  const auto cuts = cuts3(dims.m, dims.m1, dims.m2);
  out << title << "\n" << to_string(m, cuts, cuts);
}

void print_report(std::ostream& out, const VerificationReport& report, bool witnesses) {
  for (const auto& check : report.checks()) {
    out << "  " << (check.pass ? "pass" : "FAIL") << "  " << check.name << "\n";
    if (!check.pass && witnesses && check.witness) {
      std::istringstream lines(to_string(*check.witness));
      std::string line;
      while (std::getline(lines, line)) out << "        " << line << "\n";
    }
  }
}

BlockDims parse_dims4(const std::string& text) {
  BlockDims dims;
  unsigned long m, m1, m2, m3;
  char sep1, sep2, sep3;
  std::istringstream in(text);
  if (!(in >> m >> sep1 >> m1 >> sep2 >> m2 >> sep3 >> m3) || sep1 != ',' || sep2 != ',' ||
      sep3 != ',' || !(in >> std::ws).eof()) {
    throw Error(ErrorCode::parse_error, "expected --dims m,m1,m2,m3, got \"" + text + "\"");
  }
  dims.m = m;
  dims.m1 = m1;
  dims.m2 = m2;
  dims.m3 = m3;
  return dims;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::not_expansive:
    case ErrorCode::not_selfadjoint:
    case ErrorCode::not_invariant:
      return exit_domain_negative;
    case ErrorCode::theorem_violation:
    case ErrorCode::internal:
      return exit_internal;
    default:
      return exit_input_error;
  }
}

struct CheckArgs {
  std::string path;
  bool json = false;
};

int cmd_check(const CheckArgs& args, std::ostream& out) {
  const PairDocument doc = parse_pair(read_input(args.path));
  const Classification c = classify(doc.to_pair());
  if (args.json) {
    out << emit_classification(c) << "\n";
  } else {
    out << "expansive:      " << (c.expansive ? "true" : "false") << "\n"
        << "unitary:        " << (c.unitary ? "true" : "false") << "\n"
        << "selfadjoint:    " << (c.selfadjoint ? "true" : "false") << "\n"
        << "defect inertia: (pos, neg, zero) = " << to_string(c.defect_inertia) << "\n";
  }
  return c.expansive ? exit_ok : exit_domain_negative;
}

struct DecomposeArgs {
  std::string path;
  std::string out_path;
  std::string transform_path;
  std::optional<std::uint64_t> complement_seed;
  bool json = false;
};

int cmd_decompose(const DecomposeArgs& args, std::ostream& out) {
  const PairDocument doc = parse_pair(read_input(args.path));
  const HPair pair = doc.to_pair();
  DecomposeOptions options;
  options.complement_seed = args.complement_seed;
  const Decomposition d = decompose(pair, options);
  const VerificationReport report = verify(pair, d.s(), d.dims());
  if (!args.out_path.empty()) {
    write_output(args.out_path, emit_decomposition(d, report), out);
  }
  if (!args.transform_path.empty()) {
    write_output(args.transform_path, emit_matrix(d.s()), out);
  }
  if (args.json) {
    if (args.out_path.empty()) out << emit_decomposition(d, report) << "\n";
  } else {
    out << "dims (m, m1, m2, m3) = " << to_string(d.dims()) << "\n\n";
    print_blocked(out, "S^{-1} A S =", d.transformed_a(), d.dims());
    out << "\n";
    print_blocked(out, "S* H S =", d.transformed_h(), d.dims());
    out << "\n";
    print_blocked(out, "S* D S =", d.transformed_d(), d.dims());
    out << "\nunitary compression: A22 =\n"
        << to_string(d.a22()) << "H22 =\n"
        << to_string(d.h22());
    out << "is unitary part: " << (d.a12().is_zero() ? "true" : "false") << "\n\n";
    out << "verification:\n";
    print_report(out, report, true);
  }
  return report.all_pass() ? exit_ok : exit_domain_negative;
}

struct VerifyArgs {
  std::string path;
  std::string transform_path;
  std::string dims_text;
  bool json = false;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
  const PairDocument doc = parse_pair(read_input(args.path));
  const Matrix s = parse_matrix(read_input(args.transform_path));
  const BlockDims dims = parse_dims4(args.dims_text);
  const VerificationReport report = verify(doc.to_pair(), s, dims);
  if (args.json) {
    out << emit_report(report) << "\n";
  } else {
    print_report(out, report, true);
    out << (report.all_pass() ? "all checks passed" : "verification FAILED") << "\n";
  }
  return report.all_pass() ? exit_ok : exit_domain_negative;
}

struct GenerateArgs {
  std::string dims_text;
  std::uint64_t seed = 0;
  std::uint32_t bound = 3;
  std::string out_path;
};

int cmd_generate(const GenerateArgs& args, std::ostream& out) {
  PlantSpec spec;
  {
    unsigned long m, m1, m3;
    char sep1, sep2;
    std::istringstream in(args.dims_text);
    if (!(in >> m >> sep1 >> m1 >> sep2 >> m3) || sep1 != ',' || sep2 != ',' ||
        !(in >> std::ws).eof()) {
      throw Error(ErrorCode::parse_error,
                  "expected --dims m,m1,m3, got \"" + args.dims_text + "\"");
    }
    spec.m = m;
    spec.m1 = m1;
    spec.m3 = m3;
  }
  spec.seed = args.seed;
  spec.entry_bound = args.bound;
  const PlantedPair planted = plant(spec);
  write_output(args.out_path, emit_planted(planted, spec), out);
  return exit_ok;
}

struct SelfadjointArgs {
  std::string path;
  std::string invariant_path;
  bool json = false;
};

int cmd_selfadjoint(const SelfadjointArgs& args, std::ostream& out) {
  const PairDocument doc = parse_pair(read_input(args.path));
  const Matrix n_basis = parse_matrix(read_input(args.invariant_path));
  const HPair pair = doc.to_pair();
  const SelfadjointDecomposition d = selfadjoint_decompose(pair, Subspace::span(n_basis));
  const VerificationReport report = selfadjoint_pattern_report(pair, d.s(), d.dims());
  if (args.json) {
    out << emit_selfadjoint(d, report) << "\n";
  } else {
    out << "dims (m, m1, m2, m3) = " << to_string(d.dims()) << "\n\n";
    print_blocked(out, "S^{-1} A S =", d.transformed_a(), d.dims());
    out << "\n";
    print_blocked(out, "S* H S =", d.transformed_h(), d.dims());
    out << "\npattern checks:\n";
    print_report(out, report, true);
  }
  return report.all_pass() ? exit_ok : exit_domain_negative;
}

struct ExamplesArgs {
  int id = 0;  // 0 = all
  bool json = false;
  std::string write_pair_path;
};

struct ExampleOutcome {
  bool ok = true;
  std::vector<std::string> mismatches;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      mismatches.push_back(what);
    }
  }
};

ExampleOutcome run_example(const ExampleRecord& rec) {
  ExampleOutcome outcome;
  const Classification c = classify(rec.pair);
  outcome.expect(c.expansive == rec.expected_expansive, "classification: expansive");
  outcome.expect(c.unitary == rec.expected_unitary, "classification: unitary");
  outcome.expect(defect(rec.pair) == rec.expected_defect, "defect matrix");

  const Subspace n = unobservable_subspace(defect(rec.pair), rec.pair.a());
  outcome.expect(n == rec.expected_n, "unobservable subspace");
  outcome.expect(neutral_core(n, rec.pair.h()) == rec.expected_m, "neutral core");

  const Decomposition d = decompose(rec.pair);
  outcome.expect(d.dims() == rec.expected_dims, "block dimensions");
  const UnitaryCompression uc = unitary_compression(d);
  outcome.expect(uc.a22 == rec.expected_a22, "compression A22");
  outcome.expect(uc.h22 == rec.expected_h22, "compression H22");
  outcome.expect(uc.is_unitary_part == rec.expected_unitary_part, "unitary part flag");
  outcome.expect(verify(rec.pair, d.s(), d.dims()).all_pass(), "own transform verifies");

  if (rec.expected_skew_link) {
    const Subspace m1 = extend_complement(rec.expected_m, n);
    outcome.expect(skew_link(rec.expected_m, m1, rec.pair.h()) == *rec.expected_skew_link,
                   "skew-link partner");
  }
  if (rec.recorded_s) {
    const VerificationReport report = verify(rec.pair, *rec.recorded_s, rec.expected_dims);
    outcome.expect(report.all_pass() == rec.recorded_s_strict,
                   "recorded transform strictness");
  }
  return outcome;
}

int cmd_examples(const ExamplesArgs& args, std::ostream& out) {
  if (!args.write_pair_path.empty()) {
    if (args.id == 0) {
      throw Error(ErrorCode::parse_error, "--write-pair needs --id");
    }
    const ExampleRecord& rec = bundled_example(args.id);
    PairDocument doc{rec.pair.a(), rec.pair.h(), rec.name, "bundled"};
    write_output(args.write_pair_path, emit_pair(doc), out);
    return exit_ok;
  }

  bool all_ok = true;
  std::ostringstream json_rows;
  for (const ExampleRecord& rec : bundled_examples()) {
    if (args.id != 0 && rec.id != args.id) continue;
    const ExampleOutcome outcome = run_example(rec);
    all_ok = all_ok && outcome.ok;
    if (args.json) {
      json_rows << (json_rows.tellp() > 0 ? ",\n" : "") << "  {\"id\": " << rec.id
                << ", \"name\": \"" << rec.name << "\", \"ok\": " << (outcome.ok ? "true" : "false")
                << "}";
    } else {
      const Decomposition d = decompose(rec.pair);
      out << (outcome.ok ? "pass" : "FAIL") << "  " << rec.name << "  dims "
          << to_string(d.dims());
      if (rec.recorded_s && !rec.recorded_s_strict) {
        out << "  (recorded transform is non-strict, as documented)";
      }
      out << "\n";
      for (const auto& miss : outcome.mismatches) out << "      mismatch: " << miss << "\n";
    }
  }
  if (args.json) out << "[\n" << json_rows.str() << "\n]\n";
  return all_ok ? exit_ok : exit_domain_negative;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact structure decompositions of expansive matrices in indefinite "
               "inner product spaces"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "classify a pair and print the defect inertia");
  check->add_option("pair", check_args.path, "pair JSON file, or - for stdin")->required();
  check->add_flag("--json", check_args.json, "machine-readable output");

  DecomposeArgs dec_args;
  auto* dec = app.add_subcommand("decompose", "compute the structure decomposition");
  dec->add_option("pair", dec_args.path, "pair JSON file, or - for stdin")->required();
  dec->add_option("--out", dec_args.out_path, "write the decomposition JSON here");
  dec->add_option("--out-transform", dec_args.transform_path, "write S as a matrix JSON here");
  dec->add_option("--randomize-complement", dec_args.complement_seed,
                  "draw the complement of M in N under this seed");
  dec->add_flag("--json", dec_args.json, "machine-readable output");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "check a transform against every identity");
  ver->add_option("pair", ver_args.path, "pair JSON file, or - for stdin")->required();
  ver->add_option("--transform", ver_args.transform_path, "matrix JSON file with S")->required();
  ver->add_option("--dims", ver_args.dims_text, "block sizes m,m1,m2,m3")->required();
  ver->add_flag("--json", ver_args.json, "machine-readable output");

  GenerateArgs gen_args;
  auto* gen = app.add_subcommand("generate", "emit a seeded pair with planted structure");
  gen->add_option("--dims", gen_args.dims_text, "block sizes m,m1,m3")->required();
  gen->add_option("--seed", gen_args.seed, "64-bit seed")->required();
  gen->add_option("--bound", gen_args.bound, "entry magnitude bound (default 3)");
  gen->add_option("--out", gen_args.out_path, "output file (default stdout)");

  SelfadjointArgs sa_args;
  auto* sa = app.add_subcommand("selfadjoint", "block form of a selfadjoint pair");
  sa->add_option("pair", sa_args.path, "pair JSON file, or - for stdin")->required();
  sa->add_option("--invariant", sa_args.invariant_path,
                 "matrix JSON whose columns span the A-invariant subspace")
      ->required();
  sa->add_flag("--json", sa_args.json, "machine-readable output");

  ExamplesArgs ex_args;
  auto* ex = app.add_subcommand("examples", "run the bundled example corpus");
  ex->add_option("--id", ex_args.id, "run a single example (1..5)");
  ex->add_flag("--json", ex_args.json, "machine-readable output");
  ex->add_option("--write-pair", ex_args.write_pair_path,
                 "write the selected example pair to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (check->parsed()) return cmd_check(check_args, out);
    if (dec->parsed()) return cmd_decompose(dec_args, out);
    if (ver->parsed()) return cmd_verify(ver_args, out);
    if (gen->parsed()) return cmd_generate(gen_args, out);
    if (sa->parsed()) return cmd_selfadjoint(sa_args, out);
    if (ex->parsed()) return cmd_examples(ex_args, out);
  } catch (const Error& e) {
    err << "error[" << code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_usage;
}

}  // namespace krein::cli
