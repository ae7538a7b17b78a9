#include "apcover/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "apcover/covering_sequence.hpp"
#include "apcover/density.hpp"
#include "apcover/integer_sequence.hpp"
#include "apcover/oracle.hpp"
#include "apcover/stanley.hpp"
#include "apcover/witness.hpp"

namespace apcover {

namespace {

std::vector<Natural> parse_list(const std::string& text) {
  std::vector<Natural> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_natural(item));
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of naturals");
  return out;
}

std::string join(const std::vector<Natural>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += to_decimal(xs[i]);
  }
  return s;
}

std::string describe(const TElement& e) {
  std::string s = "l=" + std::to_string(e.level) + " u=" + std::to_string(e.u) + " v=[";
  for (std::size_t i = 0; i < e.v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e.v[i]);
  }
  return s + "]";
}

// Per-subcommand state; the CLI11 callbacks fill these, dispatch reads them.
struct Options {
  std::string value;
  std::string from;
  std::string to;
  unsigned jobs = 1;
  std::string upto;
  unsigned order = 3;
  std::string seed;
  std::size_t count = 0;
  std::size_t max_level = 0;
  bool csv = false;
  bool jsonl = false;
  std::string out_file;
};

int cmd_member(const Options& o, std::ostream& out) {
  const Natural n = parse_natural(o.value);
  if (auto e = decompose(n)) {
    out << to_decimal(n) << " in A: " << describe(*e) << '\n';
  } else {
    out << to_decimal(n) << " not in A\n";
  }
  return exit_code::kOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const Natural n = parse_natural(o.value);
  out << "A(" << to_decimal(n) << ") = " << to_decimal(count_leq(n)) << '\n';
  return exit_code::kOk;
}

int cmd_nth(const Options& o, std::ostream& out) {
  const Rank j(parse_natural(o.value));
  out << "n_" << to_decimal(j.value()) << " = " << to_decimal(element_at(j)) << '\n';
  return exit_code::kOk;
}

int cmd_witness(const Options& o, std::ostream& out) {
  const Witness w = find_witness(parse_natural(o.value));
  const bool ok = validate(w);
  out << "a=" << to_decimal(w.a) << " b=" << to_decimal(w.b) << " n=" << to_decimal(w.n)
      << (ok ? " ok" : " FAILED") << '\n';
  return ok ? exit_code::kOk : exit_code::kCounterexample;
}

int cmd_verify_covering(const Options& o, std::ostream& out) {
  const Natural from = parse_natural(o.from);
  const Natural to = parse_natural(o.to);
  const SweepSummary s = verify_covering(from, to, o.jobs);
  out << "verify-covering [" << to_decimal(from) << ", " << to_decimal(to)
      << "]: checked " << to_decimal(s.checked) << ", " << to_decimal(s.failures) << " failures\n";
  if (s.first_failure) {
    out << "first failure: n=" << to_decimal(*s.first_failure) << '\n';
    return exit_code::kCounterexample;
  }
  return exit_code::kOk;
}

int cmd_min_n0(const Options& o, std::ostream& out) {
  const Natural upto = parse_natural(o.upto);
  const auto t = min_threshold(CoveringSequence{}, 3, upto);
  if (t) {
    out << "largest n <= " << to_decimal(upto) << " not AP_3-covered by A: " << to_decimal(*t)
        << '\n';
  } else {
    out << "every n <= " << to_decimal(upto) << " is AP_3-covered by A\n";
  }
  return exit_code::kOk;
}

int cmd_stanley(const Options& o, std::ostream& out) {
  const StanleySeed seed(parse_list(o.seed), o.order);
  out << join(generate(seed, o.count)) << '\n';
  return exit_code::kOk;
}

int cmd_density(const Options& o, std::ostream& out) {
  const DensityProfile prof = profile(o.max_level);
  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_file.empty()) {
    file.open(o.out_file, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file " + o.out_file);
    sink = &file;
  }
  if (o.jsonl) {
    write_jsonl(*sink, prof.samples);
  } else {
    write_csv(*sink, prof.samples);
  }
  return exit_code::kOk;
}

int cmd_argmax(const Options& o, std::ostream& out) {
  const Natural n = argmax_upto(parse_natural(o.upto));
  const DensitySample s = sample_at(n);
  out << "argmax n=" << to_decimal(s.n) << " A(n)=" << to_decimal(s.count)
      << " ratio=" << std::setprecision(12) << s.ratio << '\n';
  return exit_code::kOk;
}

int cmd_explore(const Options& o, std::ostream& out) {
  const Problem1Report r = explore_problem1(o.order, parse_list(o.seed), parse_natural(o.upto));
  out << "Stanley sequence of order " << r.k + 1 << " from {" << join(r.seed) << "}: "
      << r.stanley_terms.size() << " terms <= " << to_decimal(r.upto) << '\n';
  out << "not AP_" << r.k << "-covered: " << r.uncovered.size() << '\n';
  if (!r.uncovered.empty()) out << join(r.uncovered) << '\n';
  return exit_code::kOk;
}

}  // namespace

Problem1Report explore_problem1(unsigned k, std::vector<Natural> seed, const Natural& upto) {
  if (k < 3) throw std::invalid_argument("covering order k must be >= 3");
  const StanleySeed stanley_seed(std::move(seed), k + 1);

  Problem1Report r;
  r.k = k;
  r.seed = stanley_seed.terms();
  r.upto = upto;
  r.stanley_terms = generate_upto(stanley_seed, upto);

  const FiniteSequence seq(r.stanley_terms);
  for (Natural n = 0; n <= upto; ++n) {
    if (!covers(seq, n, k)) r.uncovered.push_back(n);
  }
  return r;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explore the AP_3-covering sequence A = union of T_l", "apcover"};
  app.require_subcommand(1);
  Options o;

  auto* member = app.add_subcommand("member", "Decompose n if it is in A");
  member->add_option("n", o.value)->required();

  auto* count = app.add_subcommand("count", "A(n), the number of elements <= n");
  count->add_option("n", o.value)->required();

  auto* nth = app.add_subcommand("nth", "The j-th smallest element of A");
  nth->add_option("j", o.value)->required();

  auto* witness = app.add_subcommand("witness", "Constructive 3-AP witness for n >= 32");
  witness->add_option("n", o.value)->required();

  auto* verify = app.add_subcommand("verify-covering", "Validate witnesses over a range");
  verify->add_option("--from", o.from)->required();
  verify->add_option("--to", o.to)->required();
  verify->add_option("--jobs", o.jobs)->check(CLI::PositiveNumber);

  auto* min_n0 = app.add_subcommand("min-n0", "Largest n <= bound not AP_3-covered by A");
  min_n0->add_option("--upto", o.upto)->required();

  auto* stanley = app.add_subcommand("stanley", "Greedy Stanley sequence");
  stanley->add_option("--order", o.order)->required();
  stanley->add_option("--seed", o.seed)->required();
  stanley->add_option("--count", o.count)->required();

  auto* density = app.add_subcommand("density", "A(n)/sqrt(n) at the points q_{u,l}");
  density->add_option("--max-level", o.max_level)->required();
  auto* csv = density->add_flag("--csv", o.csv, "CSV output (default)");
  auto* jsonl = density->add_flag("--jsonl", o.jsonl, "JSON-lines output");
  csv->excludes(jsonl);
  density->add_option("--out", o.out_file, "Write to FILE instead of stdout");

  auto* argmax = app.add_subcommand("argmax", "The n <= bound maximising A(n)/sqrt(n)");
  argmax->add_option("--upto", o.upto)->required();

  auto* explore = app.add_subcommand(
      "explore-problem1", "Uncovered n for the Stanley sequence of order k+1 (empirical)");
  explore->add_option("--order", o.order, "Covering order k")->required();
  explore->add_option("--seed", o.seed)->required();
  explore->add_option("--upto", o.upto)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (member->parsed()) return cmd_member(o, out);
    if (count->parsed()) return cmd_count(o, out);
    if (nth->parsed()) return cmd_nth(o, out);
    if (witness->parsed()) return cmd_witness(o, out);
    if (verify->parsed()) return cmd_verify_covering(o, out);
    if (min_n0->parsed()) return cmd_min_n0(o, out);
    if (stanley->parsed()) return cmd_stanley(o, out);
    if (density->parsed()) return cmd_density(o, out);
    if (argmax->parsed()) return cmd_argmax(o, out);
    if (explore->parsed()) return cmd_explore(o, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace apcover
