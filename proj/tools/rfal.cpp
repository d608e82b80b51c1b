// rfal: command-line front end for the rational fuzzy attribute logic engine.
//
// Exit codes: 0 ok, 1 parse/usage error, 2 iteration cap hit (lower bound
// only / no certificate), 3 proof rejected or oracle disagreement.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include "rfal/rfal.hpp"

namespace {

enum ExitCode : int { kOk = 0, kParse = 1, kLowerBound = 2, kReject = 3 };

struct Shared {
  std::string theory_path;
  std::string algebra;
  std::size_t max_iter = 10'000;
  std::string format = "text";
  std::string output;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

rfal::Theory load_theory(const Shared& opts) {
  rfal::Theory theory;
  std::string text;
  if (!opts.theory_path.empty()) text = read_file(opts.theory_path);
  try {
    theory = rfal::parse_theory(text);
    if (!opts.algebra.empty()) {
      auto alg = rfal::algebra_from_name(opts.algebra);
      if (!alg) throw std::runtime_error("unknown algebra '" + opts.algebra + "'");
      if (*alg != theory.algebra && !opts.theory_path.empty()) {
        std::cerr << "warning: --algebra " << opts.algebra << " overrides the theory's "
                  << rfal::algebra_name(theory.algebra) << " header\n";
      }
      theory = rfal::parse_theory(text, {.algebra_override = *alg});
    }
  } catch (const rfal::ParseError& e) {
    throw rfal::ParseError(e.line(), e.column(), (opts.theory_path.empty() ? "theory" : opts.theory_path) + ": " + e.message());
  }
  if (!opts.theory_path.empty()) theory.name = opts.theory_path;
  return theory;
}

void goedel_note(const rfal::Theory& t) {
  if (!t.algebra.pavelka_complete()) {
    std::cerr << "note: the goedel algebra is not Pavelka-complete; reported degrees are provability "
                 "degrees and may fall below entailment degrees\n";
  }
}

int cmd_degree(const Shared& opts, const std::string& query_text) {
  const auto theory = load_theory(opts);
  const auto query = rfal::parse_implication(query_text);
  const auto result = rfal::provability_degree(theory.algebra, theory, query, rfal::EngineLimits(opts.max_iter));
  Output out(opts.output);
  if (opts.format == "json") {
    out.stream() << rfal::json::degree_report(result).dump() << "\n";
  } else {
    out.stream() << result.degree.to_string() << (result.lower_bound_only() ? " (lower bound)" : "") << "\n"
                 << "decimal: " << result.degree.to_decimal() << "\n"
                 << "iterations: " << result.trace.iterations() << " (" << result.trace.productive_steps()
                 << " productive), fixpoint: " << (result.trace.reached_fixpoint ? "yes" : "no") << "\n";
  }
  goedel_note(theory);
  if (result.lower_bound_only()) {
    std::cerr << "warning: iteration cap reached; the degree is only a lower bound\n";
    return kLowerBound;
  }
  return kOk;
}

int cmd_closure(const Shared& opts, const std::string& start_text, bool with_trace) {
  const auto theory = load_theory(opts);
  const auto start = rfal::parse_fuzzy_set(start_text);
  const auto trace = rfal::least_model(theory.algebra, theory, start, rfal::EngineLimits(opts.max_iter));
  Output out(opts.output);
  if (opts.format == "json" || with_trace) {
    auto j = rfal::json::to_json(trace);
    if (!with_trace) j.erase("steps");
    out.stream() << j.dump(with_trace ? 2 : -1) << "\n";
  } else {
    out.stream() << trace.result().to_string() << "\n"
                 << "iterations: " << trace.iterations() << " (" << trace.productive_steps()
                 << " productive), fixpoint: " << (trace.reached_fixpoint ? "yes" : "no") << "\n";
  }
  if (!trace.reached_fixpoint) {
    std::cerr << "warning: iteration cap reached; the result is only a lower approximation\n";
    return kLowerBound;
  }
  return kOk;
}

int cmd_prove(const Shared& opts, const std::string& query_text) {
  const auto theory = load_theory(opts);
  const auto query = rfal::parse_implication(query_text);
  const auto result = rfal::provability_degree(theory.algebra, theory, query, rfal::EngineLimits(opts.max_iter));
  if (result.lower_bound_only()) {
    std::cerr << "error: iteration cap reached before a fixpoint; refusing to issue a certificate\n";
    return kLowerBound;
  }
  const auto proof = rfal::synthesize_proof(theory.algebra, theory, query, result.trace);
  Output out(opts.output);
  out.stream() << rfal::json::to_json(proof).dump(2) << "\n";
  std::cerr << "proved " << proof.conclusion.to_string() << " (degree " << result.degree.to_string() << ", "
            << proof.steps.size() << " steps)\n";
  return kOk;
}

int cmd_check_proof(const Shared& opts, const std::string& proof_path) {
  const auto theory = load_theory(opts);
  rfal::Proof proof;
  try {
    proof = rfal::json::proof_from_json(nlohmann::json::parse(read_file(proof_path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw rfal::json::FormatError(proof_path + ": " + e.what());
  }
  const auto verdict = rfal::check_proof(theory.algebra, theory, proof);
  Output out(opts.output);
  if (opts.format == "json") {
    nlohmann::json j = {{"verdict", verdict.accepted() ? "ACCEPT" : "REJECT"}, {"reason", rfal::reason_code(verdict.reason)}};
    if (verdict.step) j["step"] = *verdict.step;
    if (!verdict.detail.empty()) j["detail"] = verdict.detail;
    out.stream() << j.dump() << "\n";
  } else if (verdict.accepted()) {
    out.stream() << "ACCEPT " << proof.conclusion.to_string() << "\n";
  } else {
    out.stream() << "REJECT " << rfal::reason_code(verdict.reason);
    if (verdict.step) out.stream() << " at step " << *verdict.step;
    out.stream() << ": " << verdict.detail << "\n";
  }
  return verdict.accepted() ? kOk : kReject;
}

std::uint64_t default_grid(const rfal::Theory& t, const rfal::Implication& q) {
  unsigned long k = 1;
  auto visit = [&](const rfal::FuzzySet& s) {
    for (const auto& e : s) {
      mpz_class den = e.second.denominator();
      if (!den.fits_ulong_p()) throw std::runtime_error("degree denominator too large for a grid");
      k = std::lcm(k, den.get_ui());
    }
  };
  for (const auto& r : t.rules) {
    visit(r.antecedent);
    visit(r.consequent);
  }
  visit(q.antecedent);
  visit(q.consequent);
  return k;
}

int cmd_oracle(const Shared& opts, const std::string& query_text, std::uint64_t grid_k, std::size_t samples,
               std::uint64_t seed, double budget, bool fast) {
  const auto theory = load_theory(opts);
  const auto query = rfal::parse_implication(query_text);
  const rfal::EngineLimits limits(opts.max_iter);
  const auto engine = rfal::provability_degree(theory.algebra, theory, query, limits);
  Output out(opts.output);
  nlohmann::json report = {{"algebra", rfal::algebra_name(theory.algebra)},
                           {"engine", rfal::json::degree_report(engine)}};
  bool agree = true;

  if (theory.algebra == rfal::Algebra::lukasiewicz()) {
    rfal::GridSpec spec;
    spec.denominator = grid_k ? grid_k : default_grid(theory, query);
    spec.variables = rfal::universe_of(theory, rfal::set_union(query.antecedent, query.consequent));
    rfal::GridOptions go;
    go.budget = budget;
    if (fast) go.floor_hint = engine.degree;
    const auto semantic = rfal::semantic_degree_grid(theory, query, spec, go);
    agree = semantic == engine.degree;
    report["grid_k"] = spec.denominator;
    report["semantic_degree"] = rfal::json::to_json(semantic);
    report["fast"] = fast;
  }

  // Soundness sampling: every model containing A satisfies the query to at
  // least the engine degree; the least model attains it.
  const auto sample = rfal::sample_models(theory.algebra, theory, query.antecedent, samples, seed, limits);
  std::size_t violations = 0;
  for (const auto& e : sample.models) {
    if (rfal::truth_degree(theory.algebra, query, e) < engine.degree) ++violations;
  }
  const bool tight = !engine.lower_bound_only() &&
                     rfal::truth_degree(theory.algebra, query, engine.trace.result()) == engine.degree;
  agree = agree && violations == 0 && (engine.lower_bound_only() || tight);
  report["samples"] = sample.models.size();
  report["skipped"] = sample.skipped;
  report["violations"] = violations;
  report["witness_tight"] = tight;
  report["agree"] = agree;

  if (opts.format == "json") {
    out.stream() << report.dump() << "\n";
  } else {
    out.stream() << "engine degree:   " << engine.degree.to_string() << (engine.lower_bound_only() ? " (lower bound)" : "")
                 << "\n";
    if (report.contains("semantic_degree")) {
      out.stream() << "semantic degree: " << rfal::json::rational_from_json(report["semantic_degree"]).to_string()
                   << " (grid 1/" << report["grid_k"].get<std::uint64_t>() << ")\n";
    }
    out.stream() << "sampled models:  " << sample.models.size() << " (" << sample.skipped << " skipped), "
                 << violations << " soundness violations\n"
                 << "witness tight:   " << (tight ? "yes" : "no") << "\n"
                 << (agree ? "AGREE" : "DISAGREE") << "\n";
  }
  if (engine.lower_bound_only()) return kLowerBound;
  return agree ? kOk : kReject;
}

int cmd_demo_goedel(const Shared& opts, std::uint64_t k_max) {
  const auto rows = rfal::goedel_gap_rows(k_max, rfal::EngineLimits(opts.max_iter));
  Output out(opts.output);
  if (opts.format == "json") {
    nlohmann::json j = {{"caption", rfal::goedel_gap_caption}, {"rows", nlohmann::json::array()}};
    for (const auto& r : rows) j["rows"].push_back({{"k", r.k}, {"degree", rfal::json::to_json(r.degree)}});
    out.stream() << j.dump() << "\n";
  } else {
    out.stream() << rfal::goedel_gap_caption << "\n\n";
    out.stream() << "k\tdegree\tdecimal\n";
    for (const auto& r : rows) out.stream() << r.k << "\t" << r.degree.to_string() << "\t" << r.degree.to_decimal() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact inference for rational fuzzy attribute logic"};
  app.require_subcommand(1);
  Shared opts;
  app.add_option("--theory", opts.theory_path, "Theory file");
  app.add_option("--algebra", opts.algebra, "Override the theory's algebra")
      ->check(CLI::IsMember({"lukasiewicz", "product", "goedel"}));
  app.add_option("--max-iter", opts.max_iter, "Iteration cap for least-model computation")
      ->envname("RFAL_MAX_ITER")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", opts.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--output", opts.output, "Write output to FILE instead of stdout");

  std::string query, start = "{}", proof_path;
  bool with_trace = false, fast = false;
  std::uint64_t grid_k = 0, seed = 1, k_max = 50;
  std::size_t samples = 1000;
  double budget = 1e8;

  auto* degree = app.add_subcommand("degree", "Provability degree of a query A => B");
  degree->add_option("query", query, "Query, e.g. \"{p:1} => {r:1}\"")->required();

  auto* closure = app.add_subcommand("closure", "Least model of the theory containing an evaluation");
  closure->add_option("--start", start, "Starting evaluation, e.g. \"{p:1}\"");
  closure->add_flag("--trace", with_trace, "Export the full step-by-step trace as JSON");

  auto* prove = app.add_subcommand("prove", "Emit a proof certificate for A => c⊗B");
  prove->add_option("query", query)->required();

  auto* check = app.add_subcommand("check-proof", "Check a proof certificate");
  check->add_option("--proof", proof_path, "Proof JSON file")->required();

  auto* oracle = app.add_subcommand("oracle", "Cross-check the engine against semantic ground truth");
  oracle->add_option("query", query)->required();
  oracle->add_option("--grid-k", grid_k, "Grid denominator (default: lcm of input denominators)");
  oracle->add_option("--samples", samples, "Number of sampled models");
  oracle->add_option("--seed", seed, "Sampling seed");
  oracle->add_option("--budget", budget, "Maximum number of grid evaluations");
  oracle->add_flag("--fast", fast, "Stop grid enumeration once the engine degree is reached");

  auto* demo = app.add_subcommand("demo-goedel", "Provability gap over the Goedel algebra");
  demo->add_option("--k-max", k_max, "Largest truncation index")->check(CLI::Range(2, 100000));

  for (auto* sub : {degree, closure, prove, check, oracle, demo}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kParse;
  }

  try {
    if (*degree) return cmd_degree(opts, query);
    if (*closure) return cmd_closure(opts, start, with_trace);
    if (*prove) return cmd_prove(opts, query);
    if (*check) return cmd_check_proof(opts, proof_path);
    if (*oracle) return cmd_oracle(opts, query, grid_k, samples, seed, budget, fast);
    if (*demo) return cmd_demo_goedel(opts, k_max);
  } catch (const rfal::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kOk;
}
