#include "sumgap/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>

#include "CLI11.hpp"
#include "sumgap/errors.hpp"
#include "sumgap/io.hpp"

namespace sumgap::cli {

namespace {

using io::Json;

struct Options {
  std::string input;
  std::string input2;
  std::string format = "json";
  std::string out;
  double tol = 1e-9;
  bool strict = false;
  std::optional<std::size_t> k;
  int t = 3;
  std::optional<std::uint64_t> seed;
  bool constructive = false;
  bool exhaustive = false;
  std::int64_t p = 0;
  std::size_t k_min = 1;
  std::size_t k_max = 0;
  std::size_t trials = 100;
  double strong_gap = 0.5;
  std::string family;
  double density = 0.5;
  std::int64_t start = 0;
  std::int64_t step = 1;
  std::int64_t length = 1;
};

// A finished command: the document to emit and the exit status it implies.
struct Outcome {
  std::string document;
  int code = kSuccess;
};

void add_globals(CLI::App* cmd, Options& o) {
  cmd->add_option("--tol", o.tol, "Relative positivity tolerance (threshold tol * p)")->capture_default_str();
  cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  cmd->add_option("--out", o.out, "Write the report to this file instead of stdout");
  cmd->add_flag("--strict", o.strict, "Exit 3 when the input is outside the theorem hypotheses");
}

std::string emit(const Json& doc, const std::string& format, const Json& csv_rows) {
  return format == "csv" ? io::json_to_csv(csv_rows) : io::dump(doc);
}

Json header(const std::string& command, const Options& o) {
  Json j{{"command", command}, {"tolerance", io::number(o.tol)}};
  if (o.seed) j["seed"] = *o.seed;
  return j;
}

Outcome run_analyze(const Options& o) {
  const auto f = io::to_density(io::read_input_file(o.input));
  const auto s = dft(f);
  if (o.format == "csv") return {io::spectrum_csv(s)};
  Json doc = header("analyze", o);
  doc["p"] = f.p();
  doc["theta"] = io::number(f.theta());
  doc["indicator"] = f.is_indicator();
  doc["spectrum"] = io::to_json(s);
  Json gaps = Json::array();
  if (o.k) {
    gaps.push_back(io::to_json(gap_ratio(s, *o.k)));
  } else {
    for (std::size_t k = 1; has_gap_certificate(s, k); ++k)
      gaps.push_back(io::to_json(gap_ratio(s, k)));
  }
  doc["gaps"] = std::move(gaps);
  return {io::dump(doc)};
}

Outcome run_coverage(const Options& o) {
  const auto f = io::to_density(io::read_input_file(o.input));
  const auto r = theorem1_report(f, *o.k, o.tol);
  Json doc = header("coverage", o);
  doc["report"] = io::to_json(r);
  Outcome out{emit(doc, o.format, Json::array({doc["report"]}))};
  if (r.falsified) out.code = kFalsification;
  else if (o.strict && !r.in_hypothesis) out.code = kHypothesisViolated;
  return out;
}

Outcome run_unique_diff(const Options& o) {
  const auto spec1 = io::read_input_file(o.input);
  const PrimeField field(spec1.p);
  const auto b1 = io::to_set(spec1);
  Json doc = header("unique-diff", o);
  doc["p"] = field.p();
  int code = kSuccess;

  auto certify = [&](const std::vector<Residue>& x, const std::vector<Residue>& y, Residue d) {
    return rep_table(field, x, y).nu(d);
  };

  if (o.input2.empty()) {
    doc["lemma"] = "unique-differences";
    doc["size"] = b1.size();
    const bool applies = unique_difference_hypothesis(b1.size(), field.p());
    doc["in_hypothesis"] = applies;
    auto method = o.exhaustive ? DifferenceMethod::exhaustive : DifferenceMethod::constructive;
    if (method == DifferenceMethod::constructive && !applies) {
      if (o.strict) code = kHypothesisViolated;
      method = DifferenceMethod::exhaustive;
      doc["fallback"] = "constructive precondition p > 4^|B| fails; using exhaustive search";
    }
    try {
      const auto u = find_unique_difference(b1, field, method);
      doc["found"] = true;
      doc["result"] = io::to_json(u);
      doc["nu"] = certify(b1, b1, u.d);
    } catch (const NotFoundError&) {
      doc["found"] = false;
    }
  } else {
    const auto spec2 = io::read_input_file(o.input2);
    if (spec2.p != spec1.p) throw InputError("field mismatch: inputs have different moduli");
    const auto b2 = io::to_set(spec2);
    doc["sizes"] = Json::array({b1.size(), b2.size()});
    const double lhs = 3.0 * static_cast<double>(b2.size()) * std::log(static_cast<double>(b1.size()));
    const double log_p = std::log(static_cast<double>(field.p()));
    if (o.exhaustive) {
      doc["lemma"] = "exhaustive";
      const auto u = smallest_unique_difference(field, b1, b2);
      doc["found"] = u.has_value();
      if (u) {
        doc["result"] = io::to_json(*u);
        doc["nu"] = certify(b1, b2, u->d);
      }
    } else if (lhs < log_p) {
      doc["lemma"] = "unique-representation";
      const bool applies = 2 * static_cast<std::int64_t>(b1.size()) <= field.p();
      doc["in_hypothesis"] = applies;
      if (!applies && o.strict) code = kHypothesisViolated;
      const auto u = applies ? lemma3_unique(b1, b2, field) : detail::unique_procedure(b1, b2, field);
      doc["found"] = true;
      doc["result"] = io::to_json(u);
      doc["nu"] = certify(b1, b2, u.d);
    } else {
      doc["lemma"] = "few-representations";
      const bool applies = b1.size() >= 10 && 2 * static_cast<std::int64_t>(b1.size()) <= field.p();
      doc["in_hypothesis"] = applies;
      if (!applies && o.strict) code = kHypothesisViolated;
      const auto r = applies ? lemma3_few_reps(b1, b2, field, *o.seed)
                             : detail::few_reps_procedure(b1, b2, field, *o.seed);
      doc["found"] = true;
      doc["result"] = io::to_json(r);
      if (r.bound_violated) doc["finding"] = "exhaustive minimum exceeds the representation bound";
    }
  }
  return {emit(doc, o.format, Json::array({doc})), code};
}

Outcome run_repeated(const Options& o) {
  const auto f = io::to_density(io::read_input_file(o.input));
  const auto v = theorem2_report(f, *o.k, o.t, *o.seed, o.tol);
  Json doc = header("repeated", o);
  doc["verdict"] = io::to_json(v);
  Outcome out{emit(doc, o.format, Json::array({doc["verdict"]}))};
  if (v.falsified) out.code = kFalsification;
  else if (o.strict && !v.in_hypothesis) out.code = kHypothesisViolated;
  return out;
}

Outcome run_probe(const Options& o) {
  ProbeOptions po;
  po.p = o.p;
  po.k_min = o.k_min;
  po.k_max = o.k_max;
  po.trials = o.trials;
  po.seed = *o.seed;
  po.strong_gap = o.strong_gap;
  const auto rows = io::to_json(conjecture_probe(po));
  Json doc = header("probe", o);
  doc["p"] = o.p;
  doc["k_min"] = o.k_min;
  doc["k_max"] = o.k_max;
  doc["trials"] = o.trials;
  doc["strong_gap"] = io::number(o.strong_gap);
  doc["families"] = Json::array({"random-indicator", "interval", "ap-union", "spectral"});
  doc["rows"] = rows;
  return {emit(doc, o.format, rows)};
}

Outcome run_generate(const Options& o) {
  GeneratorParams params;
  params.density = o.density;
  params.start = o.start;
  params.step = o.step;
  params.length = o.length;
  const auto f = generate(parse_family(o.family), PrimeField(o.p), params, *o.seed);
  return {io::serialize_input(io::describe(f))};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Spectral gaps and sumset coverage on prime fields"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Spectrum and gap certificates");
  analyze->add_option("--input", o.input, "Input document")->required();
  analyze->add_option("--k", o.k, "Report only this gap index");

  auto* coverage = app.add_subcommand("coverage", "Sumset coverage bound from a spectral gap");
  coverage->add_option("--input", o.input, "Input document")->required();
  coverage->add_option("--k", o.k, "Gap index")->required();

  auto* unique = app.add_subcommand("unique-diff", "Unique and few-representation differences");
  unique->add_option("--input", o.input, "Set B (or B1)")->required();
  unique->add_option("--input2", o.input2, "Set B2 for the two-set variants");
  auto* cons = unique->add_flag("--constructive", o.constructive, "Dilation-based construction (default)");
  auto* exh = unique->add_flag("--exhaustive", o.exhaustive, "Smallest unique difference by enumeration");
  cons->excludes(exh);
  unique->add_option("--seed", o.seed, "Seed for the random thinning")->required();

  auto* repeated = app.add_subcommand("repeated", "Positivity of t-fold convolutions");
  repeated->add_option("--input", o.input, "Input document")->required();
  repeated->add_option("--k", o.k, "Gap index")->required();
  repeated->add_option("--t", o.t, "Number of summands (t >= 3)")->required();
  repeated->add_option("--seed", o.seed, "Seed for the difference chain")->required();

  auto* probe = app.add_subcommand("probe", "Empirical search for strong gaps at larger k");
  probe->add_option("--p", o.p, "Prime modulus")->required();
  probe->add_option("--k-min", o.k_min, "Smallest k")->required();
  probe->add_option("--k-max", o.k_max, "Largest k")->required();
  probe->add_option("--trials", o.trials, "Trials per k")->required();
  probe->add_option("--seed", o.seed, "Seed")->required();
  probe->add_option("--strong-gap", o.strong_gap, "gamma at or below this is a strong gap")->capture_default_str();

  auto* gen = app.add_subcommand("generate", "Write an input document for an example family");
  gen->add_option("--family", o.family, "indicator-random | interval | arithmetic-progression | "
                                        "quadratic-residues | spectral-remark")
      ->required();
  gen->add_option("--p", o.p, "Prime modulus")->required();
  gen->add_option("--density", o.density, "indicator-random density")->capture_default_str();
  gen->add_option("--start", o.start, "interval / progression start")->capture_default_str();
  gen->add_option("--step", o.step, "progression step")->capture_default_str();
  gen->add_option("--length", o.length, "interval / progression length")->capture_default_str();
  gen->add_option("--seed", o.seed, "Seed")->required();

  for (auto* cmd : {analyze, coverage, unique, repeated, probe, gen}) add_globals(cmd, o);

  std::vector<std::string> argv_storage{"sumgap"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputInvalid;
  }

  Outcome outcome;
  try {
    if (analyze->parsed()) outcome = run_analyze(o);
    else if (coverage->parsed()) outcome = run_coverage(o);
    else if (unique->parsed()) outcome = run_unique_diff(o);
    else if (repeated->parsed()) outcome = run_repeated(o);
    else if (probe->parsed()) outcome = run_probe(o);
    else outcome = run_generate(o);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputInvalid;
  } catch (const FalsificationError& e) {
    err << "falsification: " << e.what() << '\n';
    return kFalsification;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }

  if (o.out.empty()) {
    out << outcome.document;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kInputInvalid;
    }
    file << outcome.document;
  }
  return outcome.code;
}

}  // namespace sumgap::cli
