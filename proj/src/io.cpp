#include "sumgap/io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sumgap/errors.hpp"

namespace sumgap::io {

namespace {

std::string format_g(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

[[noreturn]] void malformed(const std::string& what) { throw InputError("malformed document: " + what); }

std::int64_t as_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) malformed(what + " must be an integer");
  return j.get<std::int64_t>();
}

double as_real(const Json& j, const std::string& what) {
  if (!j.is_number()) malformed(what + " must be a number");
  return j.get<double>();
}

std::string kind_name(InputKind k) {
  switch (k) {
    case InputKind::set: return "set";
    case InputKind::values: return "values";
    case InputKind::fourier: return "fourier";
  }
  return "set";
}

void validate(const InputSpec& spec) {
  const PrimeField field(spec.p);  // composite modulus diagnostic
  switch (spec.kind) {
    case InputKind::set: {
      if (spec.residues.empty()) throw InputError("out-of-range entry: set is empty");
      for (auto x : spec.residues)
        if (!field.contains(x))
          throw InputError("out-of-range entry: residue " + std::to_string(x) + " not in [0, p)");
      if (canonical_set(field, spec.residues).size() != spec.residues.size())
        throw InputError("out-of-range entry: set residues must be distinct");
      break;
    }
    case InputKind::values:
      if (static_cast<std::int64_t>(spec.values.size()) != spec.p)
        throw InputError("out-of-range entry: expected " + std::to_string(spec.p) + " values, got " +
                         std::to_string(spec.values.size()));
      (void)to_density(spec);
      break;
    case InputKind::fourier:
      (void)to_density(spec);
      break;
  }
}

InputSpec parse_json(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("top level must be an object");
  for (const char* key : {"kind", "p", "payload"})
    if (!doc.contains(key)) malformed(std::string("missing key \"") + key + "\"");
  if (!doc["kind"].is_string()) malformed("kind must be a string");
  if (!doc["payload"].is_array()) malformed("payload must be an array");

  InputSpec spec;
  spec.p = as_integer(doc["p"], "p");
  const auto kind = doc["kind"].get<std::string>();
  const auto& payload = doc["payload"];
  if (kind == "set") {
    spec.kind = InputKind::set;
    for (const auto& x : payload) spec.residues.push_back(as_integer(x, "set element"));
  } else if (kind == "values") {
    spec.kind = InputKind::values;
    for (const auto& x : payload) spec.values.push_back(as_real(x, "value"));
  } else if (kind == "fourier") {
    spec.kind = InputKind::fourier;
    for (const auto& term : payload) {
      if (!term.is_array() || (term.size() != 2 && term.size() != 3))
        malformed("fourier terms are [frequency, real] or [frequency, real, imag]");
      const double im = term.size() == 3 ? as_real(term[2], "imaginary part") : 0.0;
      spec.terms.emplace_back(as_integer(term[0], "frequency"),
                              std::complex<double>(as_real(term[1], "real part"), im));
    }
  } else {
    malformed("unknown kind \"" + kind + "\"");
  }
  return spec;
}

InputSpec parse_plain(const std::string& text) {
  InputSpec spec;
  spec.kind = InputKind::set;
  std::istringstream lines(text);
  std::string line;
  bool have_p = false;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string token;
    if (!(fields >> token)) continue;
    const auto where = " (line " + std::to_string(lineno) + ")";
    if (!have_p) {
      std::int64_t p = 0;
      if (token != "p" || !(fields >> p)) malformed("plain set must start with \"p <prime>\"" + where);
      spec.p = p;
      have_p = true;
    } else {
      char* end = nullptr;
      const long long x = std::strtoll(token.c_str(), &end, 10);
      if (*end != '\0') malformed("not an integer: \"" + token + "\"" + where);
      spec.residues.push_back(x);
    }
    if (fields >> token) malformed("one entry per line expected" + where);
  }
  if (!have_p) malformed("empty document");
  return spec;
}

}  // namespace

InputSpec parse_input(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  InputSpec spec = first != std::string::npos && text[first] == '{' ? parse_json(text) : parse_plain(text);
  validate(spec);
  return spec;
}

InputSpec read_input_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read input file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_input(buf.str());
}

DensityFunction to_density(const InputSpec& spec) {
  const PrimeField field(spec.p);
  switch (spec.kind) {
    case InputKind::set:
      return DensityFunction::indicator(field, spec.residues);
    case InputKind::values: {
      Eigen::VectorXd v(static_cast<Eigen::Index>(spec.values.size()));
      for (std::size_t i = 0; i < spec.values.size(); ++i) v[static_cast<Eigen::Index>(i)] = spec.values[i];
      try {
        return DensityFunction::from_values(field, std::move(v));
      } catch (const InputError& e) {
        throw InputError(std::string("out-of-range entry: ") + e.what());
      }
    }
    case InputKind::fourier:
      try {
        return from_fourier(field, spec.terms);
      } catch (const InputError& e) {
        throw InputError(std::string("out-of-range entry: ") + e.what());
      }
  }
  throw InputError("unknown input kind");
}

std::vector<Residue> to_set(const InputSpec& spec) {
  if (spec.kind == InputKind::set) return canonical_set(PrimeField(spec.p), spec.residues);
  const auto f = to_density(spec);
  if (!f.is_indicator()) throw InputError("expected a set (0/1-valued) input");
  return f.support();
}

std::string serialize_input(const InputSpec& spec) {
  Json doc;
  doc["kind"] = kind_name(spec.kind);
  doc["p"] = spec.p;
  Json payload = Json::array();
  switch (spec.kind) {
    case InputKind::set:
      for (auto x : spec.residues) payload.push_back(x);
      break;
    case InputKind::values:
      for (auto v : spec.values) payload.push_back(v);
      break;
    case InputKind::fourier:
      for (const auto& [a, c] : spec.terms) payload.push_back(Json::array({a, c.real(), c.imag()}));
      break;
  }
  doc["payload"] = std::move(payload);
  return doc.dump() + "\n";
}

InputSpec describe(const DensityFunction& f) {
  InputSpec spec;
  spec.p = f.p();
  if (f.is_indicator()) {
    spec.kind = InputKind::set;
    spec.residues = f.support();
  } else {
    spec.kind = InputKind::values;
    spec.values.assign(f.values().data(), f.values().data() + f.values().size());
  }
  return spec;
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_g(x, 12).c_str(), nullptr);
}

Json to_json(const Spectrum& s) {
  Json rows = Json::array();
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s.p()); ++i) {
    const auto a = s.frequency(i);
    rows.push_back(Json{{"rank", i},
                        {"frequency", a},
                        {"magnitude", number(s.lambda(i))},
                        {"real", number(s[a].real())},
                        {"imag", number(s[a].imag())}});
  }
  return rows;
}

Json to_json(const GapCertificate& c) {
  return Json{{"k", c.k}, {"gamma", number(c.gamma)}, {"lambda_k", number(c.lambda_k)}, {"lambda_k1", number(c.lambda_k1)}};
}

namespace {

const char* method_name(DifferenceMethod m) { return m == DifferenceMethod::constructive ? "constructive" : "exhaustive"; }

}  // namespace

Json to_json(const CoverageReport& r) {
  return Json{{"p", r.p},
              {"k", r.k},
              {"gamma", number(r.gamma)},
              {"theta", number(r.theta)},
              {"lambda_k", number(r.lambda_k)},
              {"bound", number(r.bound)},
              {"exact_support", r.exact_support},
              {"slack", number(r.slack)},
              {"d", r.d},
              {"a_x", r.a_x},
              {"a_y", r.a_y},
              {"lambda_k1", number(r.lambda_k1)},
              {"difference_method", method_name(r.method)},
              {"indicator", r.indicator},
              {"in_hypothesis", r.in_hypothesis},
              {"positivity_threshold", number(r.positivity_threshold)},
              {"good_count", r.good_count},
              {"error_l2", number(r.error_l2)},
              {"l2_budget", number(r.l2_budget)},
              {"budget_tolerance", number(kBudgetTolerance)},
              {"budget_holds", r.budget_holds},
              {"bound_holds", r.bound_holds},
              {"falsified", r.falsified}};
}

Json to_json(const UniqueDifference& u) {
  Json j{{"d", u.d}, {"minuend", u.minuend}, {"subtrahend", u.subtrahend}, {"method", method_name(u.method)}};
  if (u.dilation)
    j["dilation"] = Json{{"m", u.dilation->m}, {"bound", number(u.dilation->bound)}, {"achieved", u.dilation->achieved}};
  return j;
}

Json to_json(const FewRepsResult& r) {
  return Json{{"d", r.d},
              {"nu", r.nu},
              {"bound", number(r.bound)},
              {"path", r.path == FewRepsPath::sampled ? "sampled" : "exhaustive-fallback"},
              {"attempts", r.attempts},
              {"max_attempts", kMaxSampleAttempts},
              {"bound_violated", r.bound_violated},
              {"sample", r.sample}};
}

Json to_json(const DifferenceChain& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps) {
    Json step{{"kind", s.kind == ChainStepKind::few_reps ? "few-reps" : "unique"},
              {"d", s.d},
              {"input_size", s.input_size},
              {"output_size", s.output_size}};
    if (s.kind == ChainStepKind::few_reps) {
      step["bound"] = number(s.bound);
      step["path"] = s.path == FewRepsPath::sampled ? "sampled" : "exhaustive-fallback";
      step["attempts"] = s.attempts;
      step["bound_respected"] = s.bound_respected;
      step["forced_progress"] = s.forced_progress;
    }
    step["boundary_equality"] = s.boundary_equality;
    steps.push_back(std::move(step));
  }
  Json sizes = Json::array();
  for (const auto& s : c.sets) sizes.push_back(s.size());
  return Json{{"top", c.top}, {"ds", c.ds}, {"set_sizes", sizes}, {"m", c.m()}, {"base", c.base}, {"steps", steps}};
}

Json to_json(const Theorem2Verdict& v) {
  Json j{{"p", v.p},
         {"k", v.k},
         {"t", v.t},
         {"seed", v.seed},
         {"theta", number(v.theta)},
         {"gamma", number(v.gamma)},
         {"lambda_k", number(v.lambda_k)},
         {"lambda_k1", number(v.lambda_k1)},
         {"gamma_threshold", number(v.gamma_threshold)},
         {"gamma_ok", v.gamma_ok},
         {"k_range_applicable", v.k_range_applicable},
         {"k_range_ok", v.k_range_ok},
         {"in_hypothesis", v.in_hypothesis},
         {"positive_everywhere", v.positive_everywhere},
         {"min_value", number(v.min_value)},
         {"positivity_threshold", number(v.positivity_threshold)},
         {"precision_limited", v.precision_limited},
         {"direct_residual", v.direct_residual ? number(*v.direct_residual) : Json(nullptr)}};
  j["chain"] = v.chain ? to_json(*v.chain) : Json(nullptr);
  if (!v.chain_error.empty()) j["chain_error"] = v.chain_error;
  j["chain_within_t"] = v.chain_within_t;
  j["modulated_checked"] = v.modulated_checked;
  j["identity_residual"] = number(v.identity_residual);
  j["identity_tolerance"] = number(kIdentityTolerance);
  j["error_max"] = number(v.error_max);
  j["error_bound"] = number(v.error_bound);
  j["error_bound_holds"] = v.error_bound_holds;
  j["support_inclusion_holds"] = v.support_inclusion_holds;
  j["falsified"] = v.falsified;
  return j;
}

Json to_json(const std::vector<ProbeRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"k", r.k},
                       {"trials", r.trials},
                       {"best_gamma", number(r.best_gamma)},
                       {"best_family", probe_family_name(r.best_family)},
                       {"strong_gap_count", r.strong_gap_count},
                       {"min_coverage", r.min_coverage ? number(*r.min_coverage) : Json(nullptr)},
                       {"bound_at_min", r.bound_at_min ? number(*r.bound_at_min) : Json(nullptr)}});
  }
  return out;
}

std::string spectrum_csv(const Spectrum& s) {
  std::ostringstream out;
  out << "rank,frequency,magnitude,real,imag\n";
  for (std::size_t i = 1; i <= static_cast<std::size_t>(s.p()); ++i) {
    const auto a = s.frequency(i);
    out << i << ',' << a << ',' << format_g(s.lambda(i), 12) << ',' << format_g(s[a].real(), 12) << ','
        << format_g(s[a].imag(), 12) << '\n';
  }
  return out.str();
}

std::string json_to_csv(const Json& rows) {
  std::ostringstream out;
  if (!rows.is_array() || rows.empty()) return out.str();
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : row.items()) {
      out << (first ? "" : ",");
      first = false;
      if (value.is_null()) {
        continue;
      } else if (value.is_string()) {
        out << value.get<std::string>();
      } else if (value.is_structured()) {
        auto text = value.dump();
        std::string quoted;
        for (char c : text) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        out << '"' << quoted << '"';
      } else {
        out << value.dump();
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace sumgap::io
