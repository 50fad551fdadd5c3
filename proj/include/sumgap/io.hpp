#pragma once

#include "json.hpp"
#include <string>
#include <vector>

#include "sumgap/coverage.hpp"
#include "sumgap/density.hpp"
#include "sumgap/differences.hpp"
#include "sumgap/fourier.hpp"
#include "sumgap/generators.hpp"
#include "sumgap/repeated_sums.hpp"

namespace sumgap::io {

using Json = nlohmann::ordered_json;

enum class InputKind { set, values, fourier };

/// A parsed input document, before it is turned into a DensityFunction.
struct InputSpec {
  InputKind kind = InputKind::set;
  std::int64_t p = 0;
  std::vector<Residue> residues;     // kind == set
  std::vector<double> values;        // kind == values
  std::vector<FourierTerm> terms;    // kind == fourier
};

/// Accepts the JSON document {"kind", "p", "payload"} or the plain-text set
/// format: '#' comments, a "p <prime>" header line, then one residue per line.
/// Validates fully (including the inversion check for fourier documents).
InputSpec parse_input(const std::string& text);
InputSpec read_input_file(const std::string& path);

DensityFunction to_density(const InputSpec& spec);
std::vector<Residue> to_set(const InputSpec& spec);

/// Canonical JSON text of an input document (values at full precision).
std::string serialize_input(const InputSpec& spec);
InputSpec describe(const DensityFunction& f);

/// Rounds to 12 significant digits; non-finite values become null.
Json number(double x);

Json to_json(const Spectrum& s);
Json to_json(const GapCertificate& c);
Json to_json(const CoverageReport& r);
Json to_json(const UniqueDifference& u);
Json to_json(const FewRepsResult& r);
Json to_json(const DifferenceChain& c);
Json to_json(const Theorem2Verdict& v);
Json to_json(const std::vector<ProbeRow>& rows);

/// rank,frequency,magnitude,real,imag
std::string spectrum_csv(const Spectrum& s);
/// Header row plus one row per object; nested values are written as JSON.
std::string json_to_csv(const Json& rows);

std::string dump(const Json& j);

}  // namespace sumgap::io
