#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bom/energies.hpp"
#include "bom/spectral.hpp"

namespace bom {

// Field file format: { "n_max": N, "coeffs": [[re, im], ...] } listing the
// coefficients of modes 1..N; the reader validates the length.
std::string field_to_json(const SpectralField& f);
SpectralField field_from_json(const std::string& text);
SpectralField load_field(const std::string& path);
void save_field(const SpectralField& f, const std::string& path);

// Energy file format: { "s": 1.5, "terms": [{"c": -1.5, "expr": "P(D0,D1,D1)"}, ...] }.
std::string energy_to_json(const EnergySpec& spec);
EnergySpec energy_from_json(const std::string& text);
EnergySpec load_energy(const std::string& path);

/// One Monte Carlo result row; every experiment output carries its seed,
/// sample count and standard error.
struct ExperimentRecord {
  std::string experiment;
  std::string params;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

inline constexpr const char* kRecordCsvHeader = "experiment,params,seed,samples,estimate,stderr";
std::string csv_row(const ExperimentRecord& r);

/// Shortest round-trip decimal form of a double.
std::string format_double(double v);

/// Writes lines to a file, prefixed by a single timestamp comment line; the
/// remaining content is deterministic for fixed inputs.  Throws on
/// unwritable paths.
void write_lines(const std::string& path, const std::vector<std::string>& lines,
                 const std::string& tool_tag);

}  // namespace bom
