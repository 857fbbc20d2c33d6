#include "bom/io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace bom {

using nlohmann::json;

std::string field_to_json(const SpectralField& f) {
  json j;
  j["n_max"] = f.n_max();
  json coeffs = json::array();
  for (int n = 1; n <= f.n_max(); ++n)
    coeffs.push_back({f.coeff(n).real(), f.coeff(n).imag()});
  j["coeffs"] = std::move(coeffs);
  return j.dump(2) + "\n";
}

SpectralField field_from_json(const std::string& text) {
  json j = json::parse(text);
  const int n_max = j.at("n_max").get<int>();
  if (n_max < 0) throw std::invalid_argument("field file: n_max must be >= 0");
  const auto& coeffs = j.at("coeffs");
  if (static_cast<int>(coeffs.size()) != n_max)
    throw std::invalid_argument("field file: coeffs length " + std::to_string(coeffs.size()) +
                                " does not match n_max " + std::to_string(n_max));
  SpectralField f(n_max);
  for (int n = 1; n <= n_max; ++n) {
    const auto& c = coeffs.at(static_cast<std::size_t>(n - 1));
    f.mode(n) = cplx(c.at(0).get<double>(), c.at(1).get<double>());
  }
  return f;
}

SpectralField load_field(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open field file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return field_from_json(ss.str());
}

void save_field(const SpectralField& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write field file '" + path + "'");
  out << field_to_json(f);
}

std::string energy_to_json(const EnergySpec& spec) {
  json j;
  j["s"] = spec.s;
  json terms = json::array();
  for (const auto& [c, term] : spec.remainder)
    terms.push_back({{"c", c}, {"expr", term.to_string()}});
  j["terms"] = std::move(terms);
  return j.dump(2) + "\n";
}

EnergySpec energy_from_json(const std::string& text) {
  json j = json::parse(text);
  EnergySpec spec;
  spec.s = j.at("s").get<double>();
  for (const auto& t : j.at("terms")) {
    TermExpr expr = TermExpr::parse(t.at("expr").get<std::string>());
    if (expr.homogeneity() < 3)
      throw std::invalid_argument("energy file: remainder terms must have homogeneity >= 3");
    spec.remainder.emplace_back(t.at("c").get<double>(), std::move(expr));
  }
  return spec;
}

EnergySpec load_energy(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open energy file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return energy_from_json(ss.str());
}

std::string csv_row(const ExperimentRecord& r) {
  return r.experiment + "," + r.params + "," + std::to_string(r.seed) + "," +
         std::to_string(r.samples) + "," + format_double(r.estimate) + "," +
         format_double(r.std_error);
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  double back = 0.0;
  std::sscanf(buf, "%lg", &back);
  if (back == v) {
    // try shorter forms that still round-trip
    for (int prec = 1; prec <= 16; ++prec) {
      char shorter[40];
      std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
      std::sscanf(shorter, "%lg", &back);
      if (back == v) return shorter;
    }
  }
  return buf;
}

void write_lines(const std::string& path, const std::vector<std::string>& lines,
                 const std::string& tool_tag) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write output file '" + path + "'");
  std::time_t now = std::time(nullptr);
  char stamp[64];
  std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  out << "# " << tool_tag << " generated " << stamp << "\n";
  for (const auto& line : lines) out << line << "\n";
  if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

}  // namespace bom
