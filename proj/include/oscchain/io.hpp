#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "oscchain/force.hpp"
#include "oscchain/measure.hpp"
#include "oscchain/simulator.hpp"

namespace oscchain {

struct ScenarioConfig {
  std::string name = "custom";
  int site = 0;
  int lattice = 64;
  Boundary boundary = Boundary::periodic;
  double horizon = 200.0;
  int replicas = 2000;
  std::uint64_t seed = 1;
  Integrator integrator = Integrator::mode_exact;
  double dt = 0.0;  // 0 -> integrator default
  int window = 25;
  SynthesisMode synthesis = SynthesisMode::gaussian_amplitudes;
  int density_terms = 64;
  std::vector<double> sample_times;  // empty -> geometric default grid
  std::string ic = "zero";           // zero | stationary | site_momentum | random
  int ic_site = 0;
  double ic_amplitude = 1.0;
  std::uint64_t ic_seed = 0;
  double ic_scale = 0.0;
};

struct QuadratureConfig {
  int n_lambda = 4096;
  int gl_order = 64;
};

// Validated experiment description; every loader materializes defaults so the
// echoed form is complete and the hash covers exactly what ran.
struct ExperimentConfig {
  std::vector<double> kernel_coeffs{3.0, -1.0};
  std::vector<Atom> atoms{{3.0, 0.5}};
  std::vector<DensityPanel> panels;
  ScenarioConfig scenario;
  QuadratureConfig quadrature;

  InteractionKernel kernel() const { return InteractionKernel(kernel_coeffs); }
  SpectralMeasure measure() const { return SpectralMeasure(atoms, panels); }
  SimConfig sim_config() const;
  std::vector<double> effective_sample_times() const;

  nlohmann::json echo() const;  // canonical JSON with defaults filled in
  std::string hash() const;     // FNV-1a 64 over the echo, hex
};

// Schema is fail-closed: any unrecognized field raises ValidationError.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig config_from_toml_text(const std::string& text);
ExperimentConfig load_config(const std::filesystem::path& path);  // .toml or .json

// Emission: every file carries the config hash and base seed in its header.
void write_json_file(const std::filesystem::path& path, nlohmann::json payload,
                     const ExperimentConfig& config);

class CsvFile {
 public:
  CsvFile(const std::filesystem::path& path, const ExperimentConfig& config,
          const std::vector<std::string>& columns);
  void row(std::span<const double> values);  // 17 significant digits, '.' decimal

 private:
  std::ofstream out_;
};

std::string format_17g(double value);

}  // namespace oscchain
