#pragma once

#include <chrono>
#include <string>

#include <json.hpp>

#include "spectral_kit/graph.hpp"
#include "spectral_kit/oracle.hpp"
#include "spectral_kit/spectra.hpp"

namespace spectral_kit {

inline constexpr const char* kReportSchemaVersion = "1.0";

/// Machine-readable command output. Everything except `timings` is a
/// deterministic function of the command and its parameters.
struct Report {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();

  nlohmann::ordered_json to_json() const;
  std::string dump() const;
  /// Serialized results section only, for byte comparisons.
  std::string results_text() const;
};

/// Value rounded to 12 significant digits; magnitudes below 1e-12 become 0.
double round12(double x);

nlohmann::ordered_json spectrum_json(const Graph& g, const SpectralResult& sr);
nlohmann::ordered_json search_json(const SearchResult& r, bool dedup);
nlohmann::ordered_json claims_json(const Graph& g, const ClaimReport& c);

/// Wall-clock milliseconds since construction.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace spectral_kit
