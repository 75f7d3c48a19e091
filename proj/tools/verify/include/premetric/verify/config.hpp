#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "premetric/electrodynamics.hpp"
#include "premetric/form.hpp"
#include "premetric/hodge.hpp"

namespace premetric::verify {

inline constexpr const char* kConfigSchema = "premetric-config/1";

/// Invalid configuration document. Maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A field given either as expression text or drawn at random.
struct FieldSource {
  bool random = false;
  std::string text;
};

/// Which vector fields u to run the per-u suites with.
struct VectorFieldSource {
  enum class Kind { Random, Coordinates, Coordinate, Explicit } kind = Kind::Coordinates;
  int coordinate = 0;
  std::vector<std::string> components;
};

struct LawSpec {
  enum class Kind { None, MaxwellLorentz, Axion, Linear, Custom } kind = Kind::None;
  std::vector<std::vector<std::string>> chi;  ///< Linear: rows of polynomial text
  std::optional<FieldSource> custom_G;        ///< Custom: a fixed excitation
};

struct RunConfig {
  int n = 4;
  int p = 2;
  ScalarMode mode = ScalarMode::Real;
  int orientation = 1;
  std::optional<RationalMatrix> metric;
  Rational Z0{1};
  Rational z{1};
  Rational k{3};
  std::string alpha = "0";
  std::optional<FieldSource> F;
  std::optional<FieldSource> G;
  std::optional<FieldSource> J;
  VectorFieldSource u;
  LawSpec law;
  std::uint64_t seed = 0;
  int degree = 2;
  int instances = 1;
  std::vector<std::string> suites;
  std::optional<std::filesystem::path> output;

  Chart chart() const { return {n, orientation, mode}; }
};

/// Parses and validates a JSON config document. Throws ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace premetric::verify
