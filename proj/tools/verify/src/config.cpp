#include "premetric/verify/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace premetric::verify {

using nlohmann::json;

namespace {

Rational rational_of(const json& v, const std::string& key) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    try {
      Rational q(s);
      if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
      q.canonicalize();
      return q;
    } catch (const std::invalid_argument&) {
      throw ConfigError("'" + key + "': not a rational literal: \"" + s + "\"");
    }
  }
  throw ConfigError("'" + key + "': expected an integer or a rational string such as \"1/3\"");
}

FieldSource field_of(const json& v, const std::string& key) {
  if (!v.is_string()) throw ConfigError("'" + key + "': expected form-expression text or \"random\"");
  auto s = v.get<std::string>();
  if (s == "random") return {true, ""};
  return {false, std::move(s)};
}

RationalMatrix metric_of(const json& v, int n) {
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    RationalMatrix g = RationalMatrix::identity(n);
    if (s == "euclidean") return g;
    if (s == "minkowski") {
      for (int i = 1; i < n; ++i) g(i, i) = -1;
      return g;
    }
    throw ConfigError("'metric': unknown preset \"" + s + "\" (minkowski | euclidean)");
  }
  if (!v.is_object()) throw ConfigError("'metric': expected a preset name or an object");
  if (v.contains("diagonal")) {
    const json& d = v.at("diagonal");
    if (!d.is_array() || static_cast<int>(d.size()) != n) throw ConfigError("'metric.diagonal': need n entries");
    std::vector<Rational> entries;
    for (const auto& e : d) entries.push_back(rational_of(e, "metric.diagonal"));
    return RationalMatrix::diagonal(entries);
  }
  if (v.contains("matrix")) {
    const json& m = v.at("matrix");
    if (!m.is_array() || static_cast<int>(m.size()) != n) throw ConfigError("'metric.matrix': need n rows");
    std::vector<Rational> entries;
    for (const auto& row : m) {
      if (!row.is_array() || static_cast<int>(row.size()) != n) throw ConfigError("'metric.matrix': need n columns");
      for (const auto& e : row) entries.push_back(rational_of(e, "metric.matrix"));
    }
    RationalMatrix g(n, entries);
    if (!g.is_symmetric()) throw ConfigError("'metric.matrix': metric must be symmetric");
    return g;
  }
  throw ConfigError("'metric': expected \"diagonal\" or \"matrix\"");
}

VectorFieldSource vector_field_of(const json& v, int n) {
  VectorFieldSource u;
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "random") {
      u.kind = VectorFieldSource::Kind::Random;
    } else if (s == "coordinates") {
      u.kind = VectorFieldSource::Kind::Coordinates;
    } else {
      throw ConfigError("'u': expected \"random\", \"coordinates\", {\"coordinate\": k} or n component strings");
    }
    return u;
  }
  if (v.is_object() && v.contains("coordinate")) {
    u.kind = VectorFieldSource::Kind::Coordinate;
    if (!v.at("coordinate").is_number_integer()) throw ConfigError("'u.coordinate': expected an integer");
    u.coordinate = v.at("coordinate").get<int>();
    if (u.coordinate < 0 || u.coordinate >= n) throw ConfigError("'u.coordinate': index out of range");
    return u;
  }
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != n) throw ConfigError("'u': need exactly n components");
    u.kind = VectorFieldSource::Kind::Explicit;
    for (const auto& c : v) {
      if (!c.is_string()) throw ConfigError("'u': components must be polynomial text");
      u.components.push_back(c.get<std::string>());
    }
    return u;
  }
  throw ConfigError("'u': unsupported value");
}

LawSpec law_of(const json& v) {
  if (!v.is_object() || !v.contains("kind") || !v.at("kind").is_string())
    throw ConfigError("'law': expected an object with a \"kind\"");
  const auto kind = v.at("kind").get<std::string>();
  LawSpec law;
  if (kind == "maxwell-lorentz") {
    law.kind = LawSpec::Kind::MaxwellLorentz;
  } else if (kind == "axion") {
    law.kind = LawSpec::Kind::Axion;
  } else if (kind == "linear") {
    law.kind = LawSpec::Kind::Linear;
    if (!v.contains("chi") || !v.at("chi").is_array()) throw ConfigError("'law.chi': expected a matrix");
    for (const auto& row : v.at("chi")) {
      if (!row.is_array()) throw ConfigError("'law.chi': rows must be arrays");
      std::vector<std::string> r;
      for (const auto& e : row) {
        if (!e.is_string()) throw ConfigError("'law.chi': entries must be polynomial text");
        r.push_back(e.get<std::string>());
      }
      law.chi.push_back(std::move(r));
    }
  } else if (kind == "custom") {
    law.kind = LawSpec::Kind::Custom;
    if (!v.contains("G")) throw ConfigError("'law.G': custom laws name a fixed excitation");
    law.custom_G = field_of(v.at("G"), "law.G");
  } else {
    throw ConfigError("'law.kind': unknown law \"" + kind + "\"");
  }
  return law;
}

int int_of(const json& doc, const char* key, int fallback) {
  if (!doc.contains(key)) return fallback;
  if (!doc.at(key).is_number_integer()) throw ConfigError(std::string("'") + key + "': expected an integer");
  return doc.at(key).get<int>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  if (!doc.contains("schema") || doc.at("schema") != kConfigSchema)
    throw ConfigError(std::string("config 'schema' must be \"") + kConfigSchema + "\"");

  static const std::set<std::string> known{"schema", "n", "p", "scalar_mode", "orientation", "metric", "Z0", "z", "k",
                                           "alpha", "F", "G", "J", "u", "law", "seed", "degree", "instances",
                                           "suites", "output"};
  for (const auto& [key, value] : doc.items())
    if (known.count(key) == 0) throw ConfigError("unknown config key '" + key + "'");

  RunConfig cfg;
  cfg.n = int_of(doc, "n", 4);
  if (cfg.n < 2 || cfg.n > 8) throw ConfigError("'n' must be in [2, 8]");
  cfg.p = int_of(doc, "p", 2);
  if (cfg.p < 0 || cfg.p > cfg.n) throw ConfigError("'p' must be in [0, n]");
  cfg.orientation = int_of(doc, "orientation", 1);
  if (cfg.orientation != 1 && cfg.orientation != -1) throw ConfigError("'orientation' must be 1 or -1");
  if (doc.contains("scalar_mode")) {
    const json& m = doc.at("scalar_mode");
    if (m == "real") {
      cfg.mode = ScalarMode::Real;
    } else if (m == "complex") {
      cfg.mode = ScalarMode::Complex;
    } else {
      throw ConfigError("'scalar_mode' must be \"real\" or \"complex\"");
    }
  }
  if (doc.contains("metric")) cfg.metric = metric_of(doc.at("metric"), cfg.n);
  if (doc.contains("Z0")) cfg.Z0 = rational_of(doc.at("Z0"), "Z0");
  if (sgn(cfg.Z0) == 0) throw ConfigError("'Z0' must be nonzero");
  if (doc.contains("z")) cfg.z = rational_of(doc.at("z"), "z");
  if (sgn(cfg.z) == 0) throw ConfigError("'z' must be nonzero");
  if (doc.contains("k")) cfg.k = rational_of(doc.at("k"), "k");
  if (sgn(cfg.k) == 0) throw ConfigError("'k' must be nonzero");
  if (doc.contains("alpha")) {
    if (!doc.at("alpha").is_string()) throw ConfigError("'alpha': expected polynomial text");
    cfg.alpha = doc.at("alpha").get<std::string>();
  }
  if (doc.contains("F")) cfg.F = field_of(doc.at("F"), "F");
  if (doc.contains("G")) cfg.G = field_of(doc.at("G"), "G");
  if (doc.contains("J")) cfg.J = field_of(doc.at("J"), "J");
  if (doc.contains("u")) cfg.u = vector_field_of(doc.at("u"), cfg.n);
  if (doc.contains("law")) cfg.law = law_of(doc.at("law"));
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ConfigError("'seed': expected a nonnegative integer");
    cfg.seed = doc.at("seed").get<std::uint64_t>();
  }
  cfg.degree = int_of(doc, "degree", 2);
  if (cfg.degree < 0 || cfg.degree > 4) throw ConfigError("'degree' must be in [0, 4]");
  cfg.instances = int_of(doc, "instances", 1);
  if (cfg.instances < 1 || cfg.instances > 10000) throw ConfigError("'instances' must be in [1, 10000]");
  if (doc.contains("suites")) {
    if (!doc.at("suites").is_array()) throw ConfigError("'suites': expected an array of names");
    for (const auto& s : doc.at("suites")) {
      if (!s.is_string()) throw ConfigError("'suites': expected an array of names");
      cfg.suites.push_back(s.get<std::string>());
    }
  }
  if (doc.contains("output")) {
    if (!doc.at("output").is_string()) throw ConfigError("'output': expected a path");
    cfg.output = doc.at("output").get<std::string>();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace premetric::verify
