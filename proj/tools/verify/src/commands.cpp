#include "premetric/verify/commands.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <set>

#include "premetric/error.hpp"
#include "premetric/form_expr.hpp"
#include "premetric/random_forms.hpp"
#include "premetric/reciprocity.hpp"

namespace premetric::verify {

namespace {

struct Instance {
  Form F;
  std::optional<Form> G;
  std::optional<Form> J;
  std::vector<VectorField> us;
};

std::string tag(const char* prefix, int index) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%s%03d", prefix, index);
  return buf;
}

std::string instance_suffix(int i, int j = -1) {
  std::string s = tag("#", i);
  if (j >= 0) s += "/u" + std::to_string(j);
  return s;
}

void add_zero_check(Report& r, std::string id, std::string suite, std::string equation, const Form& residual) {
  CheckResult c{std::move(id), std::move(suite), std::move(equation), Status::Pass, ""};
  if (!residual.is_zero()) {
    c.status = Status::Fail;
    c.witness = witness_of(residual);
  }
  r.add(std::move(c));
}

void add_bool_check(Report& r, std::string id, std::string suite, std::string equation, bool ok, std::string witness) {
  r.add({std::move(id), std::move(suite), std::move(equation), ok ? Status::Pass : Status::Fail,
         ok ? std::string() : std::move(witness)});
}

Form parse_field(const FieldSource& src, const Chart& chart, int degree, Twist twist, FormSampler& rng) {
  if (src.random) return rng.nonzero_form(chart, degree, twist);
  return parse_form(src.text, chart, degree, twist);
}

std::vector<VectorField> vector_fields(const RunConfig& cfg, const Chart& chart, FormSampler& rng) {
  switch (cfg.u.kind) {
    case VectorFieldSource::Kind::Random:
      return {rng.vector_field(chart)};
    case VectorFieldSource::Kind::Coordinate:
      return {VectorField::coordinate(chart, cfg.u.coordinate)};
    case VectorFieldSource::Kind::Explicit: {
      std::vector<Polynomial> comps;
      for (const auto& text : cfg.u.components) comps.push_back(parse_polynomial(text, chart));
      return {VectorField(chart, std::move(comps))};
    }
    case VectorFieldSource::Kind::Coordinates:
    default: {
      std::vector<VectorField> all;
      for (int k = 0; k < chart.n; ++k) all.push_back(VectorField::coordinate(chart, k));
      return all;
    }
  }
}

MetricSpec metric_of(const RunConfig& cfg, const Chart& chart) {
  if (!cfg.metric) throw ConfigError("this law or suite needs a 'metric'");
  return {chart, *cfg.metric};
}

ConstitutiveLaw law_of(const RunConfig& cfg, const Chart& chart, FormSampler& rng) {
  switch (cfg.law.kind) {
    case LawSpec::Kind::MaxwellLorentz:
      return MaxwellLorentz{metric_of(cfg, chart), pseudo(Scalar(cfg.Z0))};
    case LawSpec::Kind::Axion:
      return Axion{metric_of(cfg, chart), pseudo(Scalar(cfg.Z0)), Pseudo<Polynomial>{parse_polynomial(cfg.alpha, chart)}};
    case LawSpec::Kind::Linear: {
      LinearLocal law{cfg.p, {}};
      for (const auto& row : cfg.law.chi) {
        std::vector<Polynomial> r;
        for (const auto& e : row) r.push_back(parse_polynomial(e, chart));
        law.chi.push_back(std::move(r));
      }
      return law;
    }
    case LawSpec::Kind::Custom: {
      Form G = parse_field(*cfg.law.custom_G, chart, chart.n - cfg.p, Twist::Twisted, rng);
      return Custom{"fixed", [G](const Form&) { return G; }};
    }
    case LawSpec::Kind::None:
    default:
      throw ConfigError("this command needs a 'law'");
  }
}

// Draws or parses the fields for every instance, in the fixed order
// F, law, G, J, u so that a seed reproduces the same run.
std::vector<Instance> materialize(const RunConfig& cfg, bool want_G, bool want_J, bool force_law) {
  const Chart chart = cfg.chart();
  FormSampler rng(cfg.seed, cfg.degree);
  if (!cfg.F) throw ConfigError("config needs a field 'F'");
  const bool any_random = cfg.F->random || (cfg.G && cfg.G->random) || (cfg.J && cfg.J->random) ||
                          cfg.u.kind == VectorFieldSource::Kind::Random ||
                          (cfg.law.custom_G && cfg.law.custom_G->random);
  const int count = any_random ? cfg.instances : 1;

  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    Instance inst{parse_field(*cfg.F, chart, cfg.p, Twist::Untwisted, rng), std::nullopt, std::nullopt, {}};
    const bool use_law = force_law || (want_G && !cfg.G && cfg.law.kind != LawSpec::Kind::None);
    if (use_law) {
      inst.G = apply_constitutive(law_of(cfg, chart, rng), inst.F);
    } else if (want_G) {
      if (!cfg.G) throw ConfigError("config needs a field 'G' or a 'law'");
      inst.G = parse_field(*cfg.G, chart, cfg.n - cfg.p, Twist::Twisted, rng);
    }
    if (want_J) {
      if (cfg.J) {
        inst.J = parse_field(*cfg.J, chart, cfg.n - cfg.p + 1, Twist::Twisted, rng);
      } else {
        inst.J = ext_d(*inst.G);
      }
    }
    inst.us = vector_fields(cfg, chart, rng);
    out.push_back(std::move(inst));
  }
  return out;
}

std::set<std::string> selected_suites(const RunConfig& cfg, const std::set<std::string>& known,
                                      const std::set<std::string>& defaults) {
  if (cfg.suites.empty()) return defaults;
  std::set<std::string> s;
  for (const auto& name : cfg.suites) {
    if (known.count(name) == 0) throw ConfigError("unknown suite '" + name + "' for this command");
    s.insert(name);
  }
  return s;
}

void energy_momentum_suites(Report& r, const std::set<std::string>& suites, const FieldConfig& fc,
                            const std::vector<VectorField>& us, int i) {
  const bool spacetime = fc.chart().n == 4 && fc.p() == 2;
  for (std::size_t j = 0; j < us.size(); ++j) {
    const VectorField& u = us[j];
    const std::string sfx = instance_suffix(i, static_cast<int>(j));
    if (suites.count("conservation") != 0) {
      add_zero_check(r, "conservation/residual" + sfx, "conservation", "en-mom", conservation_residual(u, fc));
      const Form s = sigma_u(u, fc);
      const Form f = force_u(u, fc);
      const Form phi = obstruction_phi_u(u, fc);
      const bool twisted = s.twist() == Twist::Twisted && f.twist() == Twist::Twisted && phi.twist() == Twist::Twisted;
      add_bool_check(r, "conservation/twist" + sfx, "conservation", "en-mom", twisted,
                     "energy-momentum quantities are not all twisted");
    }
    if (suites.count("identities") != 0) {
      for (const auto& c : identity_suite(u, fc).checks)
        add_zero_check(r, "identities/" + c.id + sfx, "identities", c.equation, c.residual);
    }
    if (suites.count("phi-vanishing") != 0)
      add_zero_check(r, "phi-vanishing/phi" + sfx, "phi-vanishing", "ML", obstruction_phi_u(u, fc));
    if (suites.count("general-vs-specialized") != 0 && spacetime) {
      add_zero_check(r, "general-vs-specialized/sigma" + sfx, "general-vs-specialized", "fu0",
                     sigma_u(u, fc) - spacetime4::sigma_u(u, fc));
      add_zero_check(r, "general-vs-specialized/force" + sfx, "general-vs-specialized", "fu0",
                     force_u(u, fc) - spacetime4::force_u(u, fc));
      add_zero_check(r, "general-vs-specialized/phi" + sfx, "general-vs-specialized", "fu0",
                     obstruction_phi_u(u, fc) - spacetime4::obstruction_phi_u(u, fc));
    }
  }
  if (suites.count("currents") != 0) {
    const Currents c = currents(fc);
    add_zero_check(r, "currents/dJ" + instance_suffix(i), "currents", "Max", ext_d(c.J));
    add_zero_check(r, "currents/dK" + instance_suffix(i), "currents", "Max", ext_d(c.K));
  }
}

template <class Fn>
Report guarded(const char* command, Fn&& body) {
  Report r;
  r.command = command;
  try {
    body(r);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("form expression: ") + e.what());
  } catch (const StructuralError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  r.finalize();
  return r;
}

}  // namespace

std::string witness_of(const Form& residual) {
  if (residual.is_zero()) return "0";
  const auto& [mask, c] = *std::min_element(
      residual.components().begin(), residual.components().end(),
      [](const auto& a, const auto& b) { return indices_of(a.first) < indices_of(b.first); });
  Form single(residual.chart(), residual.degree(), residual.twist());
  single.add_component(mask, c);
  return print_form(single);
}

Report run_check(const RunConfig& cfg) {
  return guarded("check", [&](Report& r) {
    const std::set<std::string> known{"conservation", "identities", "currents", "general-vs-specialized",
                                      "phi-vanishing"};
    std::set<std::string> defaults{"conservation", "identities", "currents"};
    if (cfg.n == 4 && cfg.p == 2) defaults.insert("general-vs-specialized");
    const auto suites = selected_suites(cfg, known, defaults);
    const auto instances = materialize(cfg, true, false, false);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const FieldConfig fc(instances[i].F, *instances[i].G);
      energy_momentum_suites(r, suites, fc, instances[i].us, static_cast<int>(i));
    }
  });
}

Report run_split(const RunConfig& cfg) {
  return guarded("split", [&](Report& r) {
    if (cfg.n != 4 || cfg.p != 2) throw ConfigError("split needs n = 4 and p = 2");
    const auto instances = materialize(cfg, true, true, false);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Instance& in = instances[i];
      const std::string sfx = instance_suffix(static_cast<int>(i));
      const SplitFields s = split_3plus1(in.F, *in.G, *in.J);
      const SpacetimeFields back = recompose(s);
      add_zero_check(r, "split/roundtrip-F" + sfx, "split", "F", back.F - in.F);
      add_zero_check(r, "split/roundtrip-G" + sfx, "split", "G", back.G - *in.G);
      add_zero_check(r, "split/roundtrip-J" + sfx, "split", "G", back.J - *in.J);
      const bool twists = s.E.twist() == Twist::Untwisted && s.B.twist() == Twist::Untwisted &&
                          s.H.twist() == Twist::Twisted && s.D.twist() == Twist::Twisted &&
                          s.j.twist() == Twist::Twisted && s.rho.twist() == Twist::Twisted;
      add_bool_check(r, "split/twist" + sfx, "split", "F,G", twists, "split field twist flags are wrong");
      const std::vector<std::pair<const char*, const Form*>> named{{"E", &s.E}, {"B", &s.B}, {"H", &s.H},
                                                                   {"D", &s.D}, {"j", &s.j}, {"rho", &s.rho}};
      for (const auto& [name, f] : named) r.artifacts.emplace_back(name + sfx, print_form(*f));
    }
  });
}

Report run_constitutive(const RunConfig& cfg) {
  return guarded("constitutive", [&](Report& r) {
    if (cfg.law.kind == LawSpec::Kind::None) throw ConfigError("constitutive needs a 'law'");
    const std::set<std::string> known{"conservation", "identities", "currents", "general-vs-specialized",
                                      "phi-vanishing"};
    const auto suites = selected_suites(cfg, known, {"phi-vanishing", "conservation"});
    const auto instances = materialize(cfg, true, false, true);
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Instance& in = instances[i];
      const std::string sfx = instance_suffix(static_cast<int>(i));
      add_bool_check(r, "constitutive/twist" + sfx, "constitutive", "constit",
                     in.G->twist() == Twist::Twisted && in.G->degree() == cfg.n - cfg.p,
                     "G is not a twisted (n-p)-form");
      r.artifacts.emplace_back("G" + sfx, print_form(*in.G));
      energy_momentum_suites(r, suites, FieldConfig(in.F, *in.G), in.us, static_cast<int>(i));
    }
  });
}

Report run_reciprocity(const RunConfig& cfg) {
  return guarded("reciprocity", [&](Report& r) {
    if (cfg.n != 4 || cfg.p != 2) throw ConfigError("reciprocity needs n = 4 and p = 2");
    const std::set<std::string> known{"star-squared", "invariance", "pair-tensor", "eigenpairs", "factorization",
                                      "orientation"};
    std::set<std::string> defaults{"star-squared", "invariance", "pair-tensor", "eigenpairs", "orientation"};
    if (cfg.metric) defaults.insert("factorization");
    const auto suites = selected_suites(cfg, known, defaults);
    const auto instances = materialize(cfg, true, false, false);
    const Pseudo<Scalar> z = pseudo(Scalar(cfg.z));

    for (std::size_t i = 0; i < instances.size(); ++i) {
      const Instance& in = instances[i];
      const int idx = static_cast<int>(i);
      const std::string sfx = instance_suffix(idx);
      const FieldPairZ pair(in.F, *in.G, z);
      const FieldPairZ image = star_z(pair);

      if (suites.count("star-squared") != 0) {
        const FieldPairZ twice = star_z(image);
        add_zero_check(r, "star-squared/F" + sfx, "star-squared", "recip2", twice.F() + pair.F());
        add_zero_check(r, "star-squared/G" + sfx, "star-squared", "recip2", twice.G() + pair.G());
      }
      if (suites.count("invariance") != 0) {
        const FieldConfig a = pair.config();
        const FieldConfig b = image.config();
        for (std::size_t j = 0; j < in.us.size(); ++j) {
          const VectorField& u = in.us[j];
          const std::string usfx = instance_suffix(idx, static_cast<int>(j));
          add_zero_check(r, "invariance/sigma" + usfx, "invariance", "recipr", sigma_u(u, b) - sigma_u(u, a));
          add_zero_check(r, "invariance/force" + usfx, "invariance", "recipr", force_u(u, b) - force_u(u, a));
          add_zero_check(r, "invariance/phi" + usfx, "invariance", "recipr",
                         obstruction_phi_u(u, b) - obstruction_phi_u(u, a));
        }
      }
      if (suites.count("pair-tensor") != 0) {
        const Scalar k(cfg.k);
        const FieldPairZ rescaled(form_scale(pair.F(), k), form_scale(pair.G(), k.inverse()), z);
        add_bool_check(r, "pair-tensor/k-invariance" + sfx, "pair-tensor", "k",
                       pair_tensor(rescaled) == pair_tensor(pair), "tensor changed under (kF, G/k)");
        add_bool_check(r, "pair-tensor/z-independence" + sfx, "pair-tensor", "O22",
                       pair_tensor(image) == pair_tensor(pair).reciprocal(), "reciprocal tensor depends on z");
      }
      if (suites.count("eigenpairs") != 0) {
        const FieldPairZ cpair(pair.F().complexified(), pair.G().complexified(), z);
        for (Eigen sign : {Eigen::Plus, Eigen::Minus}) {
          const std::string name = sign == Eigen::Plus ? "plus" : "minus";
          const Scalar s(static_cast<long>(sign));
          const FieldPairZ sr = self_reciprocal_pair(cpair, sign);
          const FieldPairZ img = star_z(sr);
          const Scalar eig = s * Scalar::i();
          add_zero_check(r, "eigenpairs/" + name + "-F" + sfx, "eigenpairs", "evs2", img.F() - form_scale(sr.F(), eig));
          add_zero_check(r, "eigenpairs/" + name + "-G" + sfx, "eigenpairs", "evs2", img.G() - form_scale(sr.G(), eig));
          add_zero_check(r, "eigenpairs/" + name + "-relation" + sfx, "eigenpairs", "evs",
                         sr.F() - form_scale(sr.G(), Pseudo<Scalar>{-s * Scalar::i() * z.value}));
        }
      }
      if (suites.count("factorization") != 0) {
        const MetricSpec m = metric_of(cfg, cfg.chart());
        for (const auto& c : check_factorization(m, pseudo(Scalar(cfg.Z0)), pair.F()).checks)
          add_zero_check(r, "factorization/" + c.id + sfx, "factorization", "factor", c.residual);
      }
      if (suites.count("orientation") != 0) {
        std::vector<Rational> reflect(16, Rational(0));
        for (int d = 0; d < 4; ++d) reflect[static_cast<std::size_t>(5 * d)] = d == 1 ? -1 : 1;
        const FieldPairZ pulled = pullback_pair(reflect, pair);
        const FieldPairZ lhs = star_z(pulled);
        const FieldPairZ rhs = pullback_pair(reflect, image);
        add_zero_check(r, "orientation/F" + sfx, "orientation", "recipr", lhs.F() - rhs.F());
        add_zero_check(r, "orientation/G" + sfx, "orientation", "recipr", lhs.G() - rhs.G());
        const bool types = lhs.F().twist() == Twist::Untwisted && lhs.G().twist() == Twist::Twisted &&
                           pulled.z() == -z;
        add_bool_check(r, "orientation/types" + sfx, "orientation", "recipr", types,
                       "reflected pair lost its twist types or z did not change sign");
      }
    }
  });
}

Report run_command(std::string_view command, const RunConfig& cfg) {
  if (command == "check") return run_check(cfg);
  if (command == "split") return run_split(cfg);
  if (command == "constitutive") return run_constitutive(cfg);
  if (command == "reciprocity") return run_reciprocity(cfg);
  throw ConfigError("unknown command '" + std::string(command) + "'");
}

}  // namespace premetric::verify
