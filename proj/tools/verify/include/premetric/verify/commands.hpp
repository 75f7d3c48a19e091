#pragma once

#include <string>
#include <string_view>

#include "premetric/form.hpp"
#include "premetric/verify/config.hpp"
#include "premetric/verify/report.hpp"

namespace premetric::verify {

/// Energy-momentum suites: conservation, identities, currents,
/// general-vs-specialized, phi-vanishing.
Report run_check(const RunConfig& cfg);
/// 3+1 split of (F, G, J) against the time coordinate x0.
Report run_split(const RunConfig& cfg);
/// Applies the configured constitutive law to F and tests the resulting pair.
Report run_constitutive(const RunConfig& cfg);
/// Pair-space reciprocity suites.
Report run_reciprocity(const RunConfig& cfg);

/// Dispatches on "check" | "split" | "constitutive" | "reciprocity".
/// Throws ConfigError for anything that is not a check failure: unknown
/// command or suite, unparsable field text, inconsistent dimensions.
Report run_command(std::string_view command, const RunConfig& cfg);

/// First nonzero component of a form as a single expression term, or "0".
std::string witness_of(const Form& residual);

}  // namespace premetric::verify
