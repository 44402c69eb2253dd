#pragma once

#include <string>

#include <json.hpp>

#include "composite.hpp"
#include "oracle.hpp"

namespace quadcert {

using json = nlohmann::ordered_json;

/// Corpus-sweep verification payloads for the `verify` command.
/// suite is one of "identity", "bounds", "coefficients".
json verify_report(const std::string& suite, double tol,
                   const OracleOptions& opt, bool& violated);

struct SweepOutput {
    json payload;
    std::string csv;
};

/// Gap/bound table over a uniform lambda grid (the Simpson point 1/3 is
/// always included). CSV columns:
///   lambda,gap,bound_first_order,bound_power_mean,tightness
SweepOutput sweep_report(const IntegrandSpec& fn, const Interval& iv,
                         int grid_n, const PowerExponent& q,
                         const OracleOptions& opt);

/// Mean values plus the three application propositions as (gap, bound,
/// holds) triples. prop is "1", "2", "3" or "all".
json means_report(double a, double b, int n, const PowerExponent& q,
                  const std::string& prop, bool& violated);

json certificate_json(const Certificate& cert);

} // namespace quadcert
