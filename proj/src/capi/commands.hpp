#pragma once

// Command reports shared by the C API and the CLI: each returns
// {"results": ..., "checks": [{name, pass, details}, ...]}.

#include "hurwitz.hpp"
#include "potential.hpp"
#include "reconstruct.hpp"
#include "smallqh.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace orbiq::commands {

using nlohmann::json;

json check(const std::string& name, bool pass, const std::string& details = "");

json classify_report(const OrbiCurve& curve);
json chen_ruan_report(const OrbiCurve& curve);
json reconstruct_report(int a, int a_max);
json wdvv_report(const Potential& F);
json euler_det_report(const OrbiCurve& curve, const Potential& F);
json smallqh_report(const OrbiCurve& curve, const Ratio& Qval);
json hurwitz_report(int d, const std::string& profiles);
json pipeline_report(const OrbiCurve& curve, int a_max);

}  // namespace orbiq::commands
