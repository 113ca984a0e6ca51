#include "orbiq/orbiq.h"

#include "commands.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

#ifndef ORBIQ_VERSION
#define ORBIQ_VERSION "0.0.0"
#endif

struct orbiq_curve {
  orbiq::OrbiCurve value;
};

struct orbiq_potential {
  orbiq::Potential value;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

orbiq_status fail(orbiq_status st, const std::string& msg) {
  last_error = msg;
  return st;
}

template <typename F>
orbiq_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return ORBIQ_OK;
  } catch (const orbiq::CurveSyntaxError& e) {
    return fail(ORBIQ_ERR_PARSE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(ORBIQ_ERR_PARSE, e.what());
  } catch (const orbiq::ReconstructionError& e) {
    using K = orbiq::ReconstructionError::Kind;
    switch (e.kind()) {
      case K::Inconsistent: return fail(ORBIQ_ERR_INCONSISTENT, e.what());
      case K::Underdetermined: return fail(ORBIQ_ERR_UNDERDETERMINED, e.what());
      case K::Nonlinear: return fail(ORBIQ_ERR_NONLINEAR, e.what());
      case K::Budget: return fail(ORBIQ_ERR_BUDGET, e.what());
      case K::InvalidOrder: return fail(ORBIQ_ERR_INVALID_ARGUMENT, e.what());
    }
    return fail(ORBIQ_ERR_INTERNAL, e.what());
  } catch (const orbiq::HurwitzBudgetError& e) {
    return fail(ORBIQ_ERR_BUDGET, e.what());
  } catch (const orbiq::NotFanoError& e) {
    return fail(ORBIQ_ERR_DOMAIN, e.what());
  } catch (const orbiq::PositiveDimensionalError& e) {
    return fail(ORBIQ_ERR_DOMAIN, e.what());
  } catch (const orbiq::InternalInconsistency& e) {
    return fail(ORBIQ_ERR_INTERNAL, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ORBIQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(ORBIQ_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(ORBIQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(ORBIQ_ERR_INTERNAL, "unknown exception");
  }
}

template <typename F>
orbiq_status emit(char** out, F&& make) {
  if (!out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    std::string s = make().dump();
    *out = dup(s);
    if (!*out) throw std::bad_alloc();
  });
}

int budget(int a_max) { return a_max > 0 ? a_max : orbiq::kDefaultAMax; }

}  // namespace

extern "C" {

const char* orbiq_version(void) { return ORBIQ_VERSION; }

const char* orbiq_status_name(orbiq_status status) {
  switch (status) {
    case ORBIQ_OK: return "ok";
    case ORBIQ_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case ORBIQ_ERR_PARSE: return "parse_error";
    case ORBIQ_ERR_DOMAIN: return "domain_error";
    case ORBIQ_ERR_INCONSISTENT: return "inconsistent";
    case ORBIQ_ERR_UNDERDETERMINED: return "underdetermined";
    case ORBIQ_ERR_NONLINEAR: return "nonlinear";
    case ORBIQ_ERR_BUDGET: return "budget_exceeded";
    case ORBIQ_ERR_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* orbiq_last_error(void) { return last_error.c_str(); }

void orbiq_string_free(char* s) { std::free(s); }

orbiq_status orbiq_curve_parse(const char* literal, orbiq_curve** out) {
  if (!literal || !out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new orbiq_curve{orbiq::parse_curve(literal)}; });
}

void orbiq_curve_free(orbiq_curve* curve) { delete curve; }

orbiq_status orbiq_curve_literal(const orbiq_curve* curve, char** out) {
  if (!curve || !out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = dup(curve->value.literal());
  return ORBIQ_OK;
}

orbiq_status orbiq_curve_basis_size(const orbiq_curve* curve, int* out) {
  if (!curve || !out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = static_cast<int>(orbiq::basis_size(curve->value));
  return ORBIQ_OK;
}

orbiq_status orbiq_potential_from_json(const char* json, orbiq_potential** out) {
  if (!json || !out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    orbiq::Potential F = orbiq::potential_from_json(nlohmann::json::parse(json));
    *out = new orbiq_potential{std::move(F)};
  });
}

orbiq_status orbiq_potential_to_json(const orbiq_potential* potential, char** out) {
  if (!potential) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null potential");
  return emit(out, [&] { return orbiq::potential_to_json(potential->value); });
}

void orbiq_potential_free(orbiq_potential* potential) { delete potential; }

orbiq_status orbiq_reconstruct(int a, int a_max, orbiq_potential** out) {
  if (!out) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    orbiq::SolveOptions opts;
    opts.a_max = budget(a_max);
    *out = new orbiq_potential{orbiq::teardrop_potential(orbiq::solve_teardrop(a, opts))};
  });
}

orbiq_status orbiq_classify(const orbiq_curve* curve, char** out_json) {
  if (!curve) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null curve");
  return emit(out_json, [&] { return orbiq::commands::classify_report(curve->value); });
}

orbiq_status orbiq_chen_ruan(const orbiq_curve* curve, char** out_json) {
  if (!curve) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null curve");
  return emit(out_json, [&] { return orbiq::commands::chen_ruan_report(curve->value); });
}

orbiq_status orbiq_reconstruct_report(int a, int a_max, char** out_json) {
  return emit(out_json, [&] { return orbiq::commands::reconstruct_report(a, budget(a_max)); });
}

orbiq_status orbiq_wdvv_check(const orbiq_potential* potential, char** out_json) {
  if (!potential) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null potential");
  return emit(out_json, [&] { return orbiq::commands::wdvv_report(potential->value); });
}

orbiq_status orbiq_euler_det(const orbiq_curve* curve, const orbiq_potential* potential, char** out_json) {
  if (!curve || !potential) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null argument");
  return emit(out_json, [&] { return orbiq::commands::euler_det_report(curve->value, potential->value); });
}

orbiq_status orbiq_smallqh_solve(const orbiq_curve* curve, const char* q, char** out_json) {
  if (!curve) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null curve");
  return emit(out_json, [&] {
    orbiq::Ratio Q = orbiq::Ratio::parse(q ? q : "1");
    return orbiq::commands::smallqh_report(curve->value, Q);
  });
}

orbiq_status orbiq_hurwitz(int d, const char* profiles, char** out_json) {
  return emit(out_json, [&] { return orbiq::commands::hurwitz_report(d, profiles ? profiles : ""); });
}

orbiq_status orbiq_pipeline(const orbiq_curve* curve, int a_max, char** out_json) {
  if (!curve) return fail(ORBIQ_ERR_INVALID_ARGUMENT, "null curve");
  return emit(out_json, [&] { return orbiq::commands::pipeline_report(curve->value, budget(a_max)); });
}

}  // extern "C"
