#include "commands.hpp"

#include "frobenius.hpp"

#include <map>
#include <set>

namespace orbiq::commands {

json check(const std::string& name, bool pass, const std::string& details) {
  return {{"name", name}, {"pass", pass}, {"details", details}};
}

namespace {

json report(json results, json checks) {
  if (!checks.is_array()) checks = json::array();
  return {{"results", std::move(results)}, {"checks", std::move(checks)}};
}

json curve_json(const OrbiCurve& c) { return {{"literal", c.literal()}, {"genus", c.genus}, {"orders", c.orders}}; }

json wdvv_checks(const Potential& F, json& results) {
  WdvvAudit audit = wdvv_audit(F);
  json fails = json::array();
  for (const auto& f : audit.failures) {
    json type = json::array();
    for (const auto& s : f.type) type.push_back(s.label());
    fails.push_back({{"type", type}, {"residual", f.residual.str()}});
  }
  results["wdvv"] = {{"types_checked", audit.types_checked}, {"nonzero", audit.nonzero}, {"failures", fails}};
  return check("wdvv_residuals_vanish", audit.pass(),
               std::to_string(audit.types_checked) + " types, " + std::to_string(audit.nonzero) + " nonzero");
}

json homogeneity_check(const Potential& F, json& results) {
  HomogeneityReport h = homogeneity_report(F);
  json entries = json::array();
  std::string bad;
  for (const auto& e : h.entries) {
    entries.push_back({{"component", e.component}, {"expected", e.expected.str()}, {"pass", e.pass}});
    if (!e.pass) bad += (bad.empty() ? "" : ", ") + e.component;
  }
  results["homogeneity"] = entries;
  return check("homogeneity", h.pass(), bad.empty() ? "all components homogeneous" : "inhomogeneous: " + bad);
}

// Nontrivial points in input order.
OrbiCurve drop_trivial(const OrbiCurve& c) {
  std::vector<int> a;
  for (int x : c.orders)
    if (x >= 2) a.push_back(x);
  return OrbiCurve(c.genus, a);
}

}  // namespace

json classify_report(const OrbiCurve& curve) {
  BasisSet basis(curve);
  json b = json::array();
  for (std::size_t k = 0; k < basis.size(); ++k)
    b.push_back({{"label", basis[k].label()}, {"degree", basis.orbifold_degree(k).str()},
                 {"dual", basis[basis.dual_position(k)].label()}});
  Pairing P = pairing_matrix(curve);
  bool dual_ok = true;
  for (std::size_t u = 0; u < basis.size(); ++u)
    for (std::size_t v = 0; v < basis.size(); ++v) {
      Ratio s(0);
      for (std::size_t w = 0; w < basis.size(); ++w) s += P.g(u, w) * P.g_inv(w, v);
      if (!(s == Ratio(u == v ? 1 : 0))) dual_ok = false;
    }
  json results = {{"curve", curve_json(curve)},
                  {"chi_orb", euler_char(curve).str()},
                  {"class", to_string(classify(curve))},
                  {"N", basis.size()},
                  {"basis", b}};
  return report(results, json::array({check("pairing_dual_basis", dual_ok, "g * g^-1 = identity")}));
}

json chen_ruan_report(const OrbiCurve& curve) {
  AlgebraData<Ratio> alg = chen_ruan_algebra(curve);
  json checks = json::array();
  try {
    validate_algebra(alg);
    checks.push_back(check("commutative_unital_frobenius", true));
  } catch (const std::invalid_argument& e) {
    checks.push_back(check("commutative_unital_frobenius", false, e.what()));
  }
  const std::size_t n = alg.dim;
  std::size_t bad = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        std::vector<Ratio> ex(n, Ratio(0)), ey(n, Ratio(0)), ez(n, Ratio(0));
        ex[x] = ey[y] = ez[z] = Ratio(1);
        if (!(algebra_product(alg, algebra_product(alg, ex, ey), ez) == algebra_product(alg, ex, algebra_product(alg, ey, ez))))
          ++bad;
      }
  checks.push_back(check("associative", bad == 0, std::to_string(n * n * n) + " basis triples, " + std::to_string(bad) + " failures"));
  json table = json::array();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      std::string prod;
      for (std::size_t w = 0; w < n; ++w) {
        const Ratio& c = alg.c(u, v, w);
        if (c.is_zero()) continue;
        if (!prod.empty()) prod += " + ";
        prod += (c.is_one() ? "" : c.str() + "*") + "phi_" + alg.labels[w];
      }
      if (!prod.empty()) table.push_back({{"x", alg.labels[u]}, {"y", alg.labels[v]}, {"product", prod}});
    }
  auto tf = trace_form_semisimple(alg);
  json results = {{"curve", curve_json(curve)},
                  {"algebra", algebra_to_json(alg)},
                  {"products", table},
                  {"trace_form_det", tf.det.str()},
                  {"semisimple", tf.semisimple}};
  return report(results, checks);
}

json reconstruct_report(int a, int a_max) {
  SolveOptions opts;
  opts.a_max = a_max;
  SolveStats stats;
  TearDropData td = solve_teardrop(a, opts, &stats);
  Potential F = teardrop_potential(td);
  json results = {{"a", a},
                  {"A", td.A.str()},
                  {"B1", td.B1.str()},
                  {"stats", {{"unknowns", stats.unknowns}, {"equations", stats.equations}, {"stages", stats.stages}}},
                  {"potential", potential_to_json(F)}};
  json checks = json::array();
  StructureReport sr = verify_structure(td);
  for (const auto& c : sr.checks) checks.push_back(check(c.name, c.pass, c.detail));
  checks.push_back(wdvv_checks(F, results));
  checks.push_back(homogeneity_check(F, results));
  return report(results, checks);
}

json wdvv_report(const Potential& F) {
  json results = {{"curve", curve_json(F.curve)}, {"truncation_order", F.truncation_order()}};
  json checks = json::array();
  checks.push_back(wdvv_checks(F, results));
  checks.push_back(homogeneity_check(F, results));
  return report(results, checks);
}

json euler_det_report(const OrbiCurve& curve, const Potential& F) {
  if (!(F.curve == curve))
    throw std::invalid_argument("potential belongs to " + F.curve.literal() + ", not " + curve.literal());
  auto alg = big_quantum_algebra(F);
  auto res = euler_class_result(alg);
  json element = json::array();
  for (std::size_t k = 0; k < alg.dim; ++k) element.push_back({{"label", alg.labels[k]}, {"coefficient", res.element[k].str()}});
  json by_order = json::array();
  for (int d = 0; d <= res.det.order(); ++d) by_order.push_back(res.det[d].str());
  json results = {{"curve", curve_json(curve)},
                  {"truncation_order", F.truncation_order()},
                  {"euler_class", element},
                  {"det", res.det.str()},
                  {"det_by_order", by_order},
                  {"verdict", to_string(res.verdict)}};
  json checks = json::array();
  checks.push_back(check("euler_det_nonzero", res.verdict == EulerVerdict::Semisimple, to_string(res.verdict)));
  bool leading_applicable = curve.genus == 0 && F.truncation_order() == 1 && !curve.orders.empty();
  for (int a : curve.orders) leading_applicable = leading_applicable && a >= 2;
  if (leading_applicable) {
    LeadingDetReport lr = leading_det_check(curve, F);
    results["leading"] = {{"q0", lr.q0.str()}, {"q1", lr.q1.str()}, {"q1_reduced", lr.q1_reduced.str()}, {"expected", lr.expected.str()}};
    checks.push_back(check("det_q0_vanishes", lr.q0_vanishes, "q^0 coefficient " + lr.q0.str()));
    checks.push_back(check("det_q1_leading_term", lr.q1_matches,
                           "reduced " + lr.q1_reduced.str() + ", expected " + lr.expected.str()));
  }
  return report(results, checks);
}

json smallqh_report(const OrbiCurve& curve, const Ratio& Qval) {
  PresentedAlgebra p = presentation(curve, Qval);
  QuotientAlgebra q = quotient_algebra(p);
  TraceFormResult tf = trace_form_semisimple(q.algebra);
  SolutionSet sol = solve_points(p, q);
  const std::size_t N = basis_size(curve);
  json gb = json::array();
  for (const auto& g : q.basis) gb.push_back(g.str());
  json results = {{"curve", curve_json(curve)},
                  {"Q", Qval.str()},
                  {"presentation", to_json(p)},
                  {"groebner_basis", gb},
                  {"quotient_dim", q.dim()},
                  {"N", N},
                  {"trace_form_det", tf.det.str()},
                  {"solutions", to_json(sol)}};
  json checks = json::array();
  checks.push_back(check("quotient_dim_equals_N", q.dim() == N, std::to_string(q.dim()) + " vs " + std::to_string(N)));
  checks.push_back(check("trace_form_nondegenerate", tf.semisimple, "det = " + tf.det.str()));
  checks.push_back(check("distinct_points_equal_N", sol.points.size() == N,
                         std::to_string(sol.points.size()) + " distinct points"));
  checks.push_back(check("residual_small", sol.residual_bound <= 1e-8, "max residual " + std::to_string(sol.residual_bound)));
  return report(results, checks);
}

json hurwitz_report(int d, const std::string& profiles) {
  HurwitzQuery q = parse_hurwitz_query(d, profiles);
  json prof = json::array();
  for (const auto& p : q.profiles) prof.push_back(p.parts);
  const bool feasible = rh_feasible(q);
  Ratio value = hurwitz_connected(q);
  json results = {{"d", d}, {"profiles", prof}, {"rh_feasible", feasible}, {"value", value.str()}};
  json checks = json::array();
  Ratio by_char = connected_count_character(q);
  results["connected_count_character"] = by_char.str();
  if (d <= kEnumerationMaxDegree) {
    try {
      Ratio by_enum = connected_count_enumeration(q);
      results["connected_count_enumeration"] = by_enum.str();
      checks.push_back(check("enumeration_matches_character", by_enum == by_char, by_enum.str() + " vs " + by_char.str()));
    } catch (const HurwitzBudgetError& e) {
      results["enumeration_skipped"] = e.what();
    }
  }
  return report(results, checks);
}

json pipeline_report(const OrbiCurve& curve, int a_max) {
  json results = {{"curve", curve_json(curve)},
                  {"chi_orb", euler_char(curve).str()},
                  {"class", to_string(classify(curve))},
                  {"N", basis_size(curve)},
                  {"a_max", a_max}};
  json checks = json::array();

  json big;
  if (curve.genus > 0) {
    AlgebraData<Ratio> alg = chen_ruan_algebra(curve);
    auto res = euler_class_result(alg);
    auto tf = trace_form_semisimple(alg);
    big = {{"status", "not_semisimple"},
           {"reason", "positive genus: the quantum product equals the Chen-Ruan product"},
           {"euler_det", res.det.str()},
           {"trace_form_det", tf.det.str()}};
    checks.push_back(check("big.chen_ruan_has_nilpotents", res.det.is_zero() && !tf.semisimple,
                           "det(e*) = " + res.det.str() + ", trace det = " + tf.det.str()));
  } else {
    const OrbiCurve bc = drop_trivial(curve);
    std::set<int> distinct(bc.orders.begin(), bc.orders.end());
    int over = 0;
    for (int a : distinct)
      if (a > a_max) over = a;
    if (over) {
      big = {{"status", "skipped"},
             {"reason", "reconstruction budget: a = " + std::to_string(over) + " > a_max = " + std::to_string(a_max)}};
    } else {
      bool ok = true;
      std::map<int, TearDropData> solved;
      json recon = json::array();
      for (int a : distinct) {
        SolveOptions opts;
        opts.a_max = a_max;
        try {
          TearDropData td = solve_teardrop(a, opts);
          StructureReport sr = verify_structure(td);
          std::string bad;
          for (const auto& c : sr.checks)
            if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.name;
          checks.push_back(check("big.reconstruct_a" + std::to_string(a), sr.pass(),
                                 sr.pass() ? "all structure checks pass" : "failed: " + bad));
          recon.push_back({{"a", a}, {"A", td.A.str()}, {"B1", td.B1.str()}});
          ok = ok && sr.pass();
          solved.emplace(a, std::move(td));
        } catch (const ReconstructionError& e) {
          checks.push_back(check("big.reconstruct_a" + std::to_string(a), false, e.what()));
          ok = false;
          break;
        }
      }
      big["reconstruction"] = recon;
      big["curve"] = bc.literal();
      if (ok) {
        std::vector<TearDropData> tds;
        for (int a : bc.orders) tds.push_back(solved.at(a));
        Potential F = bc.orders.empty() ? classical_potential(bc) : assemble_multipoint(tds);
        if (bc.orders.empty()) F.B[0] = MPoly::constant(F.table, Ratio(1));
        json sub;
        checks.push_back(wdvv_checks(F, sub));
        checks.push_back(homogeneity_check(F, sub));
        for (auto it = checks.end() - 2; it != checks.end(); ++it) (*it)["name"] = "big." + (*it)["name"].get<std::string>();
        if (!bc.orders.empty()) {
          B1AssemblyReport b1 = b1_assembly_check(bc, tds);
          std::string issues;
          for (const auto& s : b1.issues) issues += (issues.empty() ? "" : "; ") + s;
          checks.push_back(check("big.b1_covering_formula", b1.pass(), b1.pass() ? "B1 = " + b1.assembled.str() : issues));
        }
        auto alg = big_quantum_algebra(F);
        auto res = euler_class_result(alg);
        big["det"] = res.det.str();
        big["wdvv"] = sub["wdvv"];
        if (!bc.orders.empty()) {
          LeadingDetReport lr = leading_det_check(bc, F);
          big["leading_expected"] = lr.expected.str();
          big["leading_reduced"] = lr.q1_reduced.str();
          checks.push_back(check("big.det_q0_vanishes", lr.q0_vanishes, "q^0 coefficient " + lr.q0.str()));
          checks.push_back(check("big.det_q1_leading_term", lr.q1_matches,
                                 "reduced " + lr.q1_reduced.str() + ", expected " + lr.expected.str()));
        }
        const bool semisimple = res.verdict == EulerVerdict::Semisimple;
        checks.push_back(check("big.generically_semisimple", semisimple, "det(e*) = " + res.det.str()));
        big["status"] = semisimple ? "pass" : "fail";
      } else {
        big["status"] = "fail";
      }
    }
  }
  results["big"] = big;

  json small;
  try {
    SmallVerdict v = semisimplicity_verdict(curve);
    small = {{"semisimple", v.semisimple}};
    if (v.family) small["family"] = *v.family;
    if (v.trace_det) small["trace_form_det"] = v.trace_det->str();
    if (v.solutions) small["solutions"] = to_json(*v.solutions);
    if (v.certificate) small["certificate"] = to_json(*v.certificate);
    const bool fano = v.cls == CurveClass::Fano;
    checks.push_back(check("small.semisimple_iff_fano", v.semisimple == fano,
                           std::string(v.semisimple ? "semisimple" : "not semisimple") +
                               (v.solutions ? ", " + std::to_string(v.solutions->points.size()) + " points" : "") +
                               (v.certificate ? ", nilpotent witness phi_" + v.certificate->witness.label() : "")));
  } catch (const InternalInconsistency& e) {
    small = {{"error", e.what()}};
    checks.push_back(check("small.semisimple_iff_fano", false, e.what()));
  }
  results["small"] = small;
  return report(results, checks);
}

}  // namespace orbiq::commands
