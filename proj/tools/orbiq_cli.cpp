// orbiq command-line front end.  Talks to the library only through the C API.

#include "orbiq/orbiq.h"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct CurveHandle {
  orbiq_curve* ptr = nullptr;
  ~CurveHandle() { orbiq_curve_free(ptr); }
};

struct PotentialHandle {
  orbiq_potential* ptr = nullptr;
  ~PotentialHandle() { orbiq_potential_free(ptr); }
};

struct CallError {
  orbiq_status status;
  std::string message;
};

// Result of one library call: the parsed report or an error.
struct Outcome {
  std::optional<json> report;
  std::optional<CallError> error;
};

Outcome take(orbiq_status st, char*& text) {
  Outcome o;
  if (st == ORBIQ_OK) {
    o.report = json::parse(text);
  } else {
    o.error = CallError{st, orbiq_last_error()};
  }
  orbiq_string_free(text);
  return o;
}

Outcome error_outcome(orbiq_status st) { return Outcome{std::nullopt, CallError{st, orbiq_last_error()}}; }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CLI::ValidationError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> read_curve_list(const std::string& path) {
  std::vector<std::string> out;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

bool all_pass(const json& checks) {
  for (const auto& c : checks)
    if (!c.at("pass").get<bool>()) return false;
  return true;
}

// ---- text rendering ---------------------------------------------------------

std::string complex_str(const json& c) {
  std::ostringstream os;
  os << std::setprecision(10);
  double re = c[0].get<double>(), im = c[1].get<double>();
  os << re;
  if (im != 0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

void render_points(std::ostream& os, const json& sol) {
  os << "  points (" << sol.at("distinct").get<long>() << " distinct, residual " << sol.at("residual_bound").get<double>()
     << ")\n";
  for (const auto& p : sol.at("points")) {
    os << "    (";
    bool first = true;
    for (const auto& c : p.at("coordinates")) {
      os << (first ? "" : ", ") << complex_str(c);
      first = false;
    }
    os << ")";
    if (p.at("multiplicity").get<int>() != 1) os << " x" << p.at("multiplicity").get<int>();
    os << "\n";
  }
}

void render_results(std::ostream& os, const std::string& command, const json& r) {
  if (command == "classify") {
    os << "  curve    " << r["curve"]["literal"].get<std::string>() << "\n"
       << "  chi_orb  " << r["chi_orb"].get<std::string>() << "\n"
       << "  class    " << r["class"].get<std::string>() << "\n"
       << "  N        " << r["N"] << "\n  basis\n";
    for (const auto& b : r["basis"])
      os << "    phi_" << std::left << std::setw(6) << b["label"].get<std::string>() << " deg " << b["degree"].get<std::string>()
         << "  dual phi_" << b["dual"].get<std::string>() << "\n";
  } else if (command == "chen-ruan") {
    os << "  curve " << r["curve"]["literal"].get<std::string>() << ", trace form det " << r["trace_form_det"].get<std::string>()
       << "\n";
    for (const auto& p : r["products"])
      os << "    phi_" << p["x"].get<std::string>() << " * phi_" << p["y"].get<std::string>() << " = "
         << p["product"].get<std::string>() << "\n";
  } else if (command == "reconstruct") {
    os << "  a   " << r["a"] << "\n  A   " << r["A"].get<std::string>() << "\n  B1  " << r["B1"].get<std::string>() << "\n"
       << "  unknowns " << r["stats"]["unknowns"] << ", equations " << r["stats"]["equations"] << ", stages "
       << r["stats"]["stages"] << "\n";
  } else if (command == "wdvv-check") {
    os << "  curve " << r["curve"]["literal"].get<std::string>() << ": " << r["wdvv"]["types_checked"] << " types, "
       << r["wdvv"]["nonzero"] << " nonzero residuals\n";
    for (const auto& f : r["wdvv"]["failures"]) os << "    " << f["type"].dump() << ": " << f["residual"].get<std::string>() << "\n";
  } else if (command == "euler-det") {
    os << "  det(e_q*) = " << r["det"].get<std::string>() << "\n  verdict   " << r["verdict"].get<std::string>() << "\n";
  } else if (command == "smallqh solve") {
    os << "  family " << r["presentation"]["family"].get<std::string>() << ", Q = " << r["Q"].get<std::string>()
       << ", quotient dim " << r["quotient_dim"] << ", trace form det " << r["trace_form_det"].get<std::string>() << "\n";
    render_points(os, r["solutions"]);
  } else if (command == "hurwitz") {
    os << "  H = " << r["value"].get<std::string>() << " (Riemann-Hurwitz " << (r["rh_feasible"].get<bool>() ? "feasible" : "infeasible")
       << ")\n";
  } else if (command == "pipeline") {
    os << "  curve " << r["curve"]["literal"].get<std::string>() << ": " << r["class"].get<std::string>() << ", chi_orb "
       << r["chi_orb"].get<std::string>() << ", N " << r["N"] << "\n";
    const json& big = r["big"];
    os << "  big quantum:   " << big.value("status", "fail");
    if (big.contains("reason")) os << " (" << big["reason"].get<std::string>() << ")";
    if (big.contains("leading_reduced")) os << ", leading det " << big["leading_reduced"].get<std::string>() << " q";
    os << "\n";
    const json& small = r["small"];
    os << "  small quantum: ";
    if (small.contains("error")) {
      os << "error (" << small["error"].get<std::string>() << ")\n";
    } else {
      os << (small["semisimple"].get<bool>() ? "semisimple" : "not semisimple");
      if (small.contains("solutions")) os << " (" << small["solutions"]["distinct"] << " points)";
      if (small.contains("certificate"))
        os << " (nilpotent phi_" << small["certificate"]["witness"].get<std::string>() << ", power "
           << small["certificate"]["exponent_bound"] << ")";
      os << "\n";
    }
  }
}

void render_checks(std::ostream& os, const json& checks, const std::string& indent) {
  for (const auto& c : checks) {
    os << indent << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ") << c["name"].get<std::string>();
    const std::string d = c["details"].get<std::string>();
    if (!d.empty()) os << "  " << d;
    os << "\n";
  }
}

void render_text(std::ostream& os, const json& env) {
  const std::string command = env["command"].get<std::string>();
  os << "orbiq " << command << " (" << env["tool_version"].get<std::string>() << ")\n";
  if (env.contains("error")) {
    os << "  error [" << env["error"]["status"].get<std::string>() << "] " << env["error"]["message"].get<std::string>() << "\n";
  }
  if (env.contains("results")) {
    const json& r = env["results"];
    if (r.contains("batch")) {
      for (const auto& item : r["batch"]) {
        os << "- " << item["curve"].get<std::string>() << "\n";
        if (item.contains("error")) {
          os << "  error [" << item["error"]["status"].get<std::string>() << "] " << item["error"]["message"].get<std::string>()
             << "\n";
          continue;
        }
        render_results(os, command, item["results"]);
        render_checks(os, item["checks"], "    ");
      }
    } else {
      render_results(os, command, r);
    }
  }
  if (!env.contains("results") || !env["results"].contains("batch")) render_checks(os, env["checks"], "  ");
  std::size_t failed = 0;
  for (const auto& c : env["checks"])
    if (!c["pass"].get<bool>()) ++failed;
  os << "checks: " << env["checks"].size() - failed << " passed, " << failed << " failed\n";
}

// ---- envelope ---------------------------------------------------------------

struct Global {
  std::string format = "text";
  std::string out;
  int a_max = 4;
};

int finish(const Global& g, const std::string& command, json inputs, const Outcome& o,
           std::chrono::steady_clock::time_point start, const std::string& artifact = "") {
  json env = {{"tool_version", orbiq_version()}, {"command", command}, {"inputs", std::move(inputs)}};
  int code = kExitOk;
  if (o.error) {
    env["checks"] = json::array();
    env["error"] = {{"status", orbiq_status_name(o.error->status)}, {"message", o.error->message}};
    code = o.error->status == ORBIQ_ERR_PARSE ? kExitUsage : kExitFailure;
  } else {
    env["results"] = o.report->at("results");
    env["checks"] = o.report->at("checks");
    if (!all_pass(env["checks"])) code = kExitFailure;
  }
  env["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();

  if (!g.out.empty()) {
    std::ofstream f(g.out);
    if (!f) {
      spdlog::error("cannot write {}", g.out);
      return kExitFailure;
    }
    f << (artifact.empty() ? env.dump(2) : artifact) << "\n";
    spdlog::info("wrote {}", g.out);
  }
  if (g.format == "json") {
    std::cout << env.dump(2) << "\n";
  } else {
    render_text(std::cout, env);
  }
  if (o.error) spdlog::error("{}: {}", command, o.error->message);
  return code;
}

Outcome with_curve(const std::string& literal, const std::function<Outcome(orbiq_curve*)>& body) {
  CurveHandle c;
  orbiq_status st = orbiq_curve_parse(literal.c_str(), &c.ptr);
  if (st != ORBIQ_OK) return error_outcome(st);
  return body(c.ptr);
}

Outcome with_potential_file(const std::string& path, const std::function<Outcome(orbiq_potential*)>& body) {
  PotentialHandle p;
  std::string text = read_file(path);
  orbiq_status st = orbiq_potential_from_json(text.c_str(), &p.ptr);
  if (st != ORBIQ_OK) return error_outcome(st);
  return body(p.ptr);
}

// Runs one curve command over every literal of a file in worker threads; the
// merged report keeps input order.
Outcome run_batch(const std::vector<std::string>& curves, const std::function<Outcome(const std::string&)>& one) {
  std::vector<Outcome> outs(curves.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(curves.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < curves.size(); i = next++) {
        spdlog::debug("batch item {}: {}", i, curves[i]);
        outs[i] = one(curves[i]);
      }
    });
  for (auto& t : pool) t.join();

  json items = json::array();
  json checks = json::array();
  for (std::size_t i = 0; i < curves.size(); ++i) {
    json item = {{"curve", curves[i]}};
    if (outs[i].error) {
      item["error"] = {{"status", orbiq_status_name(outs[i].error->status)}, {"message", outs[i].error->message}};
      checks.push_back({{"name", curves[i] + ": completed"}, {"pass", false}, {"details", outs[i].error->message}});
    } else {
      item["results"] = outs[i].report->at("results");
      item["checks"] = outs[i].report->at("checks");
      for (const auto& c : item["checks"])
        checks.push_back({{"name", curves[i] + ": " + c["name"].get<std::string>()}, {"pass", c["pass"]}, {"details", c["details"]}});
    }
    items.push_back(std::move(item));
  }
  return Outcome{json{{"results", {{"batch", items}}}, {"checks", checks}}, std::nullopt};
}

void configure_logging() {
  auto logger = spdlog::stderr_color_mt("orbiq");
  spdlog::set_default_logger(logger);
  spdlog::set_pattern("[%l] %v");
  const char* env = std::getenv("ORBIQ_LOG");
  std::string level = env ? env : "error";
  if (level == "debug") {
    spdlog::set_level(spdlog::level::debug);
  } else if (level == "info") {
    spdlog::set_level(spdlog::level::info);
  } else {
    spdlog::set_level(spdlog::level::err);
  }
}

}  // namespace

int main(int argc, char** argv) {
  configure_logging();
  CLI::App app{"orbiq: exact quantum cohomology of orbi-curves"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(orbiq_version()));

  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", g.out, "Write the report (or, for reconstruct, the potential) to a file");

  std::string curve, curves_file, potential_file, profiles, qval = "1";
  int a = 0, d = 0;

  auto add_curve_options = [&](CLI::App* sub, bool batch) {
    auto* c = sub->add_option("literal", curve, "Curve literal, e.g. \"g=0;a=2,3,5\"");
    sub->add_option("--curve", curve, "Curve literal")->excludes(c);
    if (batch) sub->add_option("--curves", curves_file, "File with one curve literal per line")->check(CLI::ExistingFile);
  };

  auto* classify = app.add_subcommand("classify", "Euler characteristic, class and basis of a curve");
  add_curve_options(classify, true);
  auto* pipeline = app.add_subcommand("pipeline", "Big and small quantum semisimplicity verdicts");
  add_curve_options(pipeline, true);
  pipeline->add_option("--a-max", g.a_max, "Largest tear-drop order to reconstruct")->check(CLI::PositiveNumber);
  auto* chen = app.add_subcommand("chen-ruan", "Chen-Ruan product table");
  add_curve_options(chen, false);
  auto* recon = app.add_subcommand("reconstruct", "Reconstruct the tear-drop potential from WDVV");
  recon->add_option("--a", a, "Orbifold order")->required();
  recon->add_option("--a-max", g.a_max, "Reconstruction budget")->check(CLI::PositiveNumber);
  auto* edet = app.add_subcommand("euler-det", "Determinant of quantum multiplication by the Euler class");
  edet->add_option("--curve", curve, "Curve literal")->required();
  edet->add_option("--potential", potential_file, "Potential JSON file")->required()->check(CLI::ExistingFile);
  auto* wdvv = app.add_subcommand("wdvv-check", "Audit all WDVV residuals of a potential");
  wdvv->add_option("--potential", potential_file, "Potential JSON file")->required()->check(CLI::ExistingFile);
  auto* smallqh = app.add_subcommand("smallqh", "Small quantum cohomology");
  auto* solve = smallqh->add_subcommand("solve", "Solve the presentation of a Fano curve");
  smallqh->require_subcommand(1);
  add_curve_options(solve, true);
  solve->add_option("--q", qval, "Rational value of Q");
  auto* hur = app.add_subcommand("hurwitz", "Connected genus-zero Hurwitz number");
  hur->add_option("--d", d, "Covering degree")->required();
  hur->add_option("--profiles", profiles, "Profiles, e.g. \"3|2,1|2,1\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  auto need_curve = [&](CLI::App* sub) {
    if (curve.empty() && curves_file.empty()) {
      std::cerr << sub->get_name() << ": a curve literal or --curves file is required\n";
      std::exit(kExitUsage);
    }
  };

  try {
    if (classify->parsed() || pipeline->parsed() || solve->parsed()) {
      CLI::App* sub = classify->parsed() ? classify : (pipeline->parsed() ? pipeline : solve);
      need_curve(sub);
      const std::string command = classify->parsed() ? "classify" : (pipeline->parsed() ? "pipeline" : "smallqh solve");
      auto one = [&](const std::string& lit) {
        spdlog::info("{} {}", command, lit);
        return with_curve(lit, [&](orbiq_curve* c) {
          char* text = nullptr;
          orbiq_status st;
          if (classify->parsed()) {
            st = orbiq_classify(c, &text);
          } else if (pipeline->parsed()) {
            st = orbiq_pipeline(c, g.a_max, &text);
          } else {
            st = orbiq_smallqh_solve(c, qval.c_str(), &text);
          }
          return take(st, text);
        });
      };
      json inputs = json::object();
      if (pipeline->parsed()) inputs["a_max"] = g.a_max;
      if (solve->parsed()) inputs["q"] = qval;
      if (!curves_file.empty()) {
        inputs["curves_file"] = curves_file;
        auto list = read_curve_list(curves_file);
        inputs["curves"] = list;
        return finish(g, command, inputs, run_batch(list, one), start);
      }
      inputs["curve"] = curve;
      return finish(g, command, inputs, one(curve), start);
    }
    if (chen->parsed()) {
      need_curve(chen);
      auto o = with_curve(curve, [](orbiq_curve* c) {
        char* text = nullptr;
        return take(orbiq_chen_ruan(c, &text), text);
      });
      return finish(g, "chen-ruan", {{"curve", curve}}, o, start);
    }
    if (recon->parsed()) {
      char* text = nullptr;
      Outcome o = take(orbiq_reconstruct_report(a, g.a_max, &text), text);
      std::string artifact;
      if (o.report) artifact = o.report->at("results").at("potential").dump(2);
      return finish(g, "reconstruct", {{"a", a}, {"a_max", g.a_max}}, o, start, artifact);
    }
    if (edet->parsed()) {
      auto o = with_curve(curve, [&](orbiq_curve* c) {
        return with_potential_file(potential_file, [&](orbiq_potential* p) {
          char* text = nullptr;
          return take(orbiq_euler_det(c, p, &text), text);
        });
      });
      return finish(g, "euler-det", {{"curve", curve}, {"potential", potential_file}}, o, start);
    }
    if (wdvv->parsed()) {
      auto o = with_potential_file(potential_file, [](orbiq_potential* p) {
        char* text = nullptr;
        return take(orbiq_wdvv_check(p, &text), text);
      });
      return finish(g, "wdvv-check", {{"potential", potential_file}}, o, start);
    }
    if (hur->parsed()) {
      char* text = nullptr;
      Outcome o = take(orbiq_hurwitz(d, profiles.c_str(), &text), text);
      return finish(g, "hurwitz", {{"d", d}, {"profiles", profiles}}, o, start);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kExitFailure;
  }
  return kExitUsage;
}
