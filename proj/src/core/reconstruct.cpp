#include "reconstruct.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace orbiq {

namespace {

// All exponent vectors e over t^1..t^{a-1} with sum_i e_i (a - i) = target.
void enumerate_weighted(int a, int target, std::size_t i, Exponent& cur, std::vector<Exponent>& out) {
  if (i + 1 == static_cast<std::size_t>(a)) {
    if (target == 0) out.push_back(cur);
    return;
  }
  const int w = a - static_cast<int>(i) - 1;  // weight numerator of t^{i+1}
  for (int e = 0; e * w <= target; ++e) {
    cur[i] = e;
    enumerate_weighted(a, target - e * w, i + 1, cur, out);
  }
  cur[i] = 0;
}

std::vector<Exponent> weighted_monomials(int a, int target) {
  std::vector<Exponent> out;
  Exponent cur(static_cast<std::size_t>(a - 1), 0);
  enumerate_weighted(a, target, 0, cur, out);
  std::sort(out.begin(), out.end(), GrevlexBefore{});
  return out;
}

int total(const Exponent& e) {
  int s = 0;
  for (int x : e) s += x;
  return s;
}

Ratio symmetry_factor(const Exponent& e) {
  Ratio f(1);
  for (int x : e) f *= factorial(static_cast<unsigned>(x));
  return f;
}

TablePtr unknown_table(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < m; ++k) names.push_back("c" + std::to_string(k));
  return make_table(names, std::vector<Ratio>(m, Ratio(0)));
}

std::string join_known(const std::map<std::size_t, Ratio>& known) {
  std::ostringstream os;
  for (const auto& [k, v] : known) os << " c" << k << "=" << v.str();
  return os.str();
}

}  // namespace

Potential AnsatzSystem::symbolic_potential() const {
  Potential F = classical_potential(curve, 1, table);
  const std::size_t n = basis_size(curve);
  for (const auto& s : slots) {
    Exponent e(table->size(), 0);
    for (std::size_t i = 0; i < s.exp.size(); ++i) e[i + 2] = s.exp[i];
    MPoly term(table);
    if (s.fixed) {
      term = MPoly::monomial(table, e, s.value);
    } else {
      e[n + s.unknown] = 1;
      term = MPoly::monomial(table, e, Ratio(1));
    }
    (s.host == AnsatzSlot::Host::A ? F.A : F.B[0]) += term;
  }
  return F;
}

AnsatzSystem build_ansatz(int a, const Ratio& b1_leading) {
  if (a < 2) throw ReconstructionError(ReconstructionError::Kind::InvalidOrder, "tear drop order must be >= 2");
  AnsatzSystem sys;
  sys.a = a;
  sys.curve = OrbiCurve(0, {a});

  for (const auto& e : weighted_monomials(a, 2 * a)) {
    const int deg = total(e);
    if (deg < 3) continue;
    AnsatzSlot slot{AnsatzSlot::Host::A, e, false, Ratio(0), 0};
    if (deg == 3) {
      // Every cubic of weight 2 is t^i t^j t^k with i + j + k = a; invariant 1/a.
      slot.fixed = true;
      slot.value = Ratio(1, a) / symmetry_factor(e);
    }
    sys.slots.push_back(slot);
  }
  for (const auto& e : weighted_monomials(a, a - 1)) {
    AnsatzSlot slot{AnsatzSlot::Host::B1, e, false, Ratio(0), 0};
    if (e[0] == 1 && total(e) == 1) {
      slot.fixed = true;
      slot.value = b1_leading;
    }
    sys.slots.push_back(slot);
  }
  std::vector<std::string> extra;
  for (auto& s : sys.slots)
    if (!s.fixed) {
      s.unknown = sys.num_unknowns++;
      extra.push_back("c" + std::to_string(s.unknown));
    }
  sys.table = curve_table_with(sys.curve, extra);
  return sys;
}

std::vector<MPoly> ansatz_equations(const AnsatzSystem& sys) {
  const std::size_t n = basis_size(sys.curve);
  const std::size_t m = sys.num_unknowns;
  TablePtr utab = unknown_table(m);
  QuantumStructure qs(sys.symbolic_potential());

  std::map<std::string, MPoly> unique;
  auto harvest = [&](const MPoly& coeff) {
    std::map<Exponent, MPoly> by_t;
    for (const auto& [e, c] : coeff.terms()) {
      Exponent te(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(n));
      Exponent ue(e.begin() + static_cast<std::ptrdiff_t>(n), e.end());
      auto it = by_t.try_emplace(te, MPoly(utab)).first;
      it->second.add_term(ue, c);
    }
    for (auto& [te, eq] : by_t) {
      if (eq.is_zero()) continue;
      Ratio lead = eq.leading().second;
      eq *= Ratio(1) / lead;
      unique.emplace(eq.str(), eq);
    }
  };
  // The residual is antisymmetric under s2 <-> s3, so s2 < s3 covers every type.
  for (std::size_t s1 = 0; s1 < n; ++s1)
    for (std::size_t s2 = 0; s2 < n; ++s2)
      for (std::size_t s3 = s2 + 1; s3 < n; ++s3)
        for (std::size_t s4 = 0; s4 < n; ++s4) {
          QSeries r = qs.wdvv_residual(s1, s2, s3, s4);
          for (int d = 0; d <= r.order(); ++d)
            if (!r[d].is_zero()) harvest(r[d]);
        }
  std::vector<MPoly> out;
  out.reserve(unique.size());
  for (auto& [k, v] : unique) out.push_back(std::move(v));
  return out;
}

TearDropData solve_teardrop(int a, const SolveOptions& opts, SolveStats* stats) {
  using Kind = ReconstructionError::Kind;
  if (a < 2) throw ReconstructionError(Kind::InvalidOrder, "tear drop order must be >= 2");
  if (a > opts.a_max)
    throw ReconstructionError(Kind::Budget, "a = " + std::to_string(a) + " exceeds the reconstruction budget a_max = " +
                                                std::to_string(opts.a_max));
  AnsatzSystem sys = build_ansatz(a, opts.b1_leading);
  std::vector<MPoly> eqs = ansatz_equations(sys);
  if (opts.shuffle_seed != 0) {
    std::mt19937 rng(opts.shuffle_seed);
    std::shuffle(eqs.begin(), eqs.end(), rng);
  }
  const std::size_t m = sys.num_unknowns;
  SolveStats st{m, eqs.size(), 0};

  std::map<std::size_t, Ratio> known;
  while (true) {
    ++st.stages;
    std::vector<std::size_t> free_vars;
    for (std::size_t k = 0; k < m; ++k)
      if (!known.count(k)) free_vars.push_back(k);
    std::map<std::size_t, std::size_t> col_of;
    for (std::size_t c = 0; c < free_vars.size(); ++c) col_of[free_vars[c]] = c;

    std::vector<MPoly> linear;
    std::size_t nonlinear = 0;
    for (const auto& eq : eqs) {
      MPoly p = known.empty() ? eq : eq.substitute(known);
      if (p.is_zero()) continue;
      int deg = p.total_degree();
      if (deg == 0)
        throw ReconstructionError(Kind::Inconsistent, "WDVV system is inconsistent: equation " + eq.str() +
                                                          " evaluates to " + p.str() + " at" + join_known(known));
      if (deg == 1)
        linear.push_back(std::move(p));
      else
        ++nonlinear;
    }
    if (free_vars.empty()) break;
    if (linear.empty()) {
      if (nonlinear > 0)
        throw ReconstructionError(Kind::Nonlinear, "reconstruction stalled: " + std::to_string(nonlinear) +
                                                       " nonlinear equations remain in " +
                                                       std::to_string(free_vars.size()) + " unknowns");
      throw ReconstructionError(Kind::Underdetermined,
                                "WDVV system is underdetermined: kernel dimension " + std::to_string(free_vars.size()),
                                free_vars.size());
    }

    Matrix<Ratio> A(linear.size(), free_vars.size(), Ratio(0));
    std::vector<Ratio> b(linear.size(), Ratio(0));
    for (std::size_t r = 0; r < linear.size(); ++r)
      for (const auto& [e, c] : linear[r].terms()) {
        auto it = std::find(e.begin(), e.end(), 1);
        if (it == e.end()) {
          b[r] -= c;
        } else {
          A(r, col_of.at(static_cast<std::size_t>(it - e.begin()))) += c;
        }
      }
    LinearSolveResult sol = linear_solve_rational(A, b);
    if (!sol.consistent)
      throw ReconstructionError(Kind::Inconsistent, "WDVV system is inconsistent: linear stage " +
                                                        std::to_string(st.stages) + " has no solution");
    std::size_t fixed_now = 0;
    for (std::size_t c = 0; c < free_vars.size(); ++c)
      if (sol.determined[c]) {
        known[free_vars[c]] = sol.solution[c];
        ++fixed_now;
      }
    if (fixed_now == 0) {
      if (nonlinear > 0)
        throw ReconstructionError(Kind::Nonlinear, "reconstruction stalled: linear equations fix no unknown and " +
                                                       std::to_string(nonlinear) + " nonlinear equations remain");
      throw ReconstructionError(Kind::Underdetermined,
                                "WDVV system is underdetermined: kernel dimension " + std::to_string(sol.kernel_dim),
                                sol.kernel_dim);
    }
  }
  if (stats) *stats = st;

  OrbiCurve curve(0, {a});
  TablePtr table = curve_table(curve);
  TearDropData td{a, table, MPoly(table), MPoly(table)};
  for (const auto& s : sys.slots) {
    Exponent e(td.table->size(), 0);
    for (std::size_t i = 0; i < s.exp.size(); ++i) e[i + 2] = s.exp[i];
    Ratio v = s.fixed ? s.value : known.at(s.unknown);
    (s.host == AnsatzSlot::Host::A ? td.A : td.B1).add_term(e, v);
  }
  return td;
}

bool StructureReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const StructureCheck& c) { return c.pass; });
}

const StructureCheck* StructureReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

StructureReport verify_structure(const TearDropData& td) {
  const int a = td.a;
  if (a < 2) throw std::invalid_argument("verify_structure: tear drop order must be >= 2");
  if (!td.table || td.table->size() != static_cast<std::size_t>(a + 1))
    throw std::invalid_argument("verify_structure: tear-drop data must live on the P^1_a coordinate table");
  const TablePtr& T = td.table;
  auto D = [](const MPoly& p, int i) { return p.derivative(static_cast<std::size_t>(i + 1)); };
  auto A3 = [&](int i, int j, int k) { return D(D(D(td.A, i), j), k); };
  std::vector<bool> high(T->size(), false);
  for (int i = 2; i < a; ++i) high[static_cast<std::size_t>(i + 1)] = true;
  const MPoly t1 = MPoly::variable(T, 2);
  const Ratio a2(static_cast<long>(a) * a);

  StructureReport rep;
  rep.a = a;
  auto add = [&](const std::string& name, const std::vector<std::string>& failures) {
    std::ostringstream os;
    for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
    rep.checks.push_back({name, failures.empty(), failures.empty() ? "ok" : os.str()});
  };

  {
    Exponent e(T->size(), 0);
    e[2] = 1;
    Ratio c = td.B1.coefficient(e);
    std::vector<std::string> f;
    if (!c.is_one()) f.push_back("coefficient of t^1 in B1 is " + c.str());
    add("b1_leading_coefficient", f);
  }
  {
    std::vector<std::string> f;
    for (int i = 1; i < a; ++i) {
      MPoly v = D(D(td.B1, i), a - i);
      if (!v.is_zero()) f.push_back("(B1)_{" + std::to_string(i) + "," + std::to_string(a - i) + "} = " + v.str());
    }
    add("b1_mixed_second_vanish", f);
  }
  {
    std::vector<std::string> f;
    for (int k = 1; k < a; ++k) {
      MPoly s(T);
      for (int i = 1; i < a; ++i) s += A3(i, a - i, a - k);
      MPoly red = s.drop_vars(high);
      MPoly expected = k == 1 ? t1 * (Ratio(-(a - 1)) / a2) : MPoly(T);
      if (!(red == expected))
        f.push_back("k=" + std::to_string(k) + ": reduced sum " + red.str() + ", expected " + expected.str());
    }
    add("a_trace_leading", f);
  }
  {
    std::vector<std::string> f;
    for (int j = 1; j < a; ++j)
      for (int l = 1; l < a; ++l) {
        MPoly v = A3(1, j, a - l);
        std::string where = "(j,l)=(" + std::to_string(j) + "," + std::to_string(l) + ")";
        if (l == j + 1) {
          Ratio c = v.constant_term();
          if (!(c == Ratio(1, a))) f.push_back(where + ": constant term " + c.str());
        } else if (j == a - 1 && l == 1) {
          MPoly red = v.drop_vars(high);
          MPoly expected = t1 * (Ratio(-1) / a2);
          if (!(red == expected)) f.push_back(where + ": reduced value " + red.str());
        } else {
          MPoly red = v.drop_vars(high);
          if (!red.is_zero()) f.push_back(where + ": not in (t^2,...): " + red.str());
        }
      }
    add("a_mixed_third_values", f);
  }
  {
    std::vector<std::string> f;
    MPoly rhs = td.B1 * (Ratio(-1) / a2);
    for (int i = 1; i < a; ++i) {
      MPoly lhs(T);
      for (int k = 1; k < a; ++k) lhs += A3(i, a - i, a - k) * D(td.B1, k);
      MPoly diff = lhs - rhs;
      if (!diff.is_zero()) f.push_back("i=" + std::to_string(i) + ": residual " + diff.str());
    }
    add("a_b1_coupling", f);
  }
  return rep;
}

}  // namespace orbiq
