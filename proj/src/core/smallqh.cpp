#include "smallqh.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

namespace orbiq {

namespace {

using Cx = std::complex<double>;

struct GenBuilder {
  TablePtr table;
  Ratio Q;
  MPoly acc;

  GenBuilder(TablePtr t, Ratio q) : table(t), Q(std::move(q)), acc(t) {}
  GenBuilder& add(long c, unsigned qpow, Exponent e) {
    acc += MPoly::monomial(table, std::move(e), Ratio(c) * pow(Q, qpow));
    return *this;
  }
  MPoly take() {
    MPoly out = acc;
    acc = MPoly(table);
    return out;
  }
};

TablePtr var_table(const std::vector<std::string>& names, const std::vector<int>& orders) {
  std::vector<Ratio> w;
  for (int a : orders) w.push_back(Ratio(2, a));
  return make_table(names, w);
}

std::string monomial_label(const TablePtr& t, const Exponent& e) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (!e[i]) continue;
    if (!first) os << "*";
    os << t->name(i);
    if (e[i] > 1) os << "^" << e[i];
    first = false;
  }
  return first ? "1" : os.str();
}

}  // namespace

PresentedAlgebra presentation(const OrbiCurve& curve, const Ratio& Qval) {
  if (curve.genus != 0 || classify(curve) != CurveClass::Fano)
    throw NotFanoError("curve " + curve.literal() + " has chi_orb = " + euler_char(curve).str() +
                       " <= 0 or positive genus; no presentation, use the nilpotency certificate");
  std::vector<std::pair<int, int>> nontrivial;  // (order, point)
  for (std::size_t i = 0; i < curve.orders.size(); ++i)
    if (curve.orders[i] >= 2) nontrivial.push_back({curve.orders[i], static_cast<int>(i) + 1});

  PresentedAlgebra p;
  p.curve = curve;
  p.Qval = Qval;
  if (nontrivial.size() <= 2) {
    std::vector<std::pair<int, int>> pts;
    if (curve.orders.size() == 2) {
      pts = {{curve.orders[0], 1}, {curve.orders[1], 2}};
    } else {
      pts = nontrivial;
      while (pts.size() < 2) pts.push_back({1, 0});
    }
    for (const auto& [a, pt] : pts) {
      p.orders.push_back(a);
      p.point_of_var.push_back(pt);
    }
    p.family = "P1_{a1,a2}";
    p.table = var_table({"x1", "x2"}, p.orders);
    const long a1 = p.orders[0], a2 = p.orders[1];
    GenBuilder g(p.table, Qval);
    p.gens.push_back(g.add(1, 0, {1, 1}).add(-1, 1, {0, 0}).take());
    p.gens.push_back(g.add(a1, 0, {static_cast<int>(a1), 0}).add(-a2, 0, {0, static_cast<int>(a2)}).take());
    return p;
  }
  if (nontrivial.size() != 3) throw InternalInconsistency("Fano curve with more than three orbifold points");
  std::stable_sort(nontrivial.begin(), nontrivial.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  for (const auto& [a, pt] : nontrivial) {
    p.orders.push_back(a);
    p.point_of_var.push_back(pt);
  }
  p.table = var_table({"x", "y", "z"}, p.orders);
  GenBuilder g(p.table, Qval);
  const int b1 = p.orders[0], b2 = p.orders[1], b3 = p.orders[2];
  if (b1 == 2 && b2 == 2) {
    const int a = b3;
    p.family = "P1_{2,2,a}";
    g.add(1, 0, {1, 1, 0});
    for (int k = 0; k <= (a - 1) / 2; ++k) {
      // a * (-1)^{k-1} * C(a-1-k, k) * Q^{2k+1} z^{a-1-2k}
      Ratio c = Ratio(a) * binomial(a - 1 - k, k) * Ratio((k % 2 == 0) ? -1 : 1);
      g.acc += MPoly::monomial(p.table, {0, 0, a - 1 - 2 * k}, c * pow(Qval, static_cast<unsigned>(2 * k + 1)));
    }
    p.gens.push_back(g.take());
    p.gens.push_back(g.add(1, 0, {1, 0, 1}).add(-2, 1, {0, 1, 0}).take());
    p.gens.push_back(g.add(1, 0, {0, 1, 1}).add(-2, 1, {1, 0, 0}).take());
    return p;
  }
  if (b1 == 2 && b2 == 3 && b3 == 3) {
    p.family = "P1_{2,3,3}";
    p.gens.push_back(g.add(1, 0, {1, 1, 0}).add(-3, 1, {0, 0, 2}).add(6, 3, {0, 1, 0}).take());
    p.gens.push_back(g.add(1, 0, {1, 0, 1}).add(-3, 1, {0, 2, 0}).add(6, 3, {0, 0, 1}).take());
    p.gens.push_back(g.add(1, 0, {0, 1, 1}).add(-2, 1, {1, 0, 0}).add(-4, 4, {0, 0, 0}).take());
    return p;
  }
  if (b1 == 2 && b2 == 3 && b3 == 4) {
    p.family = "P1_{2,3,4}";
    p.gens.push_back(g.add(1, 0, {1, 1, 0}).add(-4, 1, {0, 0, 3}).add(28, 4, {1, 0, 0}).add(72, 7, {0, 0, 1}).take());
    p.gens.push_back(g.add(1, 0, {1, 0, 1})
                         .add(-3, 1, {0, 2, 0})
                         .add(8, 3, {0, 0, 2})
                         .add(-18, 5, {0, 1, 0})
                         .add(-24, 9, {0, 0, 0})
                         .take());
    p.gens.push_back(g.add(1, 0, {0, 1, 1}).add(-2, 1, {1, 0, 0}).add(-4, 4, {0, 0, 1}).take());
    return p;
  }
  if (b1 == 2 && b2 == 3 && b3 == 5) {
    p.family = "P1_{2,3,5}";
    p.gens.push_back(g.add(1, 0, {1, 1, 0})
                         .add(-5, 1, {0, 0, 4})
                         .add(129, 5, {0, 2, 0})
                         .add(-350, 7, {0, 0, 3})
                         .add(2920, 10, {1, 0, 0})
                         .add(8140, 13, {0, 0, 2})
                         .add(-14130, 15, {0, 1, 0})
                         .add(-20400, 19, {0, 0, 1})
                         .add(-76080, 25, {0, 0, 0})
                         .take());
    p.gens.push_back(g.add(1, 0, {1, 0, 1})
                         .add(-3, 1, {0, 2, 0})
                         .add(10, 3, {0, 0, 3})
                         .add(-72, 6, {1, 0, 0})
                         .add(-205, 9, {0, 0, 2})
                         .add(360, 11, {0, 1, 0})
                         .add(510, 15, {0, 0, 1})
                         .add(1920, 21, {0, 0, 0})
                         .take());
    p.gens.push_back(g.add(1, 0, {0, 1, 1})
                         .add(-2, 1, {1, 0, 0})
                         .add(-5, 4, {0, 0, 2})
                         .add(12, 6, {0, 1, 0})
                         .add(20, 10, {0, 0, 1})
                         .add(60, 16, {0, 0, 0})
                         .take());
    return p;
  }
  throw InternalInconsistency("Fano curve " + curve.literal() + " outside the genus-zero classification");
}

PresentedAlgebra custom_presentation(TablePtr table, std::vector<MPoly> gens) {
  PresentedAlgebra p;
  p.family = "custom";
  p.Qval = Ratio(1);
  p.table = table;
  for (const auto& g : gens)
    if (!(*g.table() == *table)) throw std::invalid_argument("custom_presentation: generator on a different table");
  p.gens = std::move(gens);
  return p;
}

std::vector<Ratio> quotient_coordinates(const QuotientAlgebra& q, const MPoly& f) {
  MPoly r = normal_form(f, q.basis, q.order);
  std::vector<Ratio> out(q.dim(), Ratio(0));
  for (const auto& [e, c] : r.terms()) {
    auto it = std::lower_bound(q.standard.begin(), q.standard.end(), e,
                               [&](const Exponent& a, const Exponent& b) { return monomial_greater(b, a, q.order); });
    if (it == q.standard.end() || *it != e) throw std::logic_error("normal form left a non-standard monomial");
    out[static_cast<std::size_t>(it - q.standard.begin())] = c;
  }
  return out;
}

QuotientAlgebra quotient_algebra(const PresentedAlgebra& p, MonomialOrder order) {
  QuotientAlgebra q;
  q.order = order;
  q.basis = groebner(p.gens, order);
  auto sm = standard_monomials(q.basis, order);
  if (!sm.finite) throw PositiveDimensionalError("ideal is not zero-dimensional: quotient is infinite-dimensional");
  q.standard = sm.monomials;
  const std::size_t n = q.dim();
  if (n == 0) throw PositiveDimensionalError("ideal is the unit ideal: empty quotient");
  const std::size_t r = p.table->size();

  std::vector<MPoly> b;
  for (const auto& e : q.standard) b.push_back(MPoly::monomial(p.table, e, Ratio(1)));
  for (std::size_t v = 0; v < r; ++v) {
    Matrix<Ratio> m(n, n, Ratio(0));
    MPoly xv = MPoly::variable(p.table, v);
    for (std::size_t j = 0; j < n; ++j) {
      auto col = quotient_coordinates(q, xv * b[j]);
      for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    q.mult.push_back(std::move(m));
  }

  AlgebraData<Ratio> alg{n, {}, std::vector<Ratio>(n * n * n, Ratio(0)), Matrix<Ratio>(n, n, Ratio(0)), 0};
  for (const auto& e : q.standard) alg.labels.push_back(monomial_label(p.table, e));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) {
      auto c = quotient_coordinates(q, b[u] * b[v]);
      for (std::size_t w = 0; w < n; ++w) alg.c(u, v, w) = alg.c(v, u, w) = c[w];
    }
  // A complete intersection quotient is Gorenstein: a generic functional
  // lambda makes (u, v) -> lambda(u v) nondegenerate.
  for (unsigned seed = 1; seed <= 64; ++seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-9, 9);
    std::vector<Ratio> lambda;
    for (std::size_t w = 0; w < n; ++w) lambda.emplace_back(dist(rng));
    Matrix<Ratio> g(n, n, Ratio(0));
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          if (!alg.c(u, v, w).is_zero()) g(u, v) += alg.c(u, v, w) * lambda[w];
    if (!det_exact(g).is_zero()) {
      alg.metric = g;
      q.metric_seed = seed;
      q.algebra = std::move(alg);
      return q;
    }
  }
  throw InternalInconsistency("no nondegenerate Frobenius form found for the quotient (not Gorenstein?)");
}

std::vector<Ratio> characteristic_polynomial(const Matrix<Ratio>& a) {
  if (!a.square()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Ratio> c(n + 1, Ratio(0));
  c[n] = 1;
  Matrix<Ratio> m(n, n, Ratio(0));
  for (std::size_t k = 1; k <= n; ++k) {
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k) / k.
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Matrix<Ratio> am = a * m;
    Ratio tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Ratio(static_cast<long>(k));
  }
  return c;
}

namespace {

void trim(std::vector<Ratio>& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

std::vector<Ratio> poly_rem(std::vector<Ratio> a, const std::vector<Ratio>& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Ratio f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

bool squarefree(const std::vector<Ratio>& p0) {
  std::vector<Ratio> p = p0;
  trim(p);
  if (p.size() <= 2) return true;
  std::vector<Ratio> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Ratio(static_cast<long>(i)));
  std::vector<Ratio> a = p, b = d;
  trim(b);
  while (!b.empty()) {
    auto r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

Cx evaluate(const MPoly& f, const Point& x) {
  if (x.size() != f.num_vars()) throw std::invalid_argument("evaluate: point dimension mismatch");
  Cx s = 0;
  for (const auto& [e, c] : f.terms()) {
    Cx t = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

int SolutionSet::total_multiplicity() const {
  int s = 0;
  for (int m : multiplicities) s += m;
  return s;
}

namespace {

double dist(const Point& a, const Point& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::norm(a[i] - b[i]);
  return std::sqrt(s);
}

double norm(const Point& a) {
  double s = 0;
  for (const auto& v : a) s += std::norm(v);
  return std::sqrt(s);
}

using CxL = std::complex<long double>;

CxL evaluate_long(const MPoly& f, const std::vector<CxL>& x) {
  CxL s = 0;
  for (const auto& [e, c] : f.terms()) {
    CxL t = static_cast<long double>(c.to_double());
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= x[i];
    s += t;
  }
  return s;
}

// Newton (Gauss-Newton for non-square systems) in extended precision.
void newton_refine(Point& x0, const std::vector<MPoly>& gens, const std::vector<std::vector<MPoly>>& jac) {
  using VecL = Eigen::Matrix<CxL, Eigen::Dynamic, 1>;
  using MatL = Eigen::Matrix<CxL, Eigen::Dynamic, Eigen::Dynamic>;
  const std::size_t r = x0.size();
  std::vector<CxL> x(x0.begin(), x0.end());
  for (int it = 0; it < 40; ++it) {
    VecL F(static_cast<Eigen::Index>(gens.size()));
    MatL J(static_cast<Eigen::Index>(gens.size()), static_cast<Eigen::Index>(r));
    for (std::size_t g = 0; g < gens.size(); ++g) {
      F(static_cast<Eigen::Index>(g)) = evaluate_long(gens[g], x);
      for (std::size_t v = 0; v < r; ++v)
        J(static_cast<Eigen::Index>(g), static_cast<Eigen::Index>(v)) = evaluate_long(jac[g][v], x);
    }
    VecL step = J.colPivHouseholderQr().solve(-F);
    if (!step.allFinite()) break;
    long double sn = step.norm(), xn = 0;
    for (std::size_t v = 0; v < r; ++v) {
      x[v] += step(static_cast<Eigen::Index>(v));
      xn += std::norm(x[v]);
    }
    if (sn <= 1e-17L * (1.0L + std::sqrt(xn))) break;
  }
  for (std::size_t v = 0; v < r; ++v) x0[v] = Cx(static_cast<double>(x[v].real()), static_cast<double>(x[v].imag()));
}

double clean(double v, double scale) { return std::abs(v) <= 1e-13 * scale ? 0.0 : v; }

}  // namespace

SolutionSet solve_points(const PresentedAlgebra& p) { return solve_points(p, quotient_algebra(p)); }

SolutionSet solve_points(const PresentedAlgebra& p, const QuotientAlgebra& q) {
  const std::size_t n = q.dim();
  const std::size_t r = q.mult.size();
  SolutionSet out;

  Matrix<Ratio> M(n, n, Ratio(0));
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::mt19937 rng(7919u + static_cast<unsigned>(attempt));
    std::uniform_int_distribution<int> dist(1, 9);
    out.combination.clear();
    M = Matrix<Ratio>(n, n, Ratio(0));
    for (std::size_t v = 0; v < r; ++v) {
      long c = dist(rng) * ((rng() & 1u) ? 1 : -1);
      out.combination.push_back(c);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) M(i, j) += q.mult[v](i, j) * Ratio(c);
    }
    out.attempts = attempt + 1;
    if (squarefree(characteristic_polynomial(M))) {
      out.separating = true;
      break;
    }
  }

  // Eigenvectors of the transposed multiplication matrices are evaluation
  // vectors (b_j(p))_j; coordinates follow from Rayleigh quotients.
  using Eigen::Index;
  Eigen::MatrixXd Mt(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) Mt(static_cast<Index>(j), static_cast<Index>(i)) = M(i, j).to_double();
  std::vector<Eigen::MatrixXcd> Xt;
  for (const auto& mv : q.mult) {
    Eigen::MatrixXcd x(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x(static_cast<Index>(j), static_cast<Index>(i)) = mv(i, j).to_double();
    Xt.push_back(std::move(x));
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(Mt, true);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigenvalue computation did not converge");

  std::vector<std::vector<MPoly>> jac;
  for (const auto& g : p.gens) {
    std::vector<MPoly> row;
    for (std::size_t v = 0; v < r; ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }

  std::vector<Point> raw;
  for (Index k = 0; k < static_cast<Index>(n); ++k) {
    Eigen::VectorXcd vec = es.eigenvectors().col(k);
    Point x(r);
    Cx vv = vec.dot(vec);
    for (std::size_t v = 0; v < r; ++v) x[v] = vec.dot(Xt[v] * vec) / vv;
    if (out.separating) newton_refine(x, p.gens, jac);
    raw.push_back(std::move(x));
  }

  double scale = 1.0;
  for (const auto& x : raw) scale = std::max(scale, norm(x));
  const double tol = 1e-6 * scale;
  std::vector<bool> used(raw.size(), false);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (used[i]) continue;
    int mult = 1;
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (!used[j] && dist(raw[i], raw[j]) <= tol) {
        used[j] = true;
        ++mult;
      }
    Point x = raw[i];
    for (auto& c : x) c = Cx(clean(c.real(), scale), clean(c.imag(), scale));
    out.points.push_back(std::move(x));
    out.multiplicities.push_back(mult);
  }

  // Deterministic order: lexicographic in (re, im) of each coordinate, rounded.
  std::vector<std::size_t> idx(out.points.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  auto key = [&](std::size_t i) {
    std::vector<long long> k;
    for (const auto& c : out.points[i]) {
      k.push_back(std::llround(c.real() * 1e6));
      k.push_back(std::llround(c.imag() * 1e6));
    }
    return k;
  };
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  SolutionSet sorted = out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    sorted.points[i] = out.points[idx[i]];
    sorted.multiplicities[i] = out.multiplicities[idx[i]];
  }
  out = std::move(sorted);

  out.residual_bound = 0;
  for (const auto& x : out.points)
    for (const auto& g : p.gens) out.residual_bound = std::max(out.residual_bound, std::abs(evaluate(g, x)));
  out.min_separation = 0;
  for (std::size_t i = 0; i < out.points.size(); ++i)
    for (std::size_t j = i + 1; j < out.points.size(); ++j) {
      double d = dist(out.points[i], out.points[j]);
      out.min_separation = (i == 0 && j == 1) ? d : std::min(out.min_separation, d);
    }
  return out;
}

bool NilpotencyCertificate::verified() const {
  return chen_ruan_power_vanishes &&
         std::all_of(filtration_table.begin(), filtration_table.end(), [](const CertificateRow& r) { return r.holds; });
}

NilpotencyCertificate nilpotency_certificate(const OrbiCurve& curve) {
  const Ratio chi = euler_char(curve);
  if (chi.sign() > 0) throw std::invalid_argument("nilpotency_certificate: curve " + curve.literal() + " is Fano");
  BasisSet basis(curve);
  const std::size_t n = basis.size();
  NilpotencyCertificate cert;
  cert.curve = curve;

  std::size_t w = 1;
  for (std::size_t k = 1; k < n; ++k)
    if (basis.orbifold_degree(k) < basis.orbifold_degree(w)) w = k;
  cert.witness = basis[w];
  cert.witness_degree = basis.orbifold_degree(w);
  cert.exponent_bound = static_cast<int>((Ratio(2) / cert.witness_degree).ceil().get_si()) + 1;

  CohClass<Ratio> x = basis_class(curve, cert.witness);
  CohClass<Ratio> pw = x;
  for (int k = 1; k < cert.exponent_bound; ++k) pw = chen_ruan_mul(pw, x);
  cert.chen_ruan_power_vanishes =
      std::all_of(pw.coeffs.begin(), pw.coeffs.end(), [](const Ratio& c) { return c.is_zero(); });

  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Ratio lhs = basis.orbifold_degree(i) + basis.orbifold_degree(j);
      for (std::size_t s = 0; s < n; ++s) {
        Ratio total = lhs + basis.orbifold_degree(s);
        auto row = [&](int d, bool all_d) {
          Ratio dual = Ratio(2) - basis.orbifold_degree(s);
          cert.filtration_table.push_back({basis[i], basis[j], basis[s], d, all_d, lhs, dual, dual >= lhs});
        };
        if (chi.is_zero()) {
          if (total == Ratio(2)) row(1, true);
          continue;
        }
        for (int d = 1;; ++d) {
          Ratio rhs = Ratio(2) + Ratio(2 * d) * chi;
          if (rhs < total) break;
          if (rhs == total) row(d, false);
        }
      }
    }
  return cert;
}

SmallVerdict semisimplicity_verdict(const OrbiCurve& curve, const Ratio& Qval) {
  SmallVerdict v;
  v.curve = curve;
  v.cls = classify(curve);
  v.N = basis_size(curve);
  if (v.cls == CurveClass::Fano) {
    PresentedAlgebra p = presentation(curve, Qval);
    v.family = p.family;
    QuotientAlgebra q = quotient_algebra(p);
    v.quotient_dim = q.dim();
    if (q.dim() != v.N)
      throw InternalInconsistency("quotient dimension " + std::to_string(q.dim()) + " differs from N = " +
                                  std::to_string(v.N) + " for " + curve.literal());
    TraceFormResult tf = trace_form_semisimple(q.algebra);
    v.trace_det = tf.det;
    if (!tf.semisimple) throw InternalInconsistency("trace form degenerate for the Fano curve " + curve.literal());
    SolutionSet sol = solve_points(p, q);
    if (sol.points.size() != v.N || sol.total_multiplicity() != static_cast<int>(v.N))
      throw InternalInconsistency(std::to_string(sol.points.size()) + " distinct points found for " + curve.literal() +
                                  ", expected N = " + std::to_string(v.N));
    v.solutions = std::move(sol);
    v.semisimple = true;
    return v;
  }
  NilpotencyCertificate cert = nilpotency_certificate(curve);
  if (!cert.verified()) throw InternalInconsistency("nilpotency certificate failed for " + curve.literal());
  v.certificate = std::move(cert);
  v.semisimple = false;
  return v;
}

nlohmann::json to_json(const SolutionSet& s) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    nlohmann::json coords = nlohmann::json::array();
    for (const auto& c : s.points[i]) coords.push_back({c.real(), c.imag()});
    pts.push_back({{"coordinates", coords}, {"multiplicity", s.multiplicities[i]}});
  }
  return {{"points", pts},
          {"distinct", s.points.size()},
          {"total_multiplicity", s.total_multiplicity()},
          {"residual_bound", s.residual_bound},
          {"min_separation", s.min_separation},
          {"separating_form", s.combination},
          {"separating", s.separating},
          {"attempts", s.attempts}};
}

nlohmann::json to_json(const NilpotencyCertificate& c) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : c.filtration_table)
    rows.push_back({{"x", r.x.label()},
                    {"y", r.y.label()},
                    {"s", r.s.label()},
                    {"d", r.all_d ? nlohmann::json("all") : nlohmann::json(r.d)},
                    {"deg_x_plus_deg_y", r.lhs.str()},
                    {"deg_dual_s", r.dual_degree.str()},
                    {"holds", r.holds}});
  return {{"curve", c.curve.literal()},
          {"witness", c.witness.label()},
          {"witness_degree", c.witness_degree.str()},
          {"exponent_bound", c.exponent_bound},
          {"chen_ruan_power_vanishes", c.chen_ruan_power_vanishes},
          {"filtration_rows", c.filtration_table.size()},
          {"filtration_table", rows},
          {"verified", c.verified()}};
}

nlohmann::json to_json(const PresentedAlgebra& p) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : p.gens) gens.push_back(g.str());
  return {{"curve", p.curve.literal()},   {"family", p.family},     {"variables", p.table->names()},
          {"orders", p.orders},           {"points", p.point_of_var}, {"Q", p.Qval.str()},
          {"generators", gens}};
}

}  // namespace orbiq
