#include "groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace orbiq {

bool monomial_greater(const Exponent& a, const Exponent& b, MonomialOrder order) {
  if (order == MonomialOrder::Lex) return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

struct Greater {
  MonomialOrder order;
  bool operator()(const Exponent& a, const Exponent& b) const { return monomial_greater(a, b, order); }
};

using Work = std::map<Exponent, Ratio, Greater>;

// Terms sorted by decreasing monomial; the leading term first.
struct SPoly {
  std::vector<std::pair<Exponent, Ratio>> terms;
  const Exponent& lm() const { return terms.front().first; }
};

SPoly to_sorted(const MPoly& p, MonomialOrder order) {
  SPoly s;
  s.terms.assign(p.terms().begin(), p.terms().end());
  std::sort(s.terms.begin(), s.terms.end(),
            [&](const auto& x, const auto& y) { return monomial_greater(x.first, y.first, order); });
  return s;
}

SPoly from_work(const Work& w) {
  SPoly s;
  s.terms.assign(w.begin(), w.end());
  return s;
}

void make_monic(SPoly& p) {
  Ratio inv = Ratio(1) / p.terms.front().second;
  for (auto& t : p.terms) t.second *= inv;
}

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponent lcm(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool coprime(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

// p -= c * x^shift * g
void subtract_multiple(Work& p, const SPoly& g, const Ratio& c, const Exponent& shift) {
  for (const auto& [e, gc] : g.terms) {
    Exponent m(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = e[i] + shift[i];
    auto it = p.find(m);
    if (it == p.end()) {
      p.emplace(std::move(m), -(c * gc));
    } else {
      it->second -= c * gc;
      if (it->second.is_zero()) p.erase(it);
    }
  }
}

SPoly reduce(Work p, const std::vector<const SPoly*>& G, MonomialOrder order) {
  Work rem{Greater{order}};
  while (!p.empty()) {
    auto lt = p.begin();
    const SPoly* div = nullptr;
    for (const SPoly* g : G)
      if (divides(g->lm(), lt->first)) {
        div = g;
        break;
      }
    if (!div) {
      rem.insert(*lt);
      p.erase(lt);
      continue;
    }
    Exponent shift(lt->first.size());
    for (std::size_t i = 0; i < shift.size(); ++i) shift[i] = lt->first[i] - div->lm()[i];
    Ratio c = lt->second / div->terms.front().second;
    subtract_multiple(p, *div, c, shift);
  }
  return from_work(rem);
}

Work to_work(const SPoly& s, MonomialOrder order) {
  Work w{Greater{order}};
  for (const auto& t : s.terms) w.insert(t);
  return w;
}

MPoly to_mpoly(const SPoly& s, const TablePtr& table) {
  MPoly p(table);
  for (const auto& [e, c] : s.terms) p.add_term(e, c);
  return p;
}

}  // namespace

Exponent leading_monomial(const MPoly& p, MonomialOrder order) {
  if (p.is_zero()) throw std::invalid_argument("leading monomial of the zero polynomial");
  const Exponent* best = nullptr;
  for (const auto& [e, c] : p.terms())
    if (!best || monomial_greater(e, *best, order)) best = &e;
  return *best;
}

Ratio leading_coefficient(const MPoly& p, MonomialOrder order) { return p.coefficient(leading_monomial(p, order)); }

MPoly normal_form(const MPoly& f, const std::vector<MPoly>& G, MonomialOrder order) {
  std::vector<SPoly> gs;
  for (const auto& g : G)
    if (!g.is_zero()) gs.push_back(to_sorted(g, order));
  std::vector<const SPoly*> ptrs;
  for (const auto& g : gs) ptrs.push_back(&g);
  return to_mpoly(reduce(to_work(to_sorted(f, order), order), ptrs, order), f.table());
}

std::vector<MPoly> groebner(const std::vector<MPoly>& gens, MonomialOrder order) {
  if (gens.empty()) return {};
  const TablePtr table = gens.front().table();
  std::vector<SPoly> G;
  for (const auto& g : gens) {
    if (!(*g.table() == *table)) throw std::invalid_argument("groebner: generators live on different tables");
    if (g.is_zero()) continue;
    SPoly s = to_sorted(g, order);
    make_monic(s);
    G.push_back(std::move(s));
  }
  if (G.empty()) return {};

  std::set<std::pair<std::size_t, std::size_t>> pending;
  for (std::size_t j = 1; j < G.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});

  auto pair_lcm = [&](const std::pair<std::size_t, std::size_t>& p) { return lcm(G[p.first].lm(), G[p.second].lm()); };

  while (!pending.empty()) {
    // Normal selection strategy: smallest lcm first, ties by index.
    auto best = pending.begin();
    Exponent best_l = pair_lcm(*best);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Exponent l = pair_lcm(*it);
      if (monomial_greater(best_l, l, order)) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pending.erase(best);
    if (coprime(G[i].lm(), G[j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < G.size() && !chain; ++k) {
      if (k == i || k == j || !divides(G[k].lm(), best_l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(i, k)) && !pending.count(key(j, k))) chain = true;
    }
    if (chain) continue;

    Work s{Greater{order}};
    Exponent si(best_l.size()), sj(best_l.size());
    for (std::size_t v = 0; v < best_l.size(); ++v) {
      si[v] = best_l[v] - G[i].lm()[v];
      sj[v] = best_l[v] - G[j].lm()[v];
    }
    subtract_multiple(s, G[i], Ratio(-1), si);
    subtract_multiple(s, G[j], Ratio(1), sj);
    std::vector<const SPoly*> ptrs;
    for (const auto& g : G) ptrs.push_back(&g);
    SPoly h = reduce(std::move(s), ptrs, order);
    if (h.terms.empty()) continue;
    make_monic(h);
    G.push_back(std::move(h));
    const std::size_t m = G.size() - 1;
    for (std::size_t k = 0; k < m; ++k) pending.insert({k, m});
  }

  // Minimal basis, then inter-reduction.
  std::vector<SPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t k = 0; k < G.size() && !redundant; ++k) {
      if (k == i || !divides(G[k].lm(), G[i].lm())) continue;
      // Equal leading monomials: keep the earliest.
      redundant = G[k].lm() != G[i].lm() || k < i;
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  std::vector<SPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<const SPoly*> others;
    for (std::size_t k = 0; k < minimal.size(); ++k)
      if (k != i) others.push_back(&minimal[k]);
    SPoly head;
    head.terms.push_back(minimal[i].terms.front());
    Work tail{Greater{order}};
    for (std::size_t t = 1; t < minimal[i].terms.size(); ++t) tail.insert(minimal[i].terms[t]);
    SPoly rest = reduce(std::move(tail), others, order);
    head.terms.insert(head.terms.end(), rest.terms.begin(), rest.terms.end());
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const SPoly& a, const SPoly& b) { return monomial_greater(a.lm(), b.lm(), order); });
  std::vector<MPoly> out;
  for (const auto& g : reduced) out.push_back(to_mpoly(g, table));
  return out;
}

StandardMonomials standard_monomials(const std::vector<MPoly>& G, MonomialOrder order) {
  StandardMonomials out;
  if (G.empty()) return out;
  const std::size_t n = G.front().num_vars();
  std::vector<Exponent> lms;
  for (const auto& g : G) lms.push_back(leading_monomial(g, order));
  for (const auto& l : lms)
    if (std::all_of(l.begin(), l.end(), [](int x) { return x == 0; })) {
      out.finite = true;  // the unit ideal: empty quotient
      return out;
    }
  std::vector<int> bound(n, -1);
  for (const auto& l : lms) {
    int nz = -1, count = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (l[v]) {
        nz = static_cast<int>(v);
        ++count;
      }
    if (count == 1) {
      int& b = bound[static_cast<std::size_t>(nz)];
      b = b < 0 ? l[static_cast<std::size_t>(nz)] : std::min(b, l[static_cast<std::size_t>(nz)]);
    }
  }
  if (std::any_of(bound.begin(), bound.end(), [](int b) { return b < 0; })) return out;
  out.finite = true;
  Exponent e(n, 0);
  while (true) {
    bool standard = std::none_of(lms.begin(), lms.end(), [&](const Exponent& l) { return divides(l, e); });
    if (standard) out.monomials.push_back(e);
    std::size_t v = 0;
    while (v < n && ++e[v] >= bound[v]) e[v++] = 0;
    if (v == n) break;
  }
  std::sort(out.monomials.begin(), out.monomials.end(),
            [&](const Exponent& a, const Exponent& b) { return monomial_greater(b, a, order); });
  return out;
}

}  // namespace orbiq
