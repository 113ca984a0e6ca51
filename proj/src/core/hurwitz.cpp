#include "hurwitz.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace orbiq {

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? "," : "") << parts[i];
  return os.str();
}

Partition make_partition(std::vector<int> parts) {
  for (int p : parts)
    if (p <= 0) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition{std::move(parts)};
}

std::vector<Partition> partitions_of(int d) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int max_part) {
    if (rest == 0) {
      out.push_back(Partition{cur});
      return;
    }
    for (int p = std::min(rest, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(d, d);
  return out;
}

HurwitzQuery parse_hurwitz_query(int d, const std::string& text) {
  if (d < 1) throw std::invalid_argument("covering degree must be >= 1");
  HurwitzQuery q{d, {}};
  if (text.empty()) return q;
  std::stringstream ps(text);
  std::string prof;
  while (std::getline(ps, prof, '|')) {
    std::vector<int> parts;
    std::stringstream ss(prof);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed partition part '" + tok + "'");
      }
      if (used != tok.size()) throw std::invalid_argument("malformed partition part '" + tok + "'");
      parts.push_back(v);
    }
    Partition p = make_partition(parts);
    if (p.size() != d)
      throw std::invalid_argument("profile " + p.str() + " is not a partition of d = " + std::to_string(d));
    q.profiles.push_back(std::move(p));
  }
  return q;
}

bool rh_feasible(const HurwitzQuery& q) {
  int s = 0;
  for (const auto& p : q.profiles) s += q.d - p.length();
  return s == 2 * q.d - 2;
}

namespace {

void validate(const HurwitzQuery& q) {
  if (q.d < 1) throw std::invalid_argument("covering degree must be >= 1");
  for (const auto& p : q.profiles)
    if (p.size() != q.d) throw std::invalid_argument("profile " + p.str() + " is not a partition of d");
}

using Perm = std::vector<int>;

Partition cycle_type(const Perm& p) {
  std::vector<bool> seen(p.size(), false);
  std::vector<int> parts;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    parts.push_back(len);
  }
  return make_partition(parts);
}

std::vector<Perm> conjugacy_class(int d, const Partition& mu) {
  std::vector<Perm> out;
  Perm p(static_cast<std::size_t>(d));
  std::iota(p.begin(), p.end(), 0);
  // Enumerate all of S_d and keep the class; d <= kEnumerationMaxDegree.
  do {
    if (cycle_type(p) == mu) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

Perm compose(const Perm& a, const Perm& b) {  // (a b)(i) = a(b(i))
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[static_cast<std::size_t>(b[i])];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return r;
}

int find(std::vector<int>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

bool transitive(int d, const std::vector<const Perm*>& perms) {
  std::vector<int> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), 0);
  int comps = d;
  for (const Perm* p : perms)
    for (int i = 0; i < d; ++i) {
      int a = find(parent, i), b = find(parent, (*p)[static_cast<std::size_t>(i)]);
      if (a != b) {
        parent[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
  return comps == 1;
}

Ratio z_factor(const Partition& mu) {
  std::map<int, int> m;
  for (int p : mu.parts) ++m[p];
  Ratio z(1);
  for (const auto& [part, count] : m) z *= factorial(count) * pow(Ratio(part), static_cast<unsigned>(count));
  return z;
}

Ratio class_size(int d, const Partition& mu) { return factorial(d) / z_factor(mu); }

// Murnaghan-Nakayama on beta-sets: removing an h-rim hook moves a bead from b to b - h.
long mn_rec(std::vector<int>& beads, const std::vector<int>& parts, std::size_t idx, std::map<std::pair<std::vector<int>, std::size_t>, long>& memo) {
  if (idx == parts.size()) return 1;
  auto key = std::make_pair(beads, idx);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int h = parts[idx];
  long total = 0;
  for (std::size_t k = 0; k < beads.size(); ++k) {
    const int b = beads[k];
    const int t = b - h;
    if (t < 0 || std::binary_search(beads.begin(), beads.end(), t)) continue;
    int between = 0;
    for (int x : beads)
      if (x > t && x < b) ++between;
    std::vector<int> next = beads;
    next[k] = t;
    std::sort(next.begin(), next.end());
    long v = mn_rec(next, parts, idx + 1, memo);
    total += (between % 2 == 0) ? v : -v;
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

long character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("character_value: partitions of different sizes");
  const int n = lambda.length();
  std::vector<int> beads;
  for (int i = 0; i < n; ++i) beads.push_back(lambda.parts[static_cast<std::size_t>(i)] + (n - 1 - i));
  std::sort(beads.begin(), beads.end());
  std::map<std::pair<std::vector<int>, std::size_t>, long> memo;
  return mn_rec(beads, mu.parts, 0, memo);
}

Ratio connected_count_enumeration(const HurwitzQuery& q) {
  validate(q);
  const int d = q.d;
  if (d > kEnumerationMaxDegree)
    throw HurwitzBudgetError("enumeration budget exceeded: d = " + std::to_string(d) + " > " +
                             std::to_string(kEnumerationMaxDegree));
  const std::size_t r = q.profiles.size();
  Perm id(static_cast<std::size_t>(d));
  std::iota(id.begin(), id.end(), 0);
  if (r == 0) return d == 1 ? Ratio(1) : Ratio(0);
  std::vector<std::vector<Perm>> classes;
  double work = 1;
  for (std::size_t i = 0; i + 1 < r; ++i) {
    classes.push_back(conjugacy_class(d, q.profiles[i]));
    work *= static_cast<double>(classes.back().size());
  }
  if (work > 5e7) throw HurwitzBudgetError("enumeration budget exceeded: about " + std::to_string(work) + " tuples");

  long count = 0;
  std::vector<const Perm*> chosen(r, nullptr);
  std::function<void(std::size_t, const Perm&)> rec = [&](std::size_t i, const Perm& prod) {
    if (i + 1 == r) {
      Perm last = inverse(prod);
      if (!(cycle_type(last) == q.profiles[r - 1])) return;
      chosen[r - 1] = &last;
      if (transitive(d, chosen)) ++count;
      return;
    }
    for (const auto& s : classes[i]) {
      chosen[i] = &s;
      rec(i + 1, compose(prod, s));
    }
  };
  rec(0, id);
  return Ratio(count) / factorial(d);
}

namespace {

// Cached per-d snapshot of partitions, dimensions and class sizes.
struct CharacterData {
  std::vector<Partition> irreps;
  std::vector<long> dims;
};

const CharacterData& character_data(int d) {
  static std::map<int, CharacterData> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  CharacterData cd;
  cd.irreps = partitions_of(d);
  Partition ones{std::vector<int>(static_cast<std::size_t>(d), 1)};
  for (const auto& l : cd.irreps) cd.dims.push_back(character_value(l, ones));
  return cache.emplace(d, std::move(cd)).first->second;
}

Ratio tuples_with_identity_product(int d, const std::vector<Partition>& profiles) {
  if (d == 0) return Ratio(1);
  const CharacterData& cd = character_data(d);
  const long r = static_cast<long>(profiles.size());
  Ratio sum(0);
  for (std::size_t l = 0; l < cd.irreps.size(); ++l) {
    Ratio term(1);
    for (const auto& mu : profiles) term *= Ratio(character_value(cd.irreps[l], mu));
    Ratio dim(cd.dims[l]);
    if (r >= 2)
      term /= pow(dim, static_cast<unsigned>(r - 2));
    else
      term *= pow(dim, static_cast<unsigned>(2 - r));
    sum += term;
  }
  Ratio pref(1);
  for (const auto& mu : profiles) pref *= class_size(d, mu);
  return pref / factorial(d) * sum;
}

// All sub-multisets of a partition.
std::vector<std::pair<Partition, Partition>> splits(const Partition& mu) {
  std::map<int, int> m;
  for (int p : mu.parts) ++m[p];
  std::vector<std::pair<int, int>> items(m.begin(), m.end());
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<int> take(items.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      std::vector<int> a, b;
      for (std::size_t k = 0; k < items.size(); ++k) {
        for (int c = 0; c < take[k]; ++c) a.push_back(items[k].first);
        for (int c = take[k]; c < items[k].second; ++c) b.push_back(items[k].first);
      }
      out.push_back({make_partition(a), make_partition(b)});
      return;
    }
    for (int c = 0; c <= items[i].second; ++c) {
      take[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

using ConnKey = std::pair<int, std::vector<Partition>>;

// Connected tuple counts by peeling off the orbit of the first point:
//   Tup(d, mu) = sum_{k, nu} C(d-1, k-1) Conn(k, nu) Tup(d-k, mu \ nu).
Ratio connected_tuples(int d, const std::vector<Partition>& mu, std::map<ConnKey, Ratio>& memo) {
  ConnKey key{d, mu};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  Ratio total = tuples_with_identity_product(d, mu);
  const std::size_t r = mu.size();
  if (r == 0) {
    total = d == 1 ? Ratio(1) : Ratio(0);
  } else {
    std::vector<std::vector<std::pair<Partition, Partition>>> all;
    for (const auto& p : mu) all.push_back(splits(p));
    std::vector<Partition> nu(r), rest(r);
    for (int k = 1; k < d; ++k) {
      std::vector<std::vector<const std::pair<Partition, Partition>*>> options(r);
      bool possible = true;
      for (std::size_t i = 0; i < r && possible; ++i) {
        for (const auto& s : all[i])
          if (s.first.size() == k) options[i].push_back(&s);
        possible = !options[i].empty();
      }
      if (!possible) continue;
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r) {
          total -= binomial(d - 1, k - 1) * connected_tuples(k, nu, memo) * tuples_with_identity_product(d - k, rest);
          return;
        }
        for (const auto* s : options[i]) {
          nu[i] = s->first;
          rest[i] = s->second;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

Ratio tuple_count_character(const HurwitzQuery& q) {
  validate(q);
  if (q.d > kCharacterMaxDegree)
    throw HurwitzBudgetError("character-formula budget exceeded: d = " + std::to_string(q.d) + " > " +
                             std::to_string(kCharacterMaxDegree));
  return tuples_with_identity_product(q.d, q.profiles);
}

Ratio connected_count_character(const HurwitzQuery& q) {
  validate(q);
  if (q.d > kCharacterMaxDegree)
    throw HurwitzBudgetError("character-formula budget exceeded: d = " + std::to_string(q.d) + " > " +
                             std::to_string(kCharacterMaxDegree));
  std::map<ConnKey, Ratio> memo;
  return connected_tuples(q.d, q.profiles, memo) / factorial(q.d);
}

Ratio hurwitz_connected(const HurwitzQuery& q, HurwitzMethod method) {
  validate(q);
  const bool use_enum = method == HurwitzMethod::Enumeration;
  if (use_enum && q.d > kEnumerationMaxDegree)
    throw HurwitzBudgetError("enumeration budget exceeded: d = " + std::to_string(q.d));
  if (!use_enum && q.d > kCharacterMaxDegree)
    throw HurwitzBudgetError("character-formula budget exceeded: d = " + std::to_string(q.d));
  if (!rh_feasible(q)) return Ratio(0);
  return use_enum ? connected_count_enumeration(q) : connected_count_character(q);
}

B1AssemblyReport b1_assembly_check(const OrbiCurve& curve, std::span<const TearDropData> tds) {
  B1AssemblyReport rep{Ratio(0), MPoly(curve_table(curve)), MPoly(curve_table(curve)), {}};
  if (curve.genus != 0) rep.issues.push_back("curve must have genus 0");
  if (tds.size() != curve.orders.size()) {
    rep.issues.push_back("expected one tear drop per marked point (" + std::to_string(curve.orders.size()) + "), got " +
                         std::to_string(tds.size()));
    return rep;
  }
  for (std::size_t i = 0; i < tds.size(); ++i)
    if (tds[i].a != curve.orders[i]) {
      rep.issues.push_back("tear drop " + std::to_string(i + 1) + " has order " + std::to_string(tds[i].a) +
                           ", curve expects " + std::to_string(curve.orders[i]));
      return rep;
    }

  HurwitzQuery q{1, std::vector<Partition>(curve.orders.size(), Partition{{1}})};
  rep.h_degree_one = hurwitz_connected(q);
  if (!rep.h_degree_one.is_one()) rep.issues.push_back("H^0_{0,1}((1),...,(1)) = " + rep.h_degree_one.str() + ", expected 1");

  Potential F = assemble_multipoint(tds);
  TablePtr T = F.table;
  BasisSet basis(curve);
  MPoly prod = MPoly::constant(T, rep.h_degree_one);
  for (std::size_t alpha = 0; alpha < tds.size(); ++alpha) {
    const auto& td = tds[alpha];
    Exponent e(td.table->size(), 0);
    e[2] = 1;
    if (!td.B1.coefficient(e).is_one())
      rep.issues.push_back("tear drop " + std::to_string(alpha + 1) + ": coefficient of t^1 in B1 is " +
                           td.B1.coefficient(e).str() + ", expected 1");
    std::vector<std::size_t> idx{0, 1};
    for (int i = 1; i < td.a; ++i) idx.push_back(basis.position({static_cast<int>(alpha) + 1, i}));
    prod = prod * td.B1.remap(T, idx);
  }
  rep.product_formula = prod;
  rep.assembled = F.B[0];
  if (!(rep.product_formula == rep.assembled))
    rep.issues.push_back("covering formula " + rep.product_formula.str() + " differs from assembled B1 " +
                         rep.assembled.str());
  return rep;
}

}  // namespace orbiq
