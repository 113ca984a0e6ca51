#include "mpoly.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace orbiq {

VarTable::VarTable(std::vector<std::string> names, std::vector<Ratio> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
  if (names_.size() != weights_.size()) throw std::invalid_argument("VarTable: names/weights length mismatch");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("VarTable: duplicate variable '" + n + "'");
}

std::optional<std::size_t> VarTable::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t VarTable::index(const std::string& name) const {
  auto i = find(name);
  if (!i) throw std::invalid_argument("unknown variable '" + name + "'");
  return *i;
}

TablePtr make_table(std::vector<std::string> names, std::vector<Ratio> weights) {
  return std::make_shared<const VarTable>(std::move(names), std::move(weights));
}

bool GrevlexBefore::operator()(const Exponent& a, const Exponent& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string WeightedDegree::str() const {
  switch (kind) {
    case Kind::Zero: return "zero";
    case Kind::Inhomogeneous: return "inhomogeneous";
    case Kind::Homogeneous: return value.str();
  }
  return "?";
}

MPoly::MPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw std::invalid_argument("MPoly: null variable table");
}

MPoly MPoly::constant(TablePtr table, const Ratio& c) {
  MPoly p(std::move(table));
  p.add_term(Exponent(p.num_vars(), 0), c);
  return p;
}

MPoly MPoly::variable(TablePtr table, std::size_t index) {
  MPoly p(std::move(table));
  if (index >= p.num_vars()) throw std::invalid_argument("MPoly::variable: index out of range");
  Exponent e(p.num_vars(), 0);
  e[index] = 1;
  p.add_term(e, Ratio(1));
  return p;
}

MPoly MPoly::variable(TablePtr table, const std::string& name) {
  auto idx = table->index(name);
  return variable(std::move(table), idx);
}

MPoly MPoly::monomial(TablePtr table, Exponent exp, const Ratio& c) {
  MPoly p(std::move(table));
  if (exp.size() != p.num_vars()) throw std::invalid_argument("MPoly::monomial: exponent length mismatch");
  p.add_term(exp, c);
  return p;
}

bool MPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

Ratio MPoly::constant_term() const { return coefficient(Exponent(num_vars(), 0)); }

Ratio MPoly::coefficient(const Exponent& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Ratio(0) : it->second;
}

void MPoly::add_term(const Exponent& exp, const Ratio& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exp, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

const MPoly::TermMap::value_type& MPoly::leading() const {
  if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
  return *terms_.begin();
}

void MPoly::check_same_table(const MPoly& o) const {
  if (table_ != o.table_ && !(*table_ == *o.table_))
    throw std::invalid_argument("MPoly: operands live on different variable tables");
}

MPoly MPoly::operator-() const {
  MPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  check_same_table(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  check_same_table(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Ratio& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  a.check_same_table(b);
  MPoly r(a.table_);
  Exponent e(a.num_vars());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

bool operator==(const MPoly& a, const MPoly& b) {
  a.check_same_table(b);
  return a.terms_ == b.terms_;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly result = constant(table_, Ratio(1));
  MPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  if (var >= num_vars()) throw std::invalid_argument("derivative: unknown variable index " + std::to_string(var));
  MPoly r(table_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent f = e;
    f[var] -= 1;
    r.add_term(f, c * Ratio(e[var]));
  }
  return r;
}

MPoly MPoly::derivative(const std::string& name) const { return derivative(table_->index(name)); }

WeightedDegree MPoly::weighted_degree() const {
  WeightedDegree out;
  if (terms_.empty()) return out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Ratio d(0);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) d += table_->weight(i) * Ratio(e[i]);
    if (first) {
      out.value = d;
      first = false;
    } else if (d != out.value) {
      out.kind = WeightedDegree::Kind::Inhomogeneous;
      return out;
    }
  }
  out.kind = WeightedDegree::Kind::Homogeneous;
  return out;
}

int MPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return std::accumulate(terms_.begin()->first.begin(), terms_.begin()->first.end(), 0);
}

int MPoly::degree_in(const std::vector<bool>& mask) const {
  int best = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (std::size_t i = 0; i < e.size() && i < mask.size(); ++i)
      if (mask[i]) d += e[i];
    best = std::max(best, d);
  }
  return best;
}

MPoly MPoly::substitute(const std::map<std::size_t, Ratio>& values) const {
  MPoly r(table_);
  for (const auto& [e, c] : terms_) {
    Ratio coeff = c;
    Exponent f = e;
    for (const auto& [idx, val] : values) {
      if (idx < f.size() && f[idx]) {
        coeff *= orbiq::pow(val, static_cast<unsigned>(f[idx]));
        f[idx] = 0;
      }
    }
    r.add_term(f, coeff);
  }
  return r;
}

MPoly MPoly::drop_vars(const std::vector<bool>& mask) const {
  MPoly r(table_);
  for (const auto& [e, c] : terms_) {
    bool keep = true;
    for (std::size_t i = 0; i < e.size() && i < mask.size(); ++i)
      if (mask[i] && e[i]) keep = false;
    if (keep) r.terms_.emplace(e, c);
  }
  return r;
}

MPoly MPoly::remap(TablePtr target, std::span<const std::size_t> index_map) const {
  if (index_map.size() != num_vars()) throw std::invalid_argument("remap: index map length mismatch");
  MPoly r(target);
  Exponent f(r.num_vars(), 0);
  for (const auto& [e, c] : terms_) {
    std::fill(f.begin(), f.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (index_map[i] >= f.size()) throw std::invalid_argument("remap: target index out of range");
      f[index_map[i]] += e[i];
    }
    r.add_term(f, c);
  }
  return r;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& d) const {
  check_same_table(d);
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& [lead_e, lead_c] = d.leading();
  MPoly rem = *this;
  MPoly quot(table_);
  Exponent shift(num_vars());
  while (!rem.is_zero()) {
    const auto& [re, rc] = rem.leading();
    for (std::size_t i = 0; i < shift.size(); ++i) {
      shift[i] = re[i] - lead_e[i];
      if (shift[i] < 0) return std::nullopt;
    }
    MPoly step = monomial(table_, shift, rc / lead_c);
    quot += step;
    rem -= step * d;
  }
  return quot;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool is_const = std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    Ratio mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (is_const || !mag.is_one()) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (wrote) os << "*";
      os << table_->name(i);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw std::domain_error("polynomial division is not exact");
  return *q;
}

nlohmann::json to_json(const MPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(nlohmann::json::array({e, c.str()}));
  return arr;
}

MPoly mpoly_from_json(const nlohmann::json& j, TablePtr table) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of [exponents, coefficient]");
  MPoly p(table);
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2) throw std::invalid_argument("malformed polynomial term");
    auto e = term[0].get<Exponent>();
    if (e.size() != table->size()) throw std::invalid_argument("polynomial term has wrong exponent length");
    for (int x : e)
      if (x < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
    p.add_term(e, Ratio::parse(term[1].get<std::string>()));
  }
  return p;
}

}  // namespace orbiq
