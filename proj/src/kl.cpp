#include "weylfilt/kl.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "json.hpp"

namespace weylfilt {

void KLPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

void KLPolynomial::add_scaled(const KLPolynomial& o, Int scale, int shift) {
  if (scale == 0 || o.is_zero()) return;
  if (static_cast<int>(coeffs.size()) < static_cast<int>(o.coeffs.size()) + shift)
    coeffs.resize(o.coeffs.size() + shift, 0);
  for (int i = 0; i < static_cast<int>(o.coeffs.size()); ++i) coeffs[i + shift] += scale * o.coeffs[i];
  trim();
}

Int evaluate_at_one(const KLPolynomial& p) {
  Int s = 0;
  for (Int c : p.coeffs) s += c;
  return s;
}

KLTable::KLTable(const RootSystem& rs, Int interval_cap) : rs_(&rs), interval_cap_(interval_cap) {}

Int KLTable::len(const AffineElement& x) {
  {
    std::lock_guard<std::mutex> lock(misc_mu_);
    auto it = len_.find(x);
    if (it != len_.end()) return it->second;
  }
  Int l = length(*rs_, x);
  std::lock_guard<std::mutex> lock(misc_mu_);
  return len_.emplace(x, l).first->second;
}

bool KLTable::leq(const AffineElement& y, const AffineElement& x) {
  auto key = std::make_pair(y, x);
  {
    std::lock_guard<std::mutex> lock(misc_mu_);
    auto it = leq_.find(key);
    if (it != leq_.end()) return it->second;
  }
  bool r = bruhat_leq(*rs_, y, x);
  std::lock_guard<std::mutex> lock(misc_mu_);
  return leq_.emplace(std::move(key), r).first->second;
}

const std::vector<AffineElement>& KLTable::interval(const AffineElement& x) {
  {
    std::lock_guard<std::mutex> lock(misc_mu_);
    auto it = intervals_.find(x);
    if (it != intervals_.end()) return it->second;
  }
  std::vector<AffineElement> iv = lower_interval(*rs_, x, interval_cap_);
  std::lock_guard<std::mutex> lock(misc_mu_);
  return intervals_.emplace(x, std::move(iv)).first->second;
}

KLPolynomial KLTable::compute(const AffineElement& y, const AffineElement& x, int descent) {
  if (!leq(y, x)) return KLPolynomial::zero();
  if (y == x) return KLPolynomial::one();

  int s = descent;
  if (s < 0) s = left_descents(*rs_, x).front();
  AffineElement g = affine_generator(*rs_, s);
  AffineElement v = compose(*rs_, g, x);
  AffineElement sy = compose(*rs_, g, y);
  if (len(sy) > len(y)) return polynomial(sy, x);

  // s is a descent of both x and y:
  // P_{y,x} = P_{sy,v} + q P_{y,v} - sum mu(z,v) q^{(l(x)-l(z))/2} P_{y,z}
  KLPolynomial res = polynomial(sy, v);
  res.add_scaled(polynomial(y, v), 1, 1);
  for (const AffineElement& z : interval(v)) {
    if (z == v) continue;
    if (len(compose(*rs_, g, z)) > len(z)) continue;
    if (!leq(y, z)) continue;
    Int m = mu(z, v);
    if (m == 0) continue;
    int shift = static_cast<int>((len(x) - len(z)) / 2);
    res.add_scaled(polynomial(y, z), -m, shift);
  }
  return res;
}

void KLTable::validate(const AffineElement& y, const AffineElement& x, const KLPolynomial& p) {
  if (y == x) {
    if (p != KLPolynomial::one()) throw ConsistencyError("P_{x,x} != 1");
    return;
  }
  Int gap = len(x) - len(y);
  if (p.is_zero() || p.coeffs[0] != 1)
    throw ConsistencyError("KL polynomial without constant term 1 at length gap " + std::to_string(gap));
  if (2 * p.degree() > gap - 1) throw ConsistencyError("KL polynomial degree bound violated");
}

KLPolynomial KLTable::polynomial(const AffineElement& y, const AffineElement& x) {
  auto key = std::make_pair(y, x);
  {
    std::lock_guard<std::mutex> lock(poly_mu_);
    auto it = poly_.find(key);
    if (it != poly_.end()) return it->second;
  }
  KLPolynomial p = compute(y, x, -1);
  if (!p.is_zero()) validate(y, x, p);
  std::lock_guard<std::mutex> lock(poly_mu_);
  return poly_.emplace(std::move(key), std::move(p)).first->second;
}

KLPolynomial KLTable::polynomial_via_descent(const AffineElement& y, const AffineElement& x, int descent) {
  Int lx = len(x);
  AffineElement sx = compose(*rs_, affine_generator(*rs_, descent), x);
  if (len(sx) >= lx) throw DomainError("wall " + std::to_string(descent) + " is not a left descent of the element");
  KLPolynomial p = compute(y, x, descent);
  if (!p.is_zero()) validate(y, x, p);
  return p;
}

Int KLTable::mu(const AffineElement& y, const AffineElement& x) {
  if (y == x) return 0;
  Int gap = len(x) - len(y);
  if (gap <= 0 || gap % 2 == 0) return 0;
  if (!leq(y, x)) return 0;
  return polynomial(y, x).at(static_cast<int>((gap - 1) / 2));
}

std::size_t KLTable::size() const {
  std::lock_guard<std::mutex> lock(poly_mu_);
  return poly_.size();
}

namespace {

nlohmann::json word_json(const std::vector<int>& w) { return nlohmann::json(w); }

}  // namespace

void KLTable::save_json(const std::string& path) const {
  // canonical entry order: by (x word, y word); only y <= x pairs are stored
  std::vector<std::pair<std::vector<int>, std::pair<std::vector<int>, const KLPolynomial*>>> rows;
  {
    std::lock_guard<std::mutex> lock(poly_mu_);
    for (const auto& [key, p] : poly_) {
      if (p.is_zero()) continue;
      rows.push_back({reduced_word(*rs_, key.second), {reduced_word(*rs_, key.first), &p}});
    }
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second.first < b.second.first;
  });
  nlohmann::ordered_json doc;
  doc["version"] = 1;
  doc["coxeter_type"] = coxeter_label();
  auto& entries = doc["entries"] = nlohmann::json::array();
  for (const auto& [xw, rest] : rows) {
    nlohmann::ordered_json e;
    e["y"] = word_json(rest.first);
    e["x"] = word_json(xw);
    e["coeffs"] = nlohmann::json(rest.second->coeffs);
    entries.push_back(std::move(e));
  }
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write cache file " + tmp);
    out << doc.dump(2) << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw DomainError("cannot move cache file into place at " + path);
}

void KLTable::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read cache file " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError("cache file " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    throw DomainError("cache file " + path + " has a missing or unsupported version field");
  if (!doc.contains("coxeter_type") || doc["coxeter_type"].get<std::string>() != coxeter_label())
    throw DomainError("cache file " + path + " is for a different Coxeter type (expected " + coxeter_label() + ")");
  if (!doc.contains("entries") || !doc["entries"].is_array())
    throw DomainError("cache file " + path + " has no entries array");

  // validate everything before touching the live table: rejected files are
  // never partially loaded
  std::map<std::pair<AffineElement, AffineElement>, KLPolynomial> staged;
  for (const auto& e : doc["entries"]) {
    if (!e.contains("y") || !e.contains("x") || !e.contains("coeffs"))
      throw DomainError("cache file " + path + " has a malformed entry");
    std::vector<int> yw = e["y"].get<std::vector<int>>();
    std::vector<int> xw = e["x"].get<std::vector<int>>();
    for (int c : yw)
      if (c < 0 || c > rs_->rank()) throw DomainError("cache file " + path + " has an out-of-range wall index");
    for (int c : xw)
      if (c < 0 || c > rs_->rank()) throw DomainError("cache file " + path + " has an out-of-range wall index");
    AffineElement y = from_word(*rs_, yw);
    AffineElement x = from_word(*rs_, xw);
    if (length(*rs_, y) != static_cast<Int>(yw.size()) || length(*rs_, x) != static_cast<Int>(xw.size()))
      throw DomainError("cache file " + path + " contains a non-reduced word");
    KLPolynomial p;
    p.coeffs = e["coeffs"].get<std::vector<Int>>();
    p.trim();
    if (!bruhat_leq(*rs_, y, x)) throw DomainError("cache file " + path + " has an entry with y not below x");
    if (p.is_zero() || p.coeffs[0] != 1 ||
        (y != x && 2 * p.degree() > length(*rs_, x) - length(*rs_, y) - 1) ||
        (y == x && p != KLPolynomial::one()))
      throw DomainError("cache file " + path + " has an entry violating the KL invariants");
    staged.emplace(std::make_pair(std::move(y), std::move(x)), std::move(p));
  }
  std::lock_guard<std::mutex> lock(poly_mu_);
  for (auto& [k, v] : staged) poly_.insert_or_assign(k, std::move(v));
}

std::vector<AffineElement> length_ball(const RootSystem& rs, Int max_len) {
  std::set<AffineElement> seen{affine_identity(rs)};
  std::vector<AffineElement> frontier{affine_identity(rs)};
  Int l = 0;
  while (l < max_len) {
    std::vector<AffineElement> next;
    for (const AffineElement& x : frontier)
      for (int i = 0; i < num_generators(rs); ++i) {
        AffineElement xs = compose(rs, x, affine_generator(rs, i));
        if (length(rs, xs) == l + 1 && seen.insert(xs).second) next.push_back(std::move(xs));
      }
    frontier = std::move(next);
    ++l;
  }
  return {seen.begin(), seen.end()};
}

}  // namespace weylfilt
