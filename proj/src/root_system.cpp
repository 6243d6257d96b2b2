#include "weylfilt/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace weylfilt {

namespace {

using intmat::Matrix;

// Bourbaki Cartan matrices, A[i][j] = <alpha_i, alpha_j^vee>.
Matrix cartan_matrix(const CartanType& t) {
  int n = t.rank;
  Matrix a(n, std::vector<Int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto edge = [&](int i, int j) { a[i][j] = -1; a[j][i] = -1; };
  switch (t.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 2][n - 1] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
      a[n - 1][n - 2] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':  // nodes 1-3-4-5-... in a chain, node 2 attached to node 4
      edge(0, 2);
      edge(1, 3);
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      edge(0, 1);
      edge(1, 2);
      edge(2, 3);
      a[1][2] = -2;
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      a[0][1] = -1;
      a[1][0] = -3;
      break;
    default:
      throw DomainError("unknown Cartan family");
  }
  return a;
}

// Integer symmetrizer d with d[i] * A[i][j] = d[j] * A[j][i], normalized so
// the short simple roots carry d = 1.
std::vector<Int> symmetrizer(const Matrix& a) {
  int n = static_cast<int>(a.size());
  std::vector<Int> num(n, 0), den(n, 0);
  num[0] = den[0] = 1;
  // propagate along edges of the (connected) Dynkin diagram
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      if (den[i] == 0) continue;
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0 || den[j] != 0) continue;
        // (a_i, a_j) = A_ij d_j = A_ji d_i, so d_j / d_i = A_ji / A_ij
        num[j] = num[i] * a[j][i];
        den[j] = den[i] * a[i][j];
        if (num[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
        if (den[j] < 0) { num[j] = -num[j]; den[j] = -den[j]; }
        changed = true;
      }
    }
  }
  Int l = 1;
  for (int i = 0; i < n; ++i) {
    if (den[i] == 0) throw ConsistencyError("Dynkin diagram not connected");
    l = std::lcm(l, den[i]);
  }
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = num[i] * (l / den[i]);
  Int g = 0;
  for (Int x : d) g = std::gcd(g, x);
  for (Int& x : d) x /= g;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[j] * a[i][j] != d[i] * a[j][i]) throw ConsistencyError("symmetrizer failed");
  return d;
}

}  // namespace

CartanType CartanType::parse(const std::string& name) {
  if (name.size() < 2) throw DomainError("cannot parse Cartan type '" + name + "'");
  CartanType t;
  t.family = static_cast<char>(std::toupper(name[0]));
  try {
    t.rank = std::stoi(name.substr(1));
  } catch (const std::exception&) {
    throw DomainError("cannot parse Cartan type '" + name + "'");
  }
  t.validate();
  return t;
}

void CartanType::validate() const {
  bool ok = false;
  switch (family) {
    case 'A': ok = rank >= 1; break;
    case 'B': ok = rank >= 2; break;
    case 'C': ok = rank >= 2; break;
    case 'D': ok = rank >= 4; break;
    case 'E': ok = rank == 6 || rank == 7 || rank == 8; break;
    case 'F': ok = rank == 4; break;
    case 'G': ok = rank == 2; break;
    default: ok = false; break;
  }
  if (!ok)
    throw DomainError("invalid Cartan type: family " + std::string(1, family) + " does not admit rank " +
                      std::to_string(rank));
}

Weight& Weight::operator+=(const Weight& o) {
  for (int i = 0; i < rank(); ++i) coords[i] += o.coords[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (int i = 0; i < rank(); ++i) coords[i] -= o.coords[i];
  return *this;
}

std::string Weight::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rank(); ++i) {
    if (i) out << ',';
    out << coords[i];
  }
  return out.str();
}

Weight operator+(Weight a, const Weight& b) { a += b; return a; }
Weight operator-(Weight a, const Weight& b) { a -= b; return a; }
Weight operator*(Int k, Weight a) {
  for (auto& c : a.coords) c *= k;
  return a;
}

Int RootSystem::classical_positive_root_count(const CartanType& t) {
  Int n = t.rank;
  switch (t.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : (n == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
    default: return 0;
  }
}

RootSystem RootSystem::build(const CartanType& t) {
  t.validate();
  RootSystem rs;
  rs.type_ = t;
  int n = t.rank;
  rs.cartan_ = cartan_matrix(t);
  rs.adj_t_ = intmat::adjugate(intmat::transpose(rs.cartan_));
  rs.det_ = intmat::det(rs.cartan_);
  if (rs.det_ <= 0) throw ConsistencyError("Cartan determinant not positive");
  rs.simple_length2_ = symmetrizer(rs.cartan_);

  // Generate all roots as (root coords, coroot coords) pairs by closing the
  // simple roots under the simple reflections.
  using Pair = std::pair<std::vector<Int>, std::vector<Int>>;
  std::set<Pair> seen;
  std::vector<Pair> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> c(n, 0), d(n, 0);
    c[i] = 1;
    d[i] = 1;
    seen.insert({c, d});
    queue.push_back({c, d});
  }
  while (!queue.empty()) {
    auto [c, d] = queue.back();
    queue.pop_back();
    for (int i = 0; i < n; ++i) {
      // s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i and the matching
      // reflection of the coroot
      Int pr = 0, pc = 0;
      for (int k = 0; k < n; ++k) {
        pr += c[k] * rs.cartan_[k][i];
        pc += rs.cartan_[i][k] * d[k];
      }
      auto c2 = c;
      auto d2 = d;
      c2[i] -= pr;
      d2[i] -= pc;
      if (seen.insert({c2, d2}).second) queue.push_back({c2, d2});
    }
  }

  for (const auto& [c, d] : seen) {
    bool pos = true, neg = true;
    for (Int x : c) {
      if (x > 0) neg = false;
      if (x < 0) pos = false;
    }
    if (!pos && !neg) throw ConsistencyError("mixed-sign root generated");
    if (!pos) continue;
    Root r;
    r.root_coords = c;
    r.coroot_coords = d;
    r.weight_coords.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) r.weight_coords[i] += c[k] * rs.cartan_[k][i];
    // (alpha,alpha)/2 from d_i = c_i * len_i / len(alpha)
    int i0 = 0;
    while (c[i0] == 0) ++i0;
    if ((c[i0] * rs.simple_length2_[i0]) % d[i0] != 0) throw ConsistencyError("non-integral root length");
    r.length2 = c[i0] * rs.simple_length2_[i0] / d[i0];
    rs.roots_.push_back(std::move(r));
  }
  std::sort(rs.roots_.begin(), rs.roots_.end(),
            [](const Root& a, const Root& b) { return a.root_coords < b.root_coords; });

  if (static_cast<Int>(rs.roots_.size()) != classical_positive_root_count(t))
    throw ConsistencyError("positive root count mismatch for " + t.name());

  rs.simple_index_.assign(n, -1);
  for (int r = 0; r < static_cast<int>(rs.roots_.size()); ++r) {
    Int height = 0;
    int pos = -1;
    for (int i = 0; i < n; ++i) {
      height += rs.roots_[r].root_coords[i];
      if (rs.roots_[r].root_coords[i] == 1) pos = i;
    }
    if (height == 1) rs.simple_index_[pos] = r;
  }
  for (int i = 0; i < n; ++i)
    if (rs.simple_index_[i] < 0) throw ConsistencyError("simple root missing from the generated set");

  // highest short root = the positive root whose coroot has maximal height
  Int best = -1;
  for (int i = 0; i < static_cast<int>(rs.roots_.size()); ++i) {
    Int h = std::accumulate(rs.roots_[i].coroot_coords.begin(), rs.roots_[i].coroot_coords.end(), Int{0});
    if (h > best) {
      best = h;
      rs.alpha0_ = i;
    }
  }
  rs.coxeter_ = best + 1;
  rs.rho_ = Weight(std::vector<Int>(n, 1));

  // w0 by exhaustive descent: walk -rho into the dominant chamber; the
  // product of the reflections used is w0.
  {
    Weight v = Weight(std::vector<Int>(n, -1));
    Matrix w = intmat::identity(n);
    Int steps = 0;
    for (;;) {
      int i = -1;
      for (int k = 0; k < n; ++k)
        if (v[k] < 0) { i = k; break; }
      if (i < 0) break;
      // s_i as a matrix on the weight basis
      Matrix s = intmat::identity(n);
      for (int j = 0; j < n; ++j) s[j][i] -= rs.cartan_[i][j];
      v = Weight(intmat::apply(s, v.coords));
      w = intmat::mul(s, w);
      if (++steps > 4 * classical_positive_root_count(t)) throw ConsistencyError("w0 descent failed to terminate");
    }
    if (steps != classical_positive_root_count(t)) throw ConsistencyError("w0 descent has wrong length");
    rs.w0_ = w;
    if (intmat::mul(w, w) != intmat::identity(n)) throw ConsistencyError("w0 is not an involution");
  }

  // adj(A^T) A^T = det I
  {
    Matrix check = intmat::mul(rs.adj_t_, intmat::transpose(rs.cartan_));
    Matrix expect = intmat::identity(n);
    for (auto& row : expect)
      for (auto& x : row) x *= rs.det_;
    if (check != expect) throw ConsistencyError("adjugate check failed");
  }

  return rs;
}

Int RootSystem::pair(const Weight& lambda, int root_index) const {
  if (root_index < 0 || root_index >= num_positive_roots())
    throw DomainError("positive root index " + std::to_string(root_index) + " out of range for " + type_.name());
  const auto& d = roots_[root_index].coroot_coords;
  Int s = 0;
  for (int i = 0; i < rank(); ++i) s += d[i] * lambda[i];
  return s;
}

bool RootSystem::is_dominant(const Weight& w) const {
  for (Int c : w.coords)
    if (c < 0) return false;
  return true;
}

std::vector<Int> RootSystem::root_coords_scaled(const Weight& v) const {
  return intmat::apply(adj_t_, v.coords);
}

bool RootSystem::in_root_lattice(const Weight& v, std::vector<Int>* coords_out) const {
  auto s = root_coords_scaled(v);
  for (Int& x : s) {
    if (x % det_ != 0) return false;
    x /= det_;
  }
  if (coords_out) *coords_out = std::move(s);
  return true;
}

bool RootSystem::dominance_leq(const Weight& lo, const Weight& hi) const {
  std::vector<Int> c;
  if (!in_root_lattice(hi - lo, &c)) return false;
  for (Int x : c)
    if (x < 0) return false;
  return true;
}

Weight RootSystem::from_root_coords(const std::vector<Int>& c) const {
  Weight w = Weight::zero(rank());
  for (int i = 0; i < rank(); ++i)
    for (int k = 0; k < rank(); ++k) w[i] += c[k] * cartan_[k][i];
  return w;
}

Weight RootSystem::apply_matrix(const intmat::Matrix& m, const Weight& w) const {
  return Weight(intmat::apply(m, w.coords));
}

Weight RootSystem::star(const Weight& w) const {
  Weight out = apply_w0(w);
  for (auto& c : out.coords) c = -c;
  return out;
}

Weight RootSystem::simple_reflection(int i, const Weight& w) const {
  Weight out = w;
  Int wi = w[i];
  for (int j = 0; j < rank(); ++j) out[j] -= wi * cartan_[i][j];
  return out;
}

Weight RootSystem::dominant_representative(const Weight& w) const {
  Weight v = w;
  for (;;) {
    int i = -1;
    for (int k = 0; k < rank(); ++k)
      if (v[k] < 0) { i = k; break; }
    if (i < 0) return v;
    v = simple_reflection(i, v);
  }
}

std::vector<Weight> RootSystem::weyl_orbit(const Weight& w) const {
  std::set<Weight> seen{w};
  std::vector<Weight> queue{w};
  while (!queue.empty()) {
    Weight v = queue.back();
    queue.pop_back();
    for (int i = 0; i < rank(); ++i) {
      Weight u = simple_reflection(i, v);
      if (seen.insert(u).second) queue.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

Int RootSystem::form_scaled(const Weight& x, const Weight& y) const {
  auto ry = root_coords_scaled(y);
  Int s = 0;
  for (int j = 0; j < rank(); ++j) s += ry[j] * x[j] * simple_length2_[j];
  return s;
}

Int RootSystem::height_key(const Weight& v) const {
  auto s = root_coords_scaled(v);
  return std::accumulate(s.begin(), s.end(), Int{0});
}

std::vector<Weight> dominant_weights_below(const RootSystem& rs, Int bound) {
  std::vector<Weight> out;
  const auto& d = rs.highest_short_root().coroot_coords;
  int n = rs.rank();
  std::vector<Int> cur(n, 0);
  Int base = 0;
  for (int i = 0; i < n; ++i) base += d[i];  // <rho, alpha0^vee>
  std::function<void(int, Int)> scan = [&](int i, Int used) {
    if (i == n) {
      out.push_back(Weight(cur));
      return;
    }
    for (Int v = 0; used + d[i] * v <= bound; ++v) {
      cur[i] = v;
      scan(i + 1, used + d[i] * v);
    }
    cur[i] = 0;
  };
  if (base <= bound) scan(0, base);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Weight> restricted_weights(const RootSystem& rs, Int p) {
  std::vector<Weight> out;
  std::vector<Int> cur(rs.rank(), 0);
  for (;;) {
    out.push_back(Weight(cur));
    int i = rs.rank() - 1;
    while (i >= 0 && cur[i] + 1 >= p) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace weylfilt
