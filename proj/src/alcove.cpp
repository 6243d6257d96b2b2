#include "weylfilt/alcove.hpp"

#include <algorithm>
#include <set>

namespace weylfilt {

namespace {

// sign of the root with these weight coordinates: +1 positive, -1 negative
int root_sign(const RootSystem& rs, const std::vector<Int>& weight_coords) {
  std::vector<Int> rc = intmat::apply(rs.cartan_adjugate_t(), weight_coords);
  for (Int x : rc) {
    if (x > 0) return 1;
    if (x < 0) return -1;
  }
  throw ConsistencyError("zero vector is not a root");
}

// w(gamma) for gamma in root coordinates; exact (the root lattice is
// W-stable)
std::vector<Int> apply_to_root_coords(const RootSystem& rs, const intmat::Matrix& w, const std::vector<Int>& gamma) {
  Weight wc = rs.from_root_coords(gamma);
  std::vector<Int> moved = intmat::apply(w, wc.coords);
  std::vector<Int> rc = intmat::apply(rs.cartan_adjugate_t(), moved);
  Int det = rs.cartan_det();
  for (Int& x : rc) {
    if (x % det != 0) throw ConsistencyError("Weyl image left the root lattice");
    x /= det;
  }
  return rc;
}

Int pair_root_coords(const RootSystem& rs, const std::vector<Int>& gamma, int root_index) {
  // <gamma, alpha^vee> with gamma in root coordinates
  return rs.pair(rs.from_root_coords(gamma), root_index);
}

}  // namespace

AffineElement affine_identity(const RootSystem& rs) {
  return {intmat::identity(rs.rank()), std::vector<Int>(rs.rank(), 0)};
}

int num_generators(const RootSystem& rs) { return rs.rank() + 1; }

AffineElement affine_generator(const RootSystem& rs, int i) {
  int n = rs.rank();
  if (i < 0 || i > n) throw DomainError("wall index " + std::to_string(i) + " out of range for " + rs.type().name());
  AffineElement g;
  g.gamma.assign(n, 0);
  if (i < n) {
    g.w = intmat::identity(n);
    for (int j = 0; j < n; ++j) g.w[j][i] -= rs.cartan()[i][j];
  } else {
    // reflection in <v+rho, alpha_0^vee> = -p: finite part s_{alpha_0},
    // translation part -alpha_0
    const Root& a0 = rs.highest_short_root();
    g.w = intmat::identity(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g.w[r][c] -= a0.weight_coords[r] * a0.coroot_coords[c];
    for (int j = 0; j < n; ++j) g.gamma[j] = -a0.root_coords[j];
  }
  return g;
}

AffineElement compose(const RootSystem& rs, const AffineElement& a, const AffineElement& b) {
  AffineElement out;
  out.w = intmat::mul(a.w, b.w);
  out.gamma = apply_to_root_coords(rs, a.w, b.gamma);
  for (int i = 0; i < rs.rank(); ++i) out.gamma[i] += a.gamma[i];
  return out;
}

AffineElement inverse(const RootSystem& rs, const AffineElement& a) {
  intmat::Matrix adj = intmat::adjugate(a.w);
  Int d = intmat::det(a.w);
  if (d != 1 && d != -1) throw ConsistencyError("Weyl matrix with |det| != 1");
  if (d == -1)
    for (auto& row : adj)
      for (auto& x : row) x = -x;
  AffineElement out;
  out.w = adj;
  out.gamma = apply_to_root_coords(rs, out.w, a.gamma);
  for (Int& x : out.gamma) x = -x;
  return out;
}

Weight dot_action(const RootSystem& rs, const AffineElement& x, const Weight& lambda, Int p) {
  Weight moved = rs.apply_matrix(x.w, lambda + rs.rho());
  Weight tr = rs.from_root_coords(x.gamma);
  for (int i = 0; i < rs.rank(); ++i) moved[i] += p * tr[i] - 1;
  return moved;
}

std::vector<Int> alcove_coords(const RootSystem& rs, const AffineElement& x) {
  // for v in C^-: <x.v + rho, a^vee> = <v + rho, (w^{-1} a)^vee> + p <gamma, a^vee>,
  // so k_a = <gamma, a^vee> - 1 if w^{-1} a > 0, else <gamma, a^vee>
  AffineElement xi = inverse(rs, x);
  std::vector<Int> k(rs.num_positive_roots());
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    const Root& a = rs.positive_roots()[r];
    std::vector<Int> pre = intmat::apply(xi.w, a.weight_coords);
    int sign = root_sign(rs, pre);
    Int m = pair_root_coords(rs, x.gamma, r);
    k[r] = (sign > 0) ? m - 1 : m;
  }
  return k;
}

Int length(const RootSystem& rs, const AffineElement& x) {
  Int len = 0;
  for (Int k : alcove_coords(rs, x)) len += k >= -1 ? k + 1 : -(k + 1);
  return len;
}

bool is_identity(const AffineElement& x) {
  int n = static_cast<int>(x.gamma.size());
  for (Int g : x.gamma)
    if (g != 0) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x.w[i][j] != (i == j ? 1 : 0)) return false;
  return true;
}

std::vector<int> left_descents(const RootSystem& rs, const AffineElement& x) {
  std::vector<int> out;
  Int lx = length(rs, x);
  for (int i = 0; i < num_generators(rs); ++i) {
    AffineElement sx = compose(rs, affine_generator(rs, i), x);
    if (length(rs, sx) < lx) out.push_back(i);
  }
  return out;
}

std::vector<int> reduced_word(const RootSystem& rs, const AffineElement& x) {
  std::vector<int> word;
  AffineElement cur = x;
  Int len = length(rs, cur);
  while (!is_identity(cur)) {
    bool found = false;
    for (int i = 0; i < num_generators(rs); ++i) {
      AffineElement sx = compose(rs, affine_generator(rs, i), cur);
      Int l2 = length(rs, sx);
      if (l2 == len - 1) {
        word.push_back(i);
        cur = std::move(sx);
        len = l2;
        found = true;
        break;
      }
    }
    if (!found) throw ConsistencyError("no descent found for a non-identity element");
  }
  return word;
}

AffineElement from_word(const RootSystem& rs, const std::vector<int>& word) {
  AffineElement x = affine_identity(rs);
  for (int i : word) x = compose(rs, x, affine_generator(rs, i));
  return x;
}

bool bruhat_leq(const RootSystem& rs, const AffineElement& y, const AffineElement& x) {
  if (y == x) return true;
  Int ly = length(rs, y), lx = length(rs, x);
  if (ly >= lx) return false;
  if (ly == 0) return true;  // identity
  // standard recursion on a left descent s of x
  int s = left_descents(rs, x).front();
  AffineElement g = affine_generator(rs, s);
  AffineElement sx = compose(rs, g, x);
  AffineElement sy = compose(rs, g, y);
  if (length(rs, sy) < ly) return bruhat_leq(rs, sy, sx);
  return bruhat_leq(rs, y, sx);
}

std::vector<AffineElement> lower_interval(const RootSystem& rs, const AffineElement& x, Int cap) {
  std::vector<int> word = reduced_word(rs, x);
  std::set<AffineElement> interval{affine_identity(rs)};
  for (int letter : word) {
    AffineElement g = affine_generator(rs, letter);
    std::vector<AffineElement> grown;
    grown.reserve(interval.size());
    for (const AffineElement& z : interval) grown.push_back(compose(rs, z, g));
    for (AffineElement& z : grown) interval.insert(std::move(z));
    if (static_cast<Int>(interval.size()) > cap)
      throw ResourceError("Bruhat interval exceeds the configured cap of " + std::to_string(cap) + " elements");
  }
  return {interval.begin(), interval.end()};
}

bool is_dominant_alcove(const RootSystem& rs, const AffineElement& x) {
  std::vector<Int> k = alcove_coords(rs, x);
  for (int i = 0; i < rs.rank(); ++i)
    if (k[rs.simple_root_index(i)] < 0) return false;
  return true;
}

bool in_base_alcove_closure(const RootSystem& rs, const Weight& v, Int p) {
  Weight vr = v + rs.rho();
  for (int r = 0; r < rs.num_positive_roots(); ++r) {
    Int t = rs.pair(vr, r);
    if (t > 0 || t < -p) return false;
  }
  return true;
}

Located locate(const RootSystem& rs, const Weight& lambda, Int p) {
  if (!rs.is_dominant(lambda)) throw DomainError("locate: weight " + lambda.to_string() + " is not dominant");
  Weight nu = lambda;
  std::vector<int> walk;  // applied to lambda in order
  const int a0 = rs.highest_short_root_index();
  for (;;) {
    int wall = -1;
    for (int i = 0; i < rs.rank(); ++i) {
      if (nu[i] + 1 > 0) {  // <nu + rho, alpha_i^vee> > 0
        wall = i;
        break;
      }
    }
    if (wall < 0 && rs.pair(nu + rs.rho(), a0) < -p) wall = rs.rank();
    if (wall < 0) break;
    nu = dot_action(rs, affine_generator(rs, wall), nu, p);
    walk.push_back(wall);
  }
  // nu = (g_{wk} ... g_{w1}) . lambda, so lambda = (g_{w1} ... g_{wk}) . nu
  AffineElement x = affine_identity(rs);
  for (int wall : walk) x = compose(rs, x, affine_generator(rs, wall));
  Located res{std::move(x), std::move(nu)};
  if (dot_action(rs, res.x, res.lambda_minus, p) != lambda)
    throw ConsistencyError("locate: round trip failed for " + lambda.to_string());
  if (!is_minimal_coset_representative(rs, res.x, stabilizer_generators(rs, res.lambda_minus, p)))
    throw ConsistencyError("locate: walk produced a non-minimal coset representative for " + lambda.to_string());
  return res;
}

std::vector<int> stabilizer_generators(const RootSystem& rs, const Weight& v, Int p) {
  std::vector<int> out;
  for (int i = 0; i < num_generators(rs); ++i)
    if (dot_action(rs, affine_generator(rs, i), v, p) == v) out.push_back(i);
  return out;
}

bool is_minimal_coset_representative(const RootSystem& rs, const AffineElement& x, const std::vector<int>& stab_gens) {
  Int lx = length(rs, x);
  for (int t : stab_gens) {
    AffineElement xt = compose(rs, x, affine_generator(rs, t));
    if (length(rs, xt) < lx) return false;
  }
  return true;
}

bool is_regular(const RootSystem& rs, const Weight& lambda, Int p) {
  Weight lr = lambda + rs.rho();
  for (int r = 0; r < rs.num_positive_roots(); ++r)
    if (rs.pair(lr, r) % p == 0) return false;
  return true;
}

bool is_restricted(const RootSystem&, const Weight& lambda, Int p) {
  for (Int c : lambda.coords)
    if (c < 0 || c >= p) return false;
  return true;
}

bool in_jantzen_region(const RootSystem& rs, const Weight& lambda, Int p) {
  Int h = rs.coxeter_number();
  return rs.pair(lambda + rs.rho(), rs.highest_short_root_index()) <= p * (p - h + 2);
}

}  // namespace weylfilt
