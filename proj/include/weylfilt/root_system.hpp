#pragma once

#include <string>
#include <vector>

#include "weylfilt/errors.hpp"
#include "weylfilt/intmat.hpp"

namespace weylfilt {

using Int = long long;

// Simple type, one of A..G with the usual rank constraints.
// B2 and C2 are both accepted and produce isomorphic data.
struct CartanType {
  char family = 'A';
  int rank = 1;

  static CartanType parse(const std::string& name);
  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  void validate() const;

  bool operator==(const CartanType& o) const { return family == o.family && rank == o.rank; }
};

// Weight in the fundamental-weight basis: coords[i] = <lambda, alpha_i^vee>.
struct Weight {
  std::vector<Int> coords;

  Weight() = default;
  explicit Weight(std::vector<Int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<Int>(rank, 0)); }

  int rank() const { return static_cast<int>(coords.size()); }
  Int operator[](int i) const { return coords[i]; }
  Int& operator[](int i) { return coords[i]; }

  bool operator==(const Weight& o) const { return coords == o.coords; }
  bool operator!=(const Weight& o) const { return coords != o.coords; }
  bool operator<(const Weight& o) const { return coords < o.coords; }  // lexicographic

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  std::string to_string() const;  // "c0,c1,..."
};

Weight operator+(Weight a, const Weight& b);
Weight operator-(Weight a, const Weight& b);
Weight operator*(Int k, Weight a);

// A positive root carried in every coordinate system the engine needs.
struct Root {
  std::vector<Int> root_coords;    // coefficients over the simple roots
  std::vector<Int> coroot_coords;  // alpha^vee over the simple coroots
  std::vector<Int> weight_coords;  // <alpha, alpha_i^vee> per i
  Int length2 = 1;                 // (alpha,alpha)/2 with short roots normalized to 1
};

// Root data for one simple type. Immutable after build(); safe to share
// across threads. All arithmetic is exact: weights live in the
// fundamental-weight basis, roots in the simple-root basis, and
// conversions go through the adjugate of the Cartan transpose.
class RootSystem {
public:
  static RootSystem build(const CartanType& t);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }

  // cartan()[i][j] = <alpha_i, alpha_j^vee>
  const intmat::Matrix& cartan() const { return cartan_; }
  Int cartan_det() const { return det_; }
  const intmat::Matrix& cartan_adjugate_t() const { return adj_t_; }  // adj(A^T)

  const std::vector<Root>& positive_roots() const { return roots_; }
  int num_positive_roots() const { return static_cast<int>(roots_.size()); }
  // position of the simple root alpha_i within positive_roots()
  int simple_root_index(int i) const { return simple_index_[i]; }
  int highest_short_root_index() const { return alpha0_; }
  const Root& highest_short_root() const { return roots_[alpha0_]; }
  Int coxeter_number() const { return coxeter_; }
  const Weight& rho() const { return rho_; }
  const intmat::Matrix& w0_matrix() const { return w0_; }

  // <lambda, alpha^vee> for the positive root with the given index.
  Int pair(const Weight& lambda, int root_index) const;

  bool is_dominant(const Weight& w) const;

  // true iff hi - lo is a non-negative integer combination of simple roots
  bool dominance_leq(const Weight& lo, const Weight& hi) const;

  // root coordinates of v scaled by cartan_det(): adj(A^T) * v
  std::vector<Int> root_coords_scaled(const Weight& v) const;

  // exact root coordinates when v lies in the root lattice
  bool in_root_lattice(const Weight& v, std::vector<Int>* coords_out = nullptr) const;

  Weight from_root_coords(const std::vector<Int>& c) const;  // A^T * c

  Weight apply_matrix(const intmat::Matrix& m, const Weight& w) const;
  Weight apply_w0(const Weight& w) const { return apply_matrix(w0_, w); }
  Weight star(const Weight& w) const;  // -w0(lambda)

  // linear (not dot) action of the simple reflection s_i
  Weight simple_reflection(int i, const Weight& w) const;

  Weight dominant_representative(const Weight& w) const;
  std::vector<Weight> weyl_orbit(const Weight& w) const;

  // det * (x, y) for the W-invariant form with short roots of norm 2;
  // symmetric and integral.
  Int form_scaled(const Weight& x, const Weight& y) const;

  // strictly increasing along dominance: v < w implies height_key(v) < height_key(w)
  Int height_key(const Weight& v) const;

  static Int classical_positive_root_count(const CartanType& t);

private:
  CartanType type_;
  intmat::Matrix cartan_;   // A[i][j] = <alpha_i, alpha_j^vee>
  intmat::Matrix adj_t_;    // adjugate of A^T
  Int det_ = 1;
  std::vector<Int> simple_length2_;  // symmetrizer, short = 1
  std::vector<Root> roots_;
  std::vector<int> simple_index_;
  int alpha0_ = 0;
  Int coxeter_ = 0;
  Weight rho_;
  intmat::Matrix w0_;
};

// Every dominant weight with <lambda + rho, alpha0^vee> <= bound, in
// ascending lexicographic order.
std::vector<Weight> dominant_weights_below(const RootSystem& rs, Int bound);

// The p^rank restricted weights (all coordinates in [0, p)), lex ascending.
std::vector<Weight> restricted_weights(const RootSystem& rs, Int p);

}  // namespace weylfilt
