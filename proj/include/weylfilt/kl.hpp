#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "weylfilt/alcove.hpp"

namespace weylfilt {

// Integer polynomial in q; coeffs[i] is the coefficient of q^i. The zero
// polynomial has an empty coefficient list.
struct KLPolynomial {
  std::vector<Int> coeffs;

  static KLPolynomial zero() { return {}; }
  static KLPolynomial one() { return {{1}}; }

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  Int at(int i) const { return (i >= 0 && i < static_cast<int>(coeffs.size())) ? coeffs[i] : 0; }

  void trim();
  void add_scaled(const KLPolynomial& o, Int scale, int shift);  // this += scale * q^shift * o

  bool operator==(const KLPolynomial& o) const { return coeffs == o.coeffs; }
  bool operator!=(const KLPolynomial& o) const { return !(*this == o); }
};

Int evaluate_at_one(const KLPolynomial& p);

// Kazhdan-Lusztig polynomials P_{y,x} for the affine Weyl group of one
// simple type, with persistent memoization. The table depends only on the
// Coxeter system, never on p, so one table serves every prime.
//
// Thread safety: all lookups are compute-once; concurrent requests for the
// same key may duplicate work but converge to identical values, and readers
// never observe a partially built polynomial.
class KLTable {
public:
  explicit KLTable(const RootSystem& rs, Int interval_cap = 20000);

  const RootSystem& root_system() const { return *rs_; }
  Int interval_cap() const { return interval_cap_; }
  void set_interval_cap(Int cap) { interval_cap_ = cap; }

  KLPolynomial polynomial(const AffineElement& y, const AffineElement& x);
  // same value computed through a caller-selected left descent of x; used to
  // test descent-choice independence
  KLPolynomial polynomial_via_descent(const AffineElement& y, const AffineElement& x, int descent);

  // coefficient of q^{(l(x)-l(y)-1)/2} in P_{y,x}; zero unless y <= x and
  // the length difference is odd
  Int mu(const AffineElement& y, const AffineElement& x);

  bool leq(const AffineElement& y, const AffineElement& x);
  Int len(const AffineElement& x);
  const std::vector<AffineElement>& interval(const AffineElement& x);

  std::size_t size() const;
  std::string coxeter_label() const { return rs_->type().name() + "~"; }

  // On-disk cache: {"version":1,"coxeter_type":"A1~","entries":[...]}.
  // Loading validates every entry and rejects the whole file on any
  // mismatch; stores are atomic (write to a temp file, then rename).
  void save_json(const std::string& path) const;
  void load_json(const std::string& path);

private:
  const RootSystem* rs_;
  Int interval_cap_;

  mutable std::mutex poly_mu_;
  std::map<std::pair<AffineElement, AffineElement>, KLPolynomial> poly_;
  mutable std::mutex misc_mu_;
  std::map<std::pair<AffineElement, AffineElement>, bool> leq_;
  std::map<AffineElement, Int> len_;
  std::map<AffineElement, std::vector<AffineElement>> intervals_;

  KLPolynomial compute(const AffineElement& y, const AffineElement& x, int descent);
  void validate(const AffineElement& y, const AffineElement& x, const KLPolynomial& p);
};

// every element of the affine Weyl group with length <= max_len
std::vector<AffineElement> length_ball(const RootSystem& rs, Int max_len);

}  // namespace weylfilt
