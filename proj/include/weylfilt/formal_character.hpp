#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weylfilt/root_system.hpp"

namespace weylfilt {

// Element of the formal character ring Z[X(T)]: a finite association from
// weights to non-zero integer multiplicities. Virtual characters (negative
// entries) are allowed. Terms are kept in a sorted map so equality is
// structural and serialization is canonical.
class FormalCharacter {
public:
  explicit FormalCharacter(const RootSystem& rs) : rs_(&rs) {}

  static FormalCharacter monomial(const RootSystem& rs, const Weight& w, Int mult = 1);

  const RootSystem& root_system() const { return *rs_; }
  const std::map<Weight, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Int mult(const Weight& w) const;
  Int mass() const;  // sum of multiplicities

  void add_term(const Weight& w, Int m);

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  FormalCharacter& operator*=(Int k);

  bool operator==(const FormalCharacter& o) const { return terms_ == o.terms_; }
  bool operator!=(const FormalCharacter& o) const { return !(*this == o); }

  // mult_out(p*mu) = mult_in(mu)
  FormalCharacter frobenius_twist(Int p) const;

  // e(shift) * this
  FormalCharacter shifted(const Weight& shift) const;

  // coefficient-wise comparison: every multiplicity of *this <= that of o
  bool dominated_by(const FormalCharacter& o) const;

  // stable text form: one "coords:multiplicity" entry per line, weights in
  // ascending lexicographic order
  std::string to_text() const;

private:
  const RootSystem* rs_;
  std::map<Weight, Int> terms_;

  void check_same_system(const FormalCharacter& o) const;
};

FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b);
FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b);
FormalCharacter operator*(Int k, FormalCharacter a);
// convolution: mult(nu) = sum_mu a(mu) * b(nu - mu)
FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);

// dim Delta(lambda) by the Weyl dimension formula, evaluated exactly.
Int weyl_dimension(const RootSystem& rs, const Weight& lambda);

// ch Delta(lambda) with exact weight multiplicities via Freudenthal's
// recursion over the saturated weight set of lambda.
FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda);

// Dominance-maximal weights of a finite weight set (any weights, not only
// dominant ones).
std::vector<Weight> maximal_weights(const RootSystem& rs, const std::vector<Weight>& support);

using BasisFn = std::function<const FormalCharacter&(const Weight&)>;

// Unitriangular greedy decomposition of a W-invariant (virtual) character
// against a basis { basis(nu) = e(nu) + lower terms : nu dominant }.
// Returns (nu, multiplicity) pairs in selection order. A residual whose
// maximal weight is non-dominant raises a DomainError carrying the residual.
std::vector<std::pair<Weight, Int>> greedy_decompose(const FormalCharacter& c, const BasisFn& basis);

}  // namespace weylfilt
