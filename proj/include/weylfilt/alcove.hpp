#pragma once

#include <vector>

#include "weylfilt/root_system.hpp"

namespace weylfilt {

// Element of the affine p-Weyl group W_p, stored as the finite part w (its
// matrix on the weight basis) and a translation gamma in the root lattice
// (root-basis coordinates). The dot action is
//     x . lambda = w(lambda + rho) + p*gamma - rho.
// The group law, lengths and Bruhat order do not depend on p: only the dot
// action and the locate map do.
struct AffineElement {
  intmat::Matrix w;
  std::vector<Int> gamma;

  bool operator==(const AffineElement& o) const { return w == o.w && gamma == o.gamma; }
  bool operator!=(const AffineElement& o) const { return !(*this == o); }
  bool operator<(const AffineElement& o) const {
    if (w != o.w) return w < o.w;
    return gamma < o.gamma;
  }
};

AffineElement affine_identity(const RootSystem& rs);

// Wall reflections of the base alcove C^-: indices 0..rank-1 are the simple
// walls <v+rho, alpha_i^vee> = 0 in simple-root order, index rank is the
// affine wall <v+rho, alpha_0^vee> = -p.
int num_generators(const RootSystem& rs);
AffineElement affine_generator(const RootSystem& rs, int i);

AffineElement compose(const RootSystem& rs, const AffineElement& a, const AffineElement& b);
AffineElement inverse(const RootSystem& rs, const AffineElement& a);

Weight dot_action(const RootSystem& rs, const AffineElement& x, const Weight& lambda, Int p);

// k_alpha per positive root for the alcove x.C^-; the base alcove has
// k_alpha = -1 throughout.
std::vector<Int> alcove_coords(const RootSystem& rs, const AffineElement& x);

// number of hyperplanes separating x.C^- from C^-: sum |k_alpha + 1|
Int length(const RootSystem& rs, const AffineElement& x);

bool is_identity(const AffineElement& x);

std::vector<int> left_descents(const RootSystem& rs, const AffineElement& x);

// lexicographically smallest reduced word (canonical form for caching and
// serialization)
std::vector<int> reduced_word(const RootSystem& rs, const AffineElement& x);
AffineElement from_word(const RootSystem& rs, const std::vector<int>& word);

bool bruhat_leq(const RootSystem& rs, const AffineElement& y, const AffineElement& x);

// the Bruhat interval [e, x], enumerated by subword closure of a reduced
// word; throws ResourceError when the interval exceeds cap elements
std::vector<AffineElement> lower_interval(const RootSystem& rs, const AffineElement& x, Int cap);

struct Located {
  AffineElement x;
  Weight lambda_minus;
};

// lambda = x . lambda_minus with lambda_minus in the closure of C^- and x of
// minimal length (minimal coset representative when lambda is singular).
Located locate(const RootSystem& rs, const Weight& lambda, Int p);

// the alcove x.C^- lies in the dominant cone (every regular weight of it is
// dominant)
bool is_dominant_alcove(const RootSystem& rs, const AffineElement& x);

bool in_base_alcove_closure(const RootSystem& rs, const Weight& v, Int p);

// generators fixing v under the dot action (walls of C^- through v)
std::vector<int> stabilizer_generators(const RootSystem& rs, const Weight& v, Int p);
bool is_minimal_coset_representative(const RootSystem& rs, const AffineElement& x,
                                     const std::vector<int>& stab_gens);

bool is_regular(const RootSystem& rs, const Weight& lambda, Int p);
bool is_restricted(const RootSystem& rs, const Weight& lambda, Int p);
bool in_jantzen_region(const RootSystem& rs, const Weight& lambda, Int p);

}  // namespace weylfilt
