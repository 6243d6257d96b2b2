#pragma once

#include "weylfilt/engine.hpp"

namespace weylfilt {

// chi_KL(lambda): with lambda = x . lambda^-, the alternating sum over the
// lower Bruhat interval of x,
//     sum_y (-1)^{l(x)-l(y)} P_{y,x}(1) chi(y . lambda^-),
// restricted to y with y . lambda^- dominant (and, when lambda^- is
// singular, to minimal coset representatives y). Terms come back sorted by
// weight. Requires p >= h.
ChiCombination compute_chi_kl(Engine& eng, const Weight& lambda);

// expansion of a chi-combination through Weyl characters
FormalCharacter expand_chi(Engine& eng, const ChiCombination& chi);

// LCF-assumed irreducible character: ch L(lambda) via the Steinberg
// factorization, with restricted factors given by chi_KL. A negative
// multiplicity in the expansion means the assumed hypothesis broke; that is
// a ConsistencyError, never silently accepted.
FormalCharacter compute_irreducible(Engine& eng, const Weight& lambda);

}  // namespace weylfilt
