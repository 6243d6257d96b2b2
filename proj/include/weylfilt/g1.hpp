#pragma once

#include "weylfilt/engine.hpp"

namespace weylfilt {

// ch Z^_1(mu) = e(mu) * prod_{alpha>0} (1 + e(-alpha) + ... + e(-(p-1)alpha));
// total mass p^{#positive roots}, top weight mu with multiplicity 1. mu may
// be any weight.
FormalCharacter baby_verma_char(const RootSystem& rs, const Weight& mu, Int p);

// Decomposition of a G_1T character in the unitriangular basis
// { ch L(sigma_0) e(p nu) : sigma_0 restricted, nu in X(T) }, returned as
// (sigma_0 + p nu, multiplicity) pairs in selection order. Inputs outside
// the (finite) span of the basis raise a DomainError carrying the residual.
std::vector<std::pair<Weight, Int>> decompose_g1t(Engine& eng, const FormalCharacter& c);

// ch Q^_1(lambda_0) by Brauer reciprocity:
//     sum_mu [Z^_1(mu) : L^_1(lambda_0)] ch Z^_1(mu),
// scanned over the finite box of mu that can contain L^_1(lambda_0). The
// computed character must have top weight 2(p-1)rho + w_0 lambda_0 with
// multiplicity 1.
FormalCharacter compute_q1_hat(Engine& eng, const Weight& lambda0);

// ch Q#(lambda) = ch Q^_1(lambda_0) * twist_p(chi(lambda_1)); P# agrees at
// character level.
FormalCharacter q_sharp_char(Engine& eng, const Weight& lambda);
FormalCharacter p_sharp_char(Engine& eng, const Weight& lambda);

// character shadow of nabla_p(mu) <= nabla_red(mu) <= Q#(mu): coefficient-wise
// comparison at every weight. In LCF-assumed mode the first comparison is an
// equality, which is asserted.
bool check_socle_bound(Engine& eng, const Weight& mu);

}  // namespace weylfilt
