#pragma once

#include "weylfilt/engine.hpp"

namespace weylfilt {

// lambda = lambda_0 + p*lambda_1 with lambda_0 restricted; unique, both
// parts dominant.
std::pair<Weight, Weight> steinberg_decompose(const RootSystem& rs, const Weight& lambda, Int p);

// ch Delta^p(lambda) = ch L(lambda_0) * twist_p(chi(lambda_1))
FormalCharacter ch_delta_p(Engine& eng, const Weight& lambda);

// ch Delta^red(lambda) = expand(chi_KL(lambda_0)) * twist_p(chi(lambda_1)).
// In LCF-assumed mode this equals ch Delta^p(lambda); the equality is
// asserted because the two routes run through different code paths.
FormalCharacter compute_delta_red(Engine& eng, const Weight& lambda);

// character-level alias: ch nabla(lambda_1) = ch Delta(lambda_1)
FormalCharacter ch_nabla_p(Engine& eng, const Weight& lambda);

}  // namespace weylfilt
