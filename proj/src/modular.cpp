#include "weylfilt/modular.hpp"

#include "weylfilt/lcf.hpp"

namespace weylfilt {

std::pair<Weight, Weight> steinberg_decompose(const RootSystem& rs, const Weight& lambda, Int p) {
  if (!rs.is_dominant(lambda))
    throw DomainError("steinberg_decompose: weight " + lambda.to_string() + " is not dominant");
  Weight l0 = Weight::zero(rs.rank()), l1 = Weight::zero(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) {
    l0[i] = lambda[i] % p;
    l1[i] = lambda[i] / p;
  }
  return {l0, l1};
}

FormalCharacter ch_delta_p(Engine& eng, const Weight& lambda) {
  auto [l0, l1] = steinberg_decompose(eng.rs(), lambda, eng.p());
  FormalCharacter out = eng.irreducible_character(l0);
  bool l1_zero = true;
  for (Int c : l1.coords)
    if (c != 0) l1_zero = false;
  if (!l1_zero) out = tensor(out, eng.weyl_character(l1).frobenius_twist(eng.p()));
  if (out.mult(lambda) != 1)
    throw ConsistencyError("ch Delta^p(" + lambda.to_string() + ") does not have top coefficient 1");
  return out;
}

FormalCharacter compute_delta_red(Engine& eng, const Weight& lambda) {
  auto [l0, l1] = steinberg_decompose(eng.rs(), lambda, eng.p());
  FormalCharacter out = expand_chi(eng, eng.chi_kl(l0));
  bool l1_zero = true;
  for (Int c : l1.coords)
    if (c != 0) l1_zero = false;
  if (!l1_zero) out = tensor(out, eng.weyl_character(l1).frobenius_twist(eng.p()));
  if (out.mult(lambda) != 1)
    throw ConsistencyError("ch Delta^red(" + lambda.to_string() + ") does not have top coefficient 1");
  if (out != ch_delta_p(eng, lambda))
    throw ConsistencyError("ch Delta^red and ch Delta^p disagree at " + lambda.to_string() +
                           " in LCF-assumed mode");
  return out;
}

FormalCharacter ch_nabla_p(Engine& eng, const Weight& lambda) { return ch_delta_p(eng, lambda); }

}  // namespace weylfilt
