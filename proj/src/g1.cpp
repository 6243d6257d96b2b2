#include "weylfilt/g1.hpp"

#include <algorithm>
#include <functional>

#include "weylfilt/alcove.hpp"
#include "weylfilt/modular.hpp"

namespace weylfilt {

FormalCharacter baby_verma_char(const RootSystem& rs, const Weight& mu, Int p) {
  if (p < 2) throw DomainError("baby_verma_char needs p >= 2");
  FormalCharacter out = FormalCharacter::monomial(rs, mu);
  for (const Root& alpha : rs.positive_roots()) {
    Weight step = Weight(alpha.weight_coords);
    FormalCharacter factor(rs);
    Weight w = Weight::zero(rs.rank());
    for (Int k = 0; k < p; ++k) {
      factor.add_term(w, 1);
      w -= step;
    }
    out = tensor(out, factor);
  }
  return out;
}

std::vector<std::pair<Weight, Int>> decompose_g1t(Engine& eng, const FormalCharacter& c) {
  const RootSystem& rs = eng.rs();
  const Int p = eng.p();

  // coordinate floor: for a genuine G_1T character, the lowest weight
  // w_0 sigma_0 + p sigma_1 of every constituent is itself a weight of the
  // input, and sigma exceeds it by at most 2(p-1) per coordinate; a selected
  // top below that proves the input is outside the basis span
  std::vector<Int> floor(rs.rank(), 0);
  if (!c.is_zero()) {
    bool first = true;
    for (const auto& [w, m] : c.terms()) {
      for (int i = 0; i < rs.rank(); ++i)
        floor[i] = first ? w[i] : std::min(floor[i], w[i]);
      first = false;
    }
  }

  FormalCharacter residual = c;
  std::vector<std::pair<Weight, Int>> out;
  std::size_t iterations = 0;
  while (!residual.is_zero()) {
    if (++iterations > eng.config().g1_iteration_cap)
      throw ResourceError("decompose_g1t exceeded the iteration cap of " +
                          std::to_string(eng.config().g1_iteration_cap));
    std::vector<Weight> support;
    support.reserve(residual.terms().size());
    for (const auto& [w, m] : residual.terms()) support.push_back(w);
    std::vector<Weight> maxima = maximal_weights(rs, support);
    Weight sigma = maxima.front();
    for (const Weight& m : maxima)
      if (sigma < m) sigma = m;
    for (int i = 0; i < rs.rank(); ++i)
      if (sigma[i] < floor[i])
        throw DomainError("decompose_g1t: input is not in the span of the G_1T basis; residual:\n" +
                          residual.to_text());
    // sigma = sigma_0 + p sigma_1 with sigma_0 restricted, sigma_1 arbitrary
    Weight s0 = Weight::zero(rs.rank()), s1 = Weight::zero(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) {
      Int r = sigma[i] % p;
      if (r < 0) r += p;
      s0[i] = r;
      s1[i] = (sigma[i] - r) / p;
    }
    Int m = residual.mult(sigma);
    FormalCharacter basis = eng.irreducible_character(s0).shifted(p * s1);
    if (basis.mult(sigma) != 1)
      throw ConsistencyError("decompose_g1t: basis character at " + sigma.to_string() +
                             " does not have top coefficient 1");
    residual -= m * basis;
    out.emplace_back(sigma, m);
  }
  return out;
}

FormalCharacter compute_q1_hat(Engine& eng, const Weight& lambda0) {
  const RootSystem& rs = eng.rs();
  const Int p = eng.p();
  if (!is_restricted(rs, lambda0, p))
    throw DomainError("q1_hat: weight " + lambda0.to_string() + " is not restricted for p = " + std::to_string(p));

  // Any mu with [Z^_1(mu) : L^_1(lambda_0)] != 0 satisfies
  // mu = lambda_0 + sum_j c_j alpha_j with 0 <= c_j <= (p-1) * (2rho)_j,
  // since lambda_0 must lie in the support of ch Z^_1(mu).
  std::vector<Int> radius(rs.rank(), 0);
  for (const Root& alpha : rs.positive_roots())
    for (int j = 0; j < rs.rank(); ++j) radius[j] += (p - 1) * alpha.root_coords[j];

  FormalCharacter out(rs);
  std::vector<Int> cur(rs.rank(), 0);
  std::function<void(int)> scan = [&](int j) {
    if (j == rs.rank()) {
      Weight mu = lambda0 + rs.from_root_coords(cur);
      const auto& constituents = eng.baby_verma_constituents(mu);
      for (const auto& [sigma, mult] : constituents) {
        if (sigma != lambda0) continue;
        if (mult < 0)
          throw ConsistencyError("negative baby Verma composition multiplicity at " + mu.to_string());
        if (mult != 0) out += mult * baby_verma_char(rs, mu, p);
      }
      return;
    }
    for (cur[j] = 0; cur[j] <= radius[j]; ++cur[j]) scan(j + 1);
    cur[j] = 0;
  };
  scan(0);

  Weight top = 2 * (p - 1) * rs.rho() + rs.apply_w0(lambda0);
  if (out.mult(top) != 1)
    throw ConsistencyError("ch Q^_1(" + lambda0.to_string() + ") top weight check failed: expected multiplicity 1 at " +
                           top.to_string());
  for (const auto& [w, m] : out.terms())
    if (!rs.dominance_leq(w, top))
      throw ConsistencyError("ch Q^_1(" + lambda0.to_string() + ") has support above its top weight");
  return out;
}

FormalCharacter q_sharp_char(Engine& eng, const Weight& lambda) {
  auto [l0, l1] = steinberg_decompose(eng.rs(), lambda, eng.p());
  FormalCharacter out = eng.q1_hat_character(l0);
  bool l1_zero = true;
  for (Int c : l1.coords)
    if (c != 0) l1_zero = false;
  if (!l1_zero) out = tensor(out, eng.weyl_character(l1).frobenius_twist(eng.p()));
  return out;
}

FormalCharacter p_sharp_char(Engine& eng, const Weight& lambda) { return q_sharp_char(eng, lambda); }

bool check_socle_bound(Engine& eng, const Weight& mu) {
  if (!eng.rs().is_dominant(mu)) throw DomainError("check_socle_bound: weight " + mu.to_string() + " is not dominant");
  FormalCharacter nabla_p = ch_nabla_p(eng, mu);
  const FormalCharacter& nabla_red = eng.delta_red_character(mu);
  if (nabla_p != nabla_red)
    throw ConsistencyError("ch nabla_p != ch nabla_red at " + mu.to_string() + " in LCF-assumed mode");
  FormalCharacter q = q_sharp_char(eng, mu);
  return nabla_p.dominated_by(nabla_red) && nabla_red.dominated_by(q);
}

}  // namespace weylfilt
