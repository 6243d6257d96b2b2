#include "weylfilt/lcf.hpp"

#include <algorithm>

#include "weylfilt/alcove.hpp"

namespace weylfilt {

ChiCombination compute_chi_kl(Engine& eng, const Weight& lambda) {
  const RootSystem& rs = eng.rs();
  if (!rs.is_dominant(lambda)) throw DomainError("chi_kl: weight " + lambda.to_string() + " is not dominant");
  if (!eng.p_at_least_coxeter())
    throw DomainError("chi_kl needs p >= h (p = " + std::to_string(eng.p()) + ", h = " +
                      std::to_string(rs.coxeter_number()) + ")");
  Int p = eng.p();
  Located loc = locate(rs, lambda, p);
  Int lx = eng.kl().len(loc.x);

  // Sum over all y <= x whose alcove y.C^- is dominant (the regular-weight
  // condition, which is what survives Jantzen translation onto the facet of
  // lambda^-). For y in the same stabilizer coset the weights y.lambda^-
  // coincide and their signed contributions aggregate; chi of a rho-singular
  // weight (some coordinate equal to -1) vanishes. For regular lambda this
  // is exactly the sum over y with y.lambda^- dominant.
  std::map<Weight, Int> acc;
  for (const AffineElement& y : eng.kl().interval(loc.x)) {
    if (!is_dominant_alcove(rs, y)) continue;
    Weight w = dot_action(rs, y, loc.lambda_minus, p);
    bool chi_zero = false;
    for (Int c : w.coords) {
      if (c == -1) chi_zero = true;
      if (c < -1) throw ConsistencyError("chi_kl: weight below the dominant closure in a dominant alcove");
    }
    if (chi_zero) continue;
    Int sign = (lx - eng.kl().len(y)) % 2 == 0 ? 1 : -1;
    acc[w] += sign * evaluate_at_one(eng.kl().polynomial(y, loc.x));
  }

  ChiCombination out;
  for (const auto& [w, c] : acc)
    if (c != 0) out.push_back({w, c});
  bool top_seen = false;
  for (const ChiTerm& t : out)
    if (t.weight == lambda && t.coeff == 1) top_seen = true;
  if (!top_seen) throw ConsistencyError("chi_kl: leading term (lambda, 1) missing for " + lambda.to_string());
  return out;
}

FormalCharacter expand_chi(Engine& eng, const ChiCombination& chi) {
  FormalCharacter out(eng.rs());
  for (const ChiTerm& t : chi) out += t.coeff * eng.weyl_character(t.weight);
  return out;
}

FormalCharacter compute_irreducible(Engine& eng, const Weight& lambda) {
  const RootSystem& rs = eng.rs();
  if (!rs.is_dominant(lambda))
    throw DomainError("irreducible character: weight " + lambda.to_string() + " is not dominant");
  Int p = eng.p();
  Weight l0 = lambda, l1 = lambda;
  for (int i = 0; i < rs.rank(); ++i) {
    l0[i] = lambda[i] % p;
    l1[i] = lambda[i] / p;
  }
  FormalCharacter restricted_part = expand_chi(eng, eng.chi_kl(l0));
  for (const auto& [w, m] : restricted_part.terms())
    if (m < 0)
      throw ConsistencyError("irreducible character of " + lambda.to_string() +
                             ": chi_KL expansion of restricted part " + l0.to_string() +
                             " has negative multiplicity " + std::to_string(m) + " at weight " + w.to_string());
  bool l1_zero = true;
  for (Int c : l1.coords)
    if (c != 0) l1_zero = false;
  if (l1_zero) return restricted_part;
  FormalCharacter out = tensor(restricted_part, eng.irreducible_character(l1).frobenius_twist(p));
  for (const auto& [w, m] : out.terms())
    if (m < 0)
      throw ConsistencyError("irreducible character of " + lambda.to_string() + ": negative multiplicity " +
                             std::to_string(m) + " at weight " + w.to_string());
  return out;
}

}  // namespace weylfilt
