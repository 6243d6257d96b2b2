// Acceptance suite: every criterion is exact-arithmetic; the stated runtime
// ceilings are enforced. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <vector>

#include "oracle_sl2.hpp"
#include "weylfilt/alcove.hpp"
#include "weylfilt/g1.hpp"
#include "weylfilt/lcf.hpp"
#include "weylfilt/modular.hpp"
#include "weylfilt/p_filtration.hpp"

using namespace weylfilt;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  int id;
  const char* label;
  double time_limit_s;  // 0 = unlimited
  std::function<bool(std::string&)> body;
};

bool fail(std::string& why, const std::string& msg) {
  why = msg;
  return false;
}

// 1. SL2 oracle equivalence: A1, p in {3,5}, coordinates <= 30, exact match
//    against the closed-form oracle. Runtime < 5 s.
bool criterion1(std::string& why) {
  for (Int p : {3, 5}) {
    Engine eng(CartanType::parse("A1"), p);
    for (Int n = 0; n <= 30; ++n) {
      FiltrationReport rep = decompose_weyl(eng, Weight({n}));
      auto expect = sl2_oracle::sections(n, p);
      if (rep.sections.size() != expect.size())
        return fail(why, "section count mismatch at lambda=" + std::to_string(n) + " p=" + std::to_string(p));
      std::map<Int, Int> got, want;
      for (const auto& s : rep.sections) got[s.mu[0]] = s.multiplicity;
      for (const auto& [w, m] : expect) want[w] = m;
      if (got != want)
        return fail(why, "section mismatch at lambda=" + std::to_string(n) + " p=" + std::to_string(p));
      if (!rep.nonnegative || !rep.residual_zero)
        return fail(why, "flag failure at lambda=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  }
  return true;
}

std::vector<FiltrationReport> g_reports;  // shared by criteria 1-3

// 2. Non-negativity: A2, p=5, every dominant lambda with
//    <lambda+rho, alpha0^vee> <= 20 has nonnegative = residual_zero = true.
//    Runtime < 60 s.
bool criterion2(std::string& why) {
  Engine eng(CartanType::parse("A2"), 5);
  BatchSummary s = batch_verify(eng, 20, 1);
  if (s.total == 0) return fail(why, "empty batch");
  if (s.error_count != 0) return fail(why, "batch produced errors");
  if (s.nonnegative_count != s.total)
    return fail(why, std::to_string(s.total - s.nonnegative_count) + " weights with negative multiplicities");
  if (s.residual_zero_count != s.total) return fail(why, "nonzero residual encountered");
  for (const auto& e : s.entries) g_reports.push_back(*e.report);
  return true;
}

// 3. Dimension identity for every report produced by criteria 1 and 2.
bool criterion3(std::string& why) {
  for (Int p : {3, 5}) {
    Engine eng(CartanType::parse("A1"), p);
    for (Int n = 0; n <= 30; ++n) {
      FiltrationReport rep = decompose_weyl(eng, Weight({n}));
      if (!verify_dimension_identity(eng, rep))
        return fail(why, "A1 p=" + std::to_string(p) + " lambda=" + std::to_string(n));
    }
  }
  Engine a2(CartanType::parse("A2"), 5);
  if (g_reports.empty()) return fail(why, "criterion 2 reports unavailable");
  for (const FiltrationReport& rep : g_reports)
    if (!verify_dimension_identity(a2, rep)) return fail(why, "A2 p=5 lambda=" + rep.lambda.to_string());
  return true;
}

// 4. KL sanity: affine A1 trivial up to length 12; affine A2 invariants and
//    descent independence up to length 8. Runtime < 30 s.
bool criterion4(std::string& why) {
  RootSystem a1 = RootSystem::build(CartanType::parse("A1"));
  KLTable kl1(a1);
  auto ball1 = length_ball(a1, 12);
  for (const AffineElement& x : ball1)
    for (const AffineElement& y : ball1) {
      if (!kl1.leq(y, x)) continue;
      if (kl1.polynomial(y, x) != KLPolynomial::one())
        return fail(why, "nontrivial affine A1 polynomial at lengths " + std::to_string(kl1.len(y)) + "," +
                             std::to_string(kl1.len(x)));
    }

  RootSystem a2 = RootSystem::build(CartanType::parse("A2"));
  KLTable kl2(a2);
  for (const AffineElement& x : length_ball(a2, 8)) {
    auto descents = left_descents(a2, x);
    for (const AffineElement& y : kl2.interval(x)) {
      KLPolynomial p = kl2.polynomial(y, x);
      if (p.is_zero() || p.coeffs[0] != 1) return fail(why, "constant term violation in affine A2");
      if (y != x && 2 * p.degree() > kl2.len(x) - kl2.len(y) - 1)
        return fail(why, "degree bound violation in affine A2");
      for (int s : descents)
        if (kl2.polynomial_via_descent(y, x, s) != p) return fail(why, "descent dependence in affine A2");
    }
  }
  return true;
}

// 5. Character engine exactness: A1, A2, B2, G2 up to
//    <lambda+rho, alpha0^vee> <= 30: Freudenthal mass equals the Weyl
//    dimension formula and characters are W-invariant.
bool criterion5(std::string& why) {
  for (const auto& name : {"A1", "A2", "B2", "G2"}) {
    RootSystem rs = RootSystem::build(CartanType::parse(name));
    for (const Weight& lambda : dominant_weights_below(rs, 30)) {
      FormalCharacter c = weyl_character(rs, lambda);
      if (c.mass() != weyl_dimension(rs, lambda))
        return fail(why, std::string(name) + " mass mismatch at " + lambda.to_string());
      for (int i = 0; i < rs.rank(); ++i)
        for (const auto& [w, m] : c.terms())
          if (c.mult(rs.simple_reflection(i, w)) != m)
            return fail(why, std::string(name) + " not W-invariant at " + lambda.to_string());
    }
  }
  return true;
}

// 6. Reciprocity mass identity: sum over restricted weights of
//    dim L * mass Q^_1 equals p^{dim g}.
bool criterion6(std::string& why) {
  struct Row {
    const char* name;
    Int p;
    Int expect;
  };
  for (const Row& row : {Row{"A1", 3, 27}, Row{"A1", 5, 125}, Row{"A2", 5, 390625}}) {
    Engine eng(CartanType::parse(row.name), row.p);
    Int total = 0;
    for (const Weight& l0 : restricted_weights(eng.rs(), row.p))
      total += eng.irreducible_character(l0).mass() * eng.q1_hat_character(l0).mass();
    if (total != row.expect)
      return fail(why, std::string(row.name) + " p=" + std::to_string(row.p) + ": got " + std::to_string(total) +
                           ", want " + std::to_string(row.expect));
  }
  return true;
}

// 7. Socle-bound shadow for every restricted weight at (A1, p in {3,5}) and
//    (A2, p=5).
bool criterion7(std::string& why) {
  struct Row {
    const char* name;
    Int p;
  };
  for (const Row& row : {Row{"A1", 3}, Row{"A1", 5}, Row{"A2", 5}}) {
    Engine eng(CartanType::parse(row.name), row.p);
    for (const Weight& mu : restricted_weights(eng.rs(), row.p))
      if (!check_socle_bound(eng, mu))
        return fail(why, std::string(row.name) + " p=" + std::to_string(row.p) + " mu=" + mu.to_string());
  }
  return true;
}

// 8. Decomposition-number consistency over the criterion-2 range:
//    sum [Delta(lambda):L(mu)] dim L(mu) = dim Delta(lambda), exact.
bool criterion8(std::string& why) {
  Engine eng(CartanType::parse("A2"), 5);
  for (const Weight& lambda : dominant_weights_below(eng.rs(), 20)) {
    auto decomposition = greedy_decompose(
        eng.weyl_character(lambda),
        [&](const Weight& nu) -> const FormalCharacter& { return eng.irreducible_character(nu); });
    Int total = 0;
    for (const auto& [mu, mult] : decomposition) {
      if (mult < 0) return fail(why, "negative composition multiplicity at " + lambda.to_string());
      total += mult * eng.irreducible_character(mu).mass();
    }
    if (total != weyl_dimension(eng.rs(), lambda)) return fail(why, "dimension mismatch at " + lambda.to_string());
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "SL2 oracle equivalence (A1, p in {3,5}, coordinate <= 30, exact)", 5.0, criterion1},
      {2, "non-negativity of Delta^red decompositions (A2, p=5, Jantzen bound 20)", 60.0, criterion2},
      {3, "dimension identity for every report of criteria 1-2", 0.0, criterion3},
      {4, "KL sanity (affine A1 <= 12 trivial; affine A2 <= 8 invariants + descent independence)", 30.0,
       criterion4},
      {5, "Freudenthal mass = Weyl dimension and W-invariance (A1, A2, B2, G2, bound 30)", 0.0, criterion5},
      {6, "Brauer reciprocity mass identity (27, 125, 5^8)", 0.0, criterion6},
      {7, "socle-bound shadow for all restricted weights (A1 p=3,5; A2 p=5)", 0.0, criterion7},
      {8, "decomposition-number consistency (A2, p=5, bound 20)", 0.0, criterion8},
  };

  bool all_pass = true;
  for (const Criterion& c : criteria) {
    auto t0 = Clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = c.body(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    if (ok && c.time_limit_s > 0 && secs > c.time_limit_s) {
      ok = false;
      why = "runtime " + std::to_string(secs) + "s exceeds limit of " + std::to_string(c.time_limit_s) + "s";
    }
    std::printf("%s criterion %d: %s [%.2fs]%s%s\n", ok ? "PASS" : "FAIL", c.id, c.label, secs,
                ok ? "" : " -- ", ok ? "" : why.c_str());
    std::fflush(stdout);
    if (!ok) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
