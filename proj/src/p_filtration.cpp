#include "weylfilt/p_filtration.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <thread>

#include "weylfilt/alcove.hpp"
#include "weylfilt/modular.hpp"

namespace weylfilt {

FiltrationReport decompose_weyl(Engine& eng, const Weight& lambda) {
  const RootSystem& rs = eng.rs();
  if (!rs.is_dominant(lambda))
    throw DomainError("decompose_weyl: weight " + lambda.to_string() + " is not dominant");
  if (!eng.p_at_least_coxeter())
    throw DomainError("decompose_weyl needs p >= h (p = " + std::to_string(eng.p()) + ", h = " +
                      std::to_string(rs.coxeter_number()) + ")");

  FiltrationReport rep;
  rep.lambda = lambda;
  rep.p = eng.p();
  rep.cartan_type = rs.type();
  rep.regular = is_regular(rs, lambda, eng.p());
  rep.in_jantzen_region = in_jantzen_region(rs, lambda, eng.p());
  rep.p_ge_2h_minus_2 = eng.p_ge_2h_minus_2();

  auto sections = greedy_decompose(eng.weyl_character(lambda),
                                   [&](const Weight& nu) -> const FormalCharacter& {
                                     return eng.delta_red_character(nu);
                                   });
  rep.residual_zero = true;  // greedy_decompose returns only on zero residual
  rep.nonnegative = true;
  for (const auto& [mu, m] : sections) {
    rep.sections.push_back({mu, m});
    if (m < 0) rep.nonnegative = false;
  }
  std::sort(rep.sections.begin(), rep.sections.end(),
            [](const FiltrationSection& a, const FiltrationSection& b) { return b.mu < a.mu; });

  std::set<Weight> used, singular;
  for (const auto& s : rep.sections) {
    auto [mu0, mu1] = steinberg_decompose(rs, s.mu, eng.p());
    used.insert(mu0);
    if (!is_regular(rs, mu0, eng.p())) singular.insert(mu0);
  }
  rep.lcf_weights_used.assign(used.begin(), used.end());
  rep.singular_lcf_weights.assign(singular.begin(), singular.end());

  rep.dimension_identity = verify_dimension_identity(eng, rep);
  return rep;
}

bool verify_dimension_identity(Engine& eng, const FiltrationReport& report) {
  Int lhs = weyl_dimension(eng.rs(), report.lambda);
  Int rhs = 0;
  for (const auto& s : report.sections) rhs += s.multiplicity * eng.delta_red_character(s.mu).mass();
  return lhs == rhs;
}

BatchSummary batch_verify(Engine& eng, Int bound, int jobs) {
  if (!eng.p_at_least_coxeter())
    throw DomainError("batch_verify needs p >= h (p = " + std::to_string(eng.p()) + ", h = " +
                      std::to_string(eng.rs().coxeter_number()) + ")");
  std::vector<Weight> lambdas = dominant_weights_below(eng.rs(), bound);
  BatchSummary sum;
  sum.bound = bound;
  sum.total = static_cast<Int>(lambdas.size());
  sum.entries.resize(lambdas.size());

  auto work = [&](std::size_t i) {
    BatchEntry& entry = sum.entries[i];
    entry.lambda = lambdas[i];
    try {
      entry.report = decompose_weyl(eng, lambdas[i]);
    } catch (const Error& e) {
      entry.error_kind = e.kind();
      entry.error_message = e.what();
    }
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < lambdas.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    int n = std::min<int>(jobs, 64);
    for (int t = 0; t < n; ++t)
      pool.emplace_back([&] {
        for (;;) {
          std::size_t i = next.fetch_add(1);
          if (i >= lambdas.size()) return;
          work(i);
        }
      });
    for (auto& t : pool) t.join();
  }

  for (const BatchEntry& e : sum.entries) {
    if (!e.report) {
      ++sum.error_count;
      continue;
    }
    const FiltrationReport& r = *e.report;
    if (r.nonnegative) ++sum.nonnegative_count;
    if (r.residual_zero) ++sum.residual_zero_count;
    if (r.dimension_identity) ++sum.dimension_identity_count;
    if (r.regular) ++sum.regular_count;
    if (r.in_jantzen_region) ++sum.jantzen_count;
    if (!r.singular_lcf_weights.empty()) ++sum.singular_lcf_count;
  }
  return sum;
}

}  // namespace weylfilt
