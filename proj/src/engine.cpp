#include "weylfilt/engine.hpp"

#include "weylfilt/g1.hpp"
#include "weylfilt/lcf.hpp"
#include "weylfilt/modular.hpp"

namespace weylfilt {

Engine::Engine(const CartanType& type, Int p, EngineConfig cfg)
    : rs_(RootSystem::build(type)), p_(p), cfg_(cfg), kl_(rs_, cfg.interval_cap) {
  if (p < 2) throw DomainError("p must be at least 2, got " + std::to_string(p));
}

template <typename V, typename F>
const V& Engine::get_or_compute(Cache<V>& cache, const Weight& key, F&& compute) {
  {
    std::lock_guard<std::mutex> lock(cache.mu);
    auto it = cache.map.find(key);
    if (it != cache.map.end()) return it->second;
  }
  V value = compute();  // computed outside the lock; first insert wins
  std::lock_guard<std::mutex> lock(cache.mu);
  return cache.map.emplace(key, std::move(value)).first->second;
}

const FormalCharacter& Engine::weyl_character(const Weight& lambda) {
  return get_or_compute(weyl_, lambda, [&] { return weylfilt::weyl_character(rs_, lambda); });
}

const ChiCombination& Engine::chi_kl(const Weight& lambda) {
  return get_or_compute(chi_, lambda, [&] { return compute_chi_kl(*this, lambda); });
}

const FormalCharacter& Engine::irreducible_character(const Weight& lambda) {
  return get_or_compute(irred_, lambda, [&] { return compute_irreducible(*this, lambda); });
}

const FormalCharacter& Engine::delta_red_character(const Weight& lambda) {
  return get_or_compute(red_, lambda, [&] { return compute_delta_red(*this, lambda); });
}

const FormalCharacter& Engine::q1_hat_character(const Weight& lambda0) {
  return get_or_compute(q1_, lambda0, [&] { return compute_q1_hat(*this, lambda0); });
}

const std::vector<std::pair<Weight, Int>>& Engine::baby_verma_constituents(const Weight& mu) {
  return get_or_compute(verma_, mu, [&] { return decompose_g1t(*this, baby_verma_char(rs_, mu, p_)); });
}

}  // namespace weylfilt
