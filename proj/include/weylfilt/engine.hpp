#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "weylfilt/formal_character.hpp"
#include "weylfilt/kl.hpp"

namespace weylfilt {

struct EngineConfig {
  Int interval_cap = 20000;        // Bruhat interval size cap
  std::size_t g1_iteration_cap = 1000000;  // backstop for G1T decompositions
};

struct ChiTerm {
  Weight weight;
  Int coeff;
  bool operator==(const ChiTerm& o) const { return weight == o.weight && coeff == o.coeff; }
};
using ChiCombination = std::vector<ChiTerm>;

// One (type, p) session: the root system plus every compute-once cache the
// higher layers share. All cached getters are thread-safe; concurrent
// requests for the same key may duplicate work but return identical values.
class Engine {
public:
  Engine(const CartanType& type, Int p, EngineConfig cfg = {});
  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  const RootSystem& rs() const { return rs_; }
  Int p() const { return p_; }
  const EngineConfig& config() const { return cfg_; }
  KLTable& kl() { return kl_; }

  Int coxeter_number() const { return rs_.coxeter_number(); }
  bool p_at_least_coxeter() const { return p_ >= rs_.coxeter_number(); }
  bool p_ge_2h_minus_2() const { return p_ >= 2 * rs_.coxeter_number() - 2; }

  const FormalCharacter& weyl_character(const Weight& lambda);
  const ChiCombination& chi_kl(const Weight& lambda);
  const FormalCharacter& irreducible_character(const Weight& lambda);
  const FormalCharacter& delta_red_character(const Weight& lambda);
  const FormalCharacter& q1_hat_character(const Weight& lambda0);
  const std::vector<std::pair<Weight, Int>>& baby_verma_constituents(const Weight& mu);

private:
  RootSystem rs_;
  Int p_;
  EngineConfig cfg_;
  KLTable kl_;

  template <typename V>
  struct Cache {
    std::mutex mu;
    std::map<Weight, V> map;
  };
  Cache<FormalCharacter> weyl_;
  Cache<ChiCombination> chi_;
  Cache<FormalCharacter> irred_;
  Cache<FormalCharacter> red_;
  Cache<FormalCharacter> q1_;
  Cache<std::vector<std::pair<Weight, Int>>> verma_;

  template <typename V, typename F>
  const V& get_or_compute(Cache<V>& cache, const Weight& key, F&& compute);
};

}  // namespace weylfilt
