#pragma once

#include <optional>
#include <string>

#include "weylfilt/engine.hpp"

namespace weylfilt {

struct FiltrationSection {
  Weight mu;
  Int multiplicity;
  bool operator==(const FiltrationSection& o) const { return mu == o.mu && multiplicity == o.multiplicity; }
};

// Result of decomposing ch Delta(lambda) against the Delta^red basis,
// together with the verification flags the filtration theorems predict.
struct FiltrationReport {
  Weight lambda;
  Int p = 0;
  CartanType cartan_type;
  std::vector<FiltrationSection> sections;  // descending lexicographic in mu
  bool nonnegative = false;
  bool residual_zero = false;
  bool dimension_identity = false;
  bool regular = false;
  bool in_jantzen_region = false;
  bool p_ge_2h_minus_2 = false;
  std::vector<Weight> lcf_weights_used;      // restricted weights where chi_KL was invoked
  std::vector<Weight> singular_lcf_weights;  // the singular ones among those
};

// Greedy decomposition of ch Delta(lambda) in the Delta^red basis; the basis
// is complete by unitriangularity, so the residual always vanishes. A
// negative multiplicity is reported, never suppressed.
FiltrationReport decompose_weyl(Engine& eng, const Weight& lambda);

// Exact recomputation of dim Delta(lambda) via the Weyl dimension formula
// against the mass sum of the sections.
bool verify_dimension_identity(Engine& eng, const FiltrationReport& report);

struct BatchEntry {
  Weight lambda;
  std::optional<FiltrationReport> report;
  ErrorKind error_kind = ErrorKind::domain;  // meaningful only when !report
  std::string error_message;                 // empty when report is present
};

struct BatchSummary {
  Int bound = 0;
  Int total = 0;
  Int nonnegative_count = 0;
  Int residual_zero_count = 0;
  Int dimension_identity_count = 0;
  Int regular_count = 0;
  Int jantzen_count = 0;
  Int singular_lcf_count = 0;  // reports that flagged at least one singular chi_KL weight
  Int error_count = 0;
  std::vector<BatchEntry> entries;  // ascending lexicographic in lambda
};

// decompose_weyl for every dominant lambda with <lambda+rho, alpha0^vee> <=
// bound. Per-lambda errors are recorded in the summary without aborting the
// batch. jobs > 1 evaluates distinct lambda concurrently; the merged result
// is deterministic either way.
BatchSummary batch_verify(Engine& eng, Int bound, int jobs = 1);

}  // namespace weylfilt
