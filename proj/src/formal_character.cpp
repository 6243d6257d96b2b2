#include "weylfilt/formal_character.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace weylfilt {

FormalCharacter FormalCharacter::monomial(const RootSystem& rs, const Weight& w, Int mult) {
  FormalCharacter c(rs);
  c.add_term(w, mult);
  return c;
}

Int FormalCharacter::mult(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

Int FormalCharacter::mass() const {
  Int s = 0;
  for (const auto& [w, m] : terms_) s += m;
  return s;
}

void FormalCharacter::add_term(const Weight& w, Int m) {
  if (m == 0) return;
  auto [it, inserted] = terms_.emplace(w, m);
  if (!inserted) {
    it->second += m;
    if (it->second == 0) terms_.erase(it);
  }
}

void FormalCharacter::check_same_system(const FormalCharacter& o) const {
  if (!(rs_->type() == o.rs_->type()))
    throw DomainError("root system mismatch: " + rs_->type().name() + " vs " + o.rs_->type().name());
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  check_same_system(o);
  for (const auto& [w, m] : o.terms_) add_term(w, m);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  check_same_system(o);
  for (const auto& [w, m] : o.terms_) add_term(w, -m);
  return *this;
}

FormalCharacter& FormalCharacter::operator*=(Int k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, m] : terms_) m *= k;
  return *this;
}

FormalCharacter FormalCharacter::frobenius_twist(Int p) const {
  if (p < 2) throw DomainError("frobenius twist needs p >= 2");
  FormalCharacter out(*rs_);
  for (const auto& [w, m] : terms_) out.terms_.emplace(p * w, m);
  return out;
}

FormalCharacter FormalCharacter::shifted(const Weight& shift) const {
  FormalCharacter out(*rs_);
  for (const auto& [w, m] : terms_) out.terms_.emplace(w + shift, m);
  return out;
}

bool FormalCharacter::dominated_by(const FormalCharacter& o) const {
  for (const auto& [w, m] : terms_)
    if (m > o.mult(w)) return false;
  return true;
}

std::string FormalCharacter::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, m] : terms_) {
    if (!first) out << '\n';
    first = false;
    out << w.to_string() << ':' << m;
  }
  return out.str();
}

FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { a += b; return a; }
FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { a -= b; return a; }
FormalCharacter operator*(Int k, FormalCharacter a) { a *= k; return a; }

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.root_system().type() == b.root_system().type()))
    throw DomainError("root system mismatch in tensor product");
  FormalCharacter out(a.root_system());
  for (const auto& [wa, ma] : a.terms())
    for (const auto& [wb, mb] : b.terms()) out.add_term(wa + wb, ma * mb);
  return out;
}

Int weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw DomainError("weyl_dimension: weight " + lambda.to_string() + " is not dominant");
  Weight lr = lambda + rs.rho();
  // exact product of <lambda+rho, a^vee> / <rho, a^vee>, reducing as we go
  Int num = 1, den = 1;
  for (int i = 0; i < rs.num_positive_roots(); ++i) {
    num *= rs.pair(lr, i);
    den *= rs.pair(rs.rho(), i);
    Int g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw ConsistencyError("weyl_dimension: non-integral result");
  return num;
}

FormalCharacter weyl_character(const RootSystem& rs, const Weight& lambda) {
  if (!rs.is_dominant(lambda)) throw DomainError("weyl_character: weight " + lambda.to_string() + " is not dominant");
  const int n = rs.rank();
  const Int det = rs.cartan_det();

  // dominant candidates: mu dominant with lambda - mu in Q+
  std::vector<Weight> dominant;
  {
    Int box = rs.pair(lambda, rs.highest_short_root_index());
    std::vector<Int> cur(n, 0);
    std::function<void(int)> scan = [&](int i) {
      if (i == n) {
        Weight mu(cur);
        if (rs.dominance_leq(mu, lambda)) dominant.push_back(mu);
        return;
      }
      for (Int v = 0; v <= box; ++v) {
        cur[i] = v;
        scan(i + 1);
      }
      cur[i] = 0;
    };
    scan(0);
  }
  // process in a linear extension of descending dominance
  std::sort(dominant.begin(), dominant.end(), [&](const Weight& a, const Weight& b) {
    Int ka = rs.height_key(a), kb = rs.height_key(b);
    if (ka != kb) return ka > kb;
    return a < b;
  });

  std::map<Weight, Int> mult;  // at dominant weights
  const Weight lr = lambda + rs.rho();
  const Int norm_top = rs.form_scaled(lr, lr);
  for (const Weight& mu : dominant) {
    if (mu == lambda) {
      mult[mu] = 1;
      continue;
    }
    // Freudenthal, scaled by det: every quantity below is det * (..)
    Int rhs = 0;
    for (int r = 0; r < rs.num_positive_roots(); ++r) {
      const Root& alpha = rs.positive_roots()[r];
      Weight step = Weight(alpha.weight_coords);
      Weight nu = mu;
      for (Int k = 1;; ++k) {
        nu += step;
        auto it = mult.find(rs.dominant_representative(nu));
        if (it == mult.end()) break;  // weight strings are unbroken
        rhs += it->second * rs.pair(nu, r) * alpha.length2 * det;
      }
    }
    Weight mr = mu + rs.rho();
    Int lhs = norm_top - rs.form_scaled(mr, mr);
    if (lhs <= 0) throw ConsistencyError("Freudenthal: non-positive norm gap");
    if ((2 * rhs) % lhs != 0) throw ConsistencyError("Freudenthal: non-integral multiplicity");
    mult[mu] = 2 * rhs / lhs;
  }

  FormalCharacter out(rs);
  for (const auto& [mu, m] : mult)
    for (const Weight& w : rs.weyl_orbit(mu)) out.add_term(w, m);
  return out;
}

std::vector<Weight> maximal_weights(const RootSystem& rs, const std::vector<Weight>& support) {
  // sort by descending height key: anything dominating w precedes it
  std::vector<Weight> sorted = support;
  std::sort(sorted.begin(), sorted.end(), [&](const Weight& a, const Weight& b) {
    Int ka = rs.height_key(a), kb = rs.height_key(b);
    if (ka != kb) return ka > kb;
    return a < b;
  });
  std::vector<Weight> maxima;
  for (const Weight& w : sorted) {
    bool dominated = false;
    for (const Weight& m : maxima)
      if (rs.dominance_leq(w, m)) {
        dominated = true;
        break;
      }
    if (!dominated) maxima.push_back(w);
  }
  return maxima;
}

std::vector<std::pair<Weight, Int>> greedy_decompose(const FormalCharacter& c, const BasisFn& basis) {
  const RootSystem& rs = c.root_system();
  FormalCharacter residual = c;
  std::vector<std::pair<Weight, Int>> out;
  std::size_t guard = 0;
  while (!residual.is_zero()) {
    if (++guard > 1000000) throw ConsistencyError("greedy_decompose failed to terminate");
    std::vector<Weight> support;
    support.reserve(residual.terms().size());
    for (const auto& [w, m] : residual.terms()) support.push_back(w);
    std::vector<Weight> maxima = maximal_weights(rs, support);
    // among maximal weights keep the dominant ones; incomparable ties break
    // lexicographically
    Weight pick;
    bool have_dominant = false;
    for (const Weight& m : maxima) {
      if (!rs.is_dominant(m)) continue;
      if (!have_dominant || pick < m) {
        pick = m;
        have_dominant = true;
      }
    }
    if (!have_dominant)
      throw DomainError("greedy_decompose: residual has no dominant maximal weight; residual:\n" +
                        residual.to_text());
    Int m = residual.mult(pick);
    const FormalCharacter& b = basis(pick);
    if (b.mult(pick) != 1)
      throw ConsistencyError("greedy_decompose: basis character at " + pick.to_string() +
                             " does not have top coefficient 1");
    residual -= m * b;
    if (residual.mult(pick) != 0)
      throw ConsistencyError("greedy_decompose: subtraction failed to clear " + pick.to_string());
    out.emplace_back(pick, m);
  }
  return out;
}

}  // namespace weylfilt
