#include "orbimirror/wdvv.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace orbimirror {

namespace {

struct InverseEntry {
  std::size_t a;
  std::size_t b;
  Rational value;
};

std::vector<InverseEntry> sparse_entries(const RationalMatrix& m) {
  std::vector<InverseEntry> out;
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b)
      if (sgn(m(a, b)) != 0) out.push_back({a, b, m(a, b)});
  return out;
}

MultiIndex plus3(MultiIndex m, std::size_t i, std::size_t j, std::size_t k) {
  ++m[i];
  ++m[j];
  ++m[k];
  return m;
}

/// Calls visit(beta, binomial) for every β ≤ α, with binomial = ∏ C(α_m, β_m).
void for_each_submultiindex(const MultiIndex& alpha, const std::function<void(const MultiIndex&, const mpz_class&)>& visit) {
  MultiIndex beta(alpha.size(), 0);
  std::function<void(std::size_t, const mpz_class&)> rec = [&](std::size_t pos, const mpz_class& binom) {
    if (pos == alpha.size()) {
      visit(beta, binom);
      return;
    }
    mpz_class c = 1;
    for (std::int32_t v = 0; v <= alpha[pos]; ++v) {
      beta[pos] = v;
      rec(pos + 1, binom * c);
      c = c * (alpha[pos] - v) / (v + 1);
    }
    beta[pos] = 0;
  };
  rec(0, mpz_class(1));
}

MultiIndex difference(const MultiIndex& alpha, const MultiIndex& beta) {
  MultiIndex out(alpha.size());
  for (std::size_t m = 0; m < alpha.size(); ++m) out[m] = alpha[m] - beta[m];
  return out;
}

/// The WDVV residual for equation (i,j,k,l) at α, reading coefficients
/// through `lookup`. In each product the factor of smaller length is read
/// first and the other one is skipped when it vanishes.
template <typename Lookup>
Rational residual_with(const std::vector<InverseEntry>& ginv, Lookup&& lookup, std::size_t i, std::size_t j,
                       std::size_t k, std::size_t l, const MultiIndex& alpha) {
  auto product = [&](const MultiIndex& p, const MultiIndex& q) -> Rational {
    const bool p_first = length(p) <= length(q);
    const Rational first = lookup(p_first ? p : q);
    if (sgn(first) == 0) return 0;
    return first * lookup(p_first ? q : p);
  };
  Rational total = 0;
  for_each_submultiindex(alpha, [&](const MultiIndex& beta, const mpz_class& binom) {
    const MultiIndex gamma = difference(alpha, beta);
    Rational inner = 0;
    for (const auto& e : ginv) {
      Rational lhs = product(plus3(beta, i, j, e.a), plus3(gamma, e.b, k, l));
      Rational rhs = product(plus3(beta, j, k, e.a), plus3(gamma, e.b, i, l));
      if (sgn(lhs) != 0 || sgn(rhs) != 0) inner += e.value * (lhs - rhs);
    }
    if (sgn(inner) != 0) total += Rational(binom) * inner;
  });
  return total;
}

}  // namespace

std::int64_t length(const MultiIndex& alpha) { return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0}); }

std::size_t MultiIndexHash::operator()(const MultiIndex& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto v : m) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ULL;
  return h;
}

std::vector<MultiIndex> multi_indices_of_length(std::size_t dim, std::int64_t total) {
  std::vector<MultiIndex> out;
  if (dim == 0) return out;
  MultiIndex cur(dim, 0);
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) {
    if (pos + 1 == dim) {
      cur[pos] = static_cast<std::int32_t>(left);
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[pos] = static_cast<std::int32_t>(v);
      rec(pos + 1, left - v);
    }
  };
  rec(0, total);
  return out;
}

std::map<std::array<std::size_t, 3>, Rational> initial_coeffs(const OmegaFrame& frame) {
  const auto mu = static_cast<std::size_t>(frame.mu());
  std::map<std::array<std::size_t, 3>, Rational> out;
  for (std::size_t i = 0; i < mu; ++i)
    for (std::size_t j = i; j < mu; ++j)
      for (std::size_t k = j; k < mu; ++k) {
        const auto prod = b_product(frame, i, j);
        Rational v = prod.coeff * b_metric(frame, prod.target, k);
        if (sgn(v) != 0) out.emplace(std::array<std::size_t, 3>{i, j, k}, std::move(v));
      }
  return out;
}

std::map<std::array<std::size_t, 3>, Rational> initial_coeffs(const Weights& w) { return initial_coeffs(OmegaFrame(w)); }

Potential::Potential(const Weights& w, std::int64_t max_length)
    : frame_(w), gram_(b_metric_matrix(frame_)), gram_inv_(gram_.inverse()), max_length_(max_length) {}

const Rational& Potential::at(const MultiIndex& alpha) const {
  if (alpha.size() != mu()) throw std::invalid_argument("potential: multi-index has wrong dimension");
  const auto len = length(alpha);
  if (len < 3 || len > max_length_)
    throw std::out_of_range("potential: length " + std::to_string(len) + " outside [3," + std::to_string(max_length_) + "]");
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) throw std::logic_error("potential: coefficient was never determined");
  return it->second;
}

const Rational& Potential::at(std::size_t i, std::size_t j, std::size_t k, MultiIndex alpha) const {
  return at(plus3(std::move(alpha), i, j, k));
}

std::vector<std::pair<MultiIndex, Rational>> Potential::nonzero_coefficients() const {
  std::vector<std::pair<MultiIndex, Rational>> out;
  for (const auto& [m, v] : coeffs_)
    if (sgn(v) != 0) out.emplace_back(m, v);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    const auto lx = length(x.first);
    const auto ly = length(y.first);
    if (lx != ly) return lx < ly;
    return x.first < y.first;
  });
  return out;
}

Rational Potential::homogeneity_degree(const MultiIndex& alpha) const {
  Rational d = 3 - weights().n();
  const auto& sig = sigma();
  for (std::size_t k = 0; k < alpha.size(); ++k)
    if (alpha[k] != 0) d += alpha[k] * (sig[k] - 1);
  return d;
}

Rational homogeneity_step(const Potential& p, const MultiIndex& alpha) {
  if (length(alpha) < 3) throw std::invalid_argument("homogeneity_step: needs |alpha| >= 3");
  return p.at(alpha) * p.homogeneity_degree(alpha) / p.weights().mu();
}

/// Determines one length level of the potential. Same-level coefficients with
/// a t_0 exponent vanish (flat unit), those with a t_1 exponent come from
/// homogeneity, and the rest are solved along WDVV shuttle chains.
class ShuttleSolver {
 public:
  ShuttleSolver(Potential& p, std::int64_t level) : p_(p), level_(level), ginv_(sparse_entries(p.gram_inv_)) {}

  void run() {
    const auto all = multi_indices_of_length(p_.mu(), level_);
    for (const auto& beta : all) {
      if (beta[0] > 0) {
        p_.coeffs_[beta] = 0;
      } else if (beta[1] > 0) {
        MultiIndex prev = beta;
        --prev[1];
        p_.coeffs_[beta] = homogeneity_step(p_, prev);
      }
    }
    for (const auto& beta : all)
      if (!p_.contains(beta)) solve(beta);
  }

 private:
  Rational lookup(const MultiIndex& m) const {
    if (unknown_ && m == *unknown_) return unknown_value_;
    if (next_ && m == *next_) return next_value_;
    auto it = p_.coeffs_.find(m);
    if (it != p_.coeffs_.end()) return it->second;
    throw ConsistencyError("reconstruct: equation needs an undetermined coefficient of length " +
                           std::to_string(length(m)));
  }

  Rational residual(std::size_t j, std::size_t k, std::size_t l, const MultiIndex& alpha, const Rational& u,
                    const Rational& v) {
    unknown_value_ = u;
    next_value_ = v;
    return residual_with(ginv_, [this](const MultiIndex& mi) { return lookup(mi); }, 1, j, k, l, alpha);
  }

  /// β has support in {2, ..., μ−1}. Writes β = α + e_x + e_k + e_ℓ with
  /// x ≤ ℓ and walks the equations (1, x−1−m, k, ℓ+m) at order α; equation m
  /// links T_m = α + e_{x−m} + e_k + e_{ℓ+m} to T_{m+1}. The walk stops at the
  /// first T_{m+1} that is already known, which happens at the latest when an
  /// index reaches 1 or wraps to 0.
  ///
  /// For |β| ≥ 4 each equation is affine in the level-|β| coefficients (two
  /// of them never multiply), so its coefficients are read off by evaluating
  /// the residual at unit values of the unknowns.
  void solve(const MultiIndex& beta) {
    const std::size_t mu = p_.mu();
    MultiIndex alpha = beta;
    std::size_t x = 0;
    while (alpha[x] == 0) ++x;
    --alpha[x];
    std::size_t ell = mu - 1;
    while (alpha[ell] == 0) --ell;
    --alpha[ell];
    std::size_t k = 0;
    while (alpha[k] == 0) ++k;
    --alpha[k];

    struct Step {
      MultiIndex unknown;
      Rational c_self, c_next, constant;  // c_self·T_m + c_next·T_{m+1} + constant = 0
    };
    std::vector<Step> chain;
    for (std::size_t m = 0;; ++m) {
      const std::size_t j = x - 1 - m;
      const std::size_t lm = ell + m;
      MultiIndex t_m = plus3(alpha, j + 1, k, lm);
      MultiIndex t_next = plus3(alpha, j, k, (lm + 1) % mu);
      const bool next_known = p_.contains(t_next);

      unknown_ = &t_m;
      next_ = next_known ? nullptr : &t_next;
      Step step{t_m, 0, 0, residual(j, k, lm, alpha, 0, 0)};
      step.c_self = residual(j, k, lm, alpha, 1, 0) - step.constant;
      if (!next_known) step.c_next = residual(j, k, lm, alpha, 0, 1) - step.constant;
      unknown_ = next_ = nullptr;

      if (sgn(step.c_self) == 0)
        throw ReconstructionError("reconstruct: pivot vanishes in WDVV equation (1," + std::to_string(j) + "," +
                                  std::to_string(k) + "," + std::to_string(lm) + ") at length " + std::to_string(level_));
      chain.push_back(std::move(step));
      if (next_known) break;
      if (j == 1 || (lm + 1) % mu == 0)
        throw ConsistencyError("reconstruct: shuttle reached a boundary coefficient that was not filled");
    }

    Rational next = 0;
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      Rational value = -(it->constant + it->c_next * next) / it->c_self;
      p_.coeffs_[it->unknown] = value;
      next = std::move(value);
    }
  }

  Potential& p_;
  std::int64_t level_;
  std::vector<InverseEntry> ginv_;
  const MultiIndex* unknown_ = nullptr;
  const MultiIndex* next_ = nullptr;
  Rational unknown_value_;
  Rational next_value_;
};

Potential reconstruct(const Weights& w, std::int64_t max_length) {
  if (max_length < 3) throw std::invalid_argument("reconstruct: max_length must be >= 3");
  if (w.n() < 1) throw std::invalid_argument("reconstruct: needs at least two weights");
  Potential p(w, max_length);
  const std::size_t mu = p.mu();

  for (const auto& m : multi_indices_of_length(mu, 3)) p.coeffs_[m] = 0;
  for (const auto& [ijk, v] : initial_coeffs(p.frame_)) p.coeffs_[plus3(MultiIndex(mu, 0), ijk[0], ijk[1], ijk[2])] = v;

  for (std::int64_t level = 4; level <= max_length; ++level) ShuttleSolver(p, level).run();
  return p;
}

Rational wdvv_residual(const Potential& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                       const MultiIndex& alpha) {
  const std::size_t mu = p.mu();
  if (i >= mu || j >= mu || k >= mu || l >= mu) throw std::out_of_range("wdvv_residual: index out of range");
  if (alpha.size() != mu) throw std::invalid_argument("wdvv_residual: multi-index has wrong dimension");
  if (length(alpha) + 3 > p.max_length())
    throw std::out_of_range("wdvv_residual: coefficients of length " + std::to_string(length(alpha) + 3) +
                            " are missing (max_length " + std::to_string(p.max_length()) + ")");
  const auto ginv = sparse_entries(p.gram_inverse());
  return residual_with(ginv, [&p](const MultiIndex& m) -> const Rational& { return p.at(m); }, i, j, k, l, alpha);
}

std::optional<ResidualFailure> find_nonzero_residual(const Potential& p) {
  const std::size_t mu = p.mu();
  const auto ginv = sparse_entries(p.gram_inverse());
  auto lookup = [&p](const MultiIndex& m) -> const Rational& { return p.at(m); };
  // The residual changes sign under i <-> k and under j <-> l.
  for (std::int64_t order = 0; order + 3 <= p.max_length(); ++order)
    for (const auto& alpha : multi_indices_of_length(mu, order))
      for (std::size_t i = 0; i < mu; ++i)
        for (std::size_t j = 0; j < mu; ++j)
          for (std::size_t k = i + 1; k < mu; ++k)
            for (std::size_t l = j + 1; l < mu; ++l) {
              Rational r = residual_with(ginv, lookup, i, j, k, l, alpha);
              if (sgn(r) != 0) return ResidualFailure{{i, j, k, l}, alpha, r};
            }
  return std::nullopt;
}

}  // namespace orbimirror
