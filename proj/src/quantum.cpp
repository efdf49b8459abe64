#include "orbimirror/quantum.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbimirror {

namespace {

void require_hyperplane(const Weights& w, const char* what) {
  if (w.n() < 1)
    throw std::invalid_argument(std::string(what) + ": needs at least two weights (no hyperplane class for n = 0)");
}

/// η_1^1 ⋆ η_g^d on a single basis class.
CohClass hyperplane_times(const Weights& w, const std::vector<Sector>& all, const BasisClass& c) {
  const auto dim = sector_dim(w, c.g);
  if (c.d < dim) {
    auto t = cup(w, BasisClass{Sector(), 1}, c);
    if (!t) throw ConsistencyError("quantum_mult_hyperplane: classical step vanished below the top class");
    return CohClass(t->out, QPoly(t->coeff));
  }
  // Top class of the sector of g = g_{k-1}^{-1}: jump to η^0 of g_k^{-1}.
  const Sector prev = c.g.inverse();
  auto it = std::lower_bound(all.begin(), all.end(), prev);
  const auto pos = static_cast<std::size_t>(it - all.begin());
  const bool wraps = pos + 1 == all.size();
  const Sector& next = wraps ? all.front() : all[pos + 1];
  const Rational qexp = wraps ? Rational(1 - prev.gamma) : Rational(next.gamma - prev.gamma);
  const Rational coeff = inverse_weight_product(w, i_set(w, prev));
  return CohClass(BasisClass{next.inverse(), 0}, QPoly(coeff, qexp));
}

}  // namespace

std::string_view to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::Vanishing: return "VANISHING";
    case TripleKind::Classical: return "CLASSICAL";
    case TripleKind::Quantum: return "QUANTUM";
  }
  return "?";
}

Rational expected_curve_degree(const Weights& w, const BasisClass& a, const BasisClass& b) {
  return 1 + degree(w, a) / 2 + degree(w, b) / 2 - w.n();
}

TripleCase classify_triple(const Weights& w, const BasisClass& a, const BasisClass& b) {
  const Rational test = expected_curve_degree(w, a, b) + w.mu() * (a.g.inverse().gamma + b.g.inverse().gamma);
  if (!is_integer(test)) throw ConsistencyError("classify_triple: test value " + to_string(test) + " is not an integer");
  if (mod_of(test, w.mu()) != 0) return {TripleKind::Vanishing, test};
  const bool classical = 2 + degree(w, a) + degree(w, b) == 2 * w.n();
  return {classical ? TripleKind::Classical : TripleKind::Quantum, test};
}

Rational three_point(const Weights& w, const BasisClass& a, const BasisClass& b) {
  switch (classify_triple(w, a, b).kind) {
    case TripleKind::Vanishing:
      return 0;
    case TripleKind::Classical:
      return inverse_weight_product(w, i_set(w, a.g));
    case TripleKind::Quantum: {
      auto both = i_set(w, a.g);
      auto ib = i_set(w, b.g);
      both.insert(both.end(), ib.begin(), ib.end());
      return inverse_weight_product(w, both);
    }
  }
  return 0;
}

Rational s_k(const Weights& w, const Sector& g) {
  Rational out = 1;
  for (auto wi : w.values()) out *= power(wi, -ceil_of(g.gamma * wi).get_si());
  return out;
}

std::optional<Rational> s_k_ratio(const Weights& w, const Sector& g) {
  Rational numerator = 1;
  for (const auto& gm : sectors(w)) {
    if (!(gm < g)) break;
    const Rational diff = g.gamma - gm.gamma;
    for (std::int64_t e = 0; e <= sector_dim(w, gm); ++e) numerator *= diff;
  }
  Rational denominator = 1;
  for (auto wi : w.values()) {
    const Rational x = g.gamma * wi;
    const auto steps = ceil_of(x).get_si();
    for (std::int64_t j = 0; j < steps; ++j) denominator *= x - j;
  }
  if (sgn(numerator) == 0 || sgn(denominator) == 0) return std::nullopt;
  return numerator / denominator;
}

CohClass quantum_mult_hyperplane(const Weights& w, const CohClass& c) {
  require_hyperplane(w, "quantum_mult_hyperplane");
  const auto all = sectors(w);
  CohClass out;
  for (const auto& [basis, coeff] : c.terms()) {
    const CohClass image = hyperplane_times(w, all, basis);
    for (const auto& [b, q] : image.terms()) out.add(b, q * coeff);
  }
  return out;
}

CohClass quantum_hyperplane_power(const Weights& w, const CohClass& c, std::int64_t power) {
  CohClass out = c;
  for (std::int64_t i = 0; i < power; ++i) out = quantum_mult_hyperplane(w, out);
  return out;
}

RationalMatrix a0_matrix_A(const Weights& w) {
  require_hyperplane(w, "a0_matrix_A");
  const OrderedBasis basis(w);
  RationalMatrix a0(basis.size(), basis.size());
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const CohClass image = quantum_mult_hyperplane(w, CohClass(basis[col]));
    for (const auto& [b, q] : image.terms()) a0(basis.index_of(b), col) = w.mu() * q.at_q_one();
  }
  return a0;
}

Rational expected_dim(const Weights& w, std::int64_t k, const Rational& curve_deg, std::span<const Sector> types) {
  if (static_cast<std::size_t>(k) != types.size())
    throw std::invalid_argument("expected_dim: k must equal the number of marked-point types");
  Rational ages = 0;
  for (const auto& g : types) ages += age(w, g);
  return 2 * (w.mu() * curve_deg + w.n() - 3 + k - ages);
}

}  // namespace orbimirror
