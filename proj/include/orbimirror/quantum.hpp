#pragma once

// A-side quantum data: degree-one 3-point numbers ((η_1^1, a, b)), the small
// quantum product by the hyperplane class, and the A-side A0 matrix.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "orbimirror/cohomology.hpp"

namespace orbimirror {

/// Which of the three families a 3-point number ((η_1^1, a, b)) falls in.
enum class TripleKind { Vanishing, Classical, Quantum };

std::string_view to_string(TripleKind kind);

struct TripleCase {
  TripleKind kind;
  /// 1 + deg(a)/2 + deg(b)/2 − n + μ(γ(g^{-1}) + γ(g'^{-1})); always an integer.
  Rational test_value;
};

/// μ∫_Ã η_1^1 = 1 + deg(a)/2 + deg(b)/2 − n.
Rational expected_curve_degree(const Weights& w, const BasisClass& a, const BasisClass& b);

TripleCase classify_triple(const Weights& w, const BasisClass& a, const BasisClass& b);

/// ((η_1^1, a, b)) at t = 0.
Rational three_point(const Weights& w, const BasisClass& a, const BasisClass& b);

/// s(g) = ∏ w_i^{-⌈γ(g) w_i⌉}.
Rational s_k(const Weights& w, const Sector& g);

/// The same number from its ratio-of-products definition: the product over
/// smaller sectors g_m of (γ − γ_m)^{dim(g_m)+1}, divided by ∏_i of the falling
/// factorial (γ w_i)(γ w_i − 1)···(γ w_i − ⌈γ w_i⌉ + 1). Returns nullopt if a
/// factor vanishes.
std::optional<Rational> s_k_ratio(const Weights& w, const Sector& g);

/// η_1^1 ⋆ c in the small quantum ring, with explicit Q powers.
/// Throws std::invalid_argument when n = 0 (no hyperplane class).
CohClass quantum_mult_hyperplane(const Weights& w, const CohClass& c);

/// (η_1^1)^{⋆power} ⋆ c.
CohClass quantum_hyperplane_power(const Weights& w, const CohClass& c, std::int64_t power);

/// Matrix of μ·(η_1^1 ⋆ ·) at Q = 1 in the ordered basis; column = source.
RationalMatrix a0_matrix_A(const Weights& w);

/// 2(μ·curve_deg + n − 3 + k − Σ age(g_ℓ)) for k marked points of the given types.
Rational expected_dim(const Weights& w, std::int64_t k, const Rational& curve_deg, std::span<const Sector> types);

}  // namespace orbimirror
