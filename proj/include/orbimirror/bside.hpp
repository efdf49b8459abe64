#pragma once

// Landau–Ginzburg side: f = u_0 + ... + u_n on {∏ u_i^{w_i} = 1}. Everything
// here is the finite combinatorial shadow of the Brieskorn lattice: the
// monomial frame ω_k, the Jacobian product, the residue metric and A0.

#include <cstdint>
#include <vector>

#include "orbimirror/combinatorics.hpp"
#include "orbimirror/matrix.hpp"

namespace orbimirror {

using ExponentVector = std::vector<std::int64_t>;

/// Precomputed B-side data for one weight vector. Immutable after construction.
class OmegaFrame {
 public:
  explicit OmegaFrame(const Weights& w, TieOrder ties = TieOrder::AscendingSource);

  const Weights& weights() const { return w_; }
  std::int64_t mu() const { return w_.mu(); }

  /// a(k) for k = 0..2μ-2: a(0) = 0, a(k+1) = a(k) + 1_{i(k)}.
  const std::vector<ExponentVector>& a() const { return a_; }
  /// i(k): the smallest index attaining min_j a(k)_j / w_j.
  const std::vector<std::size_t>& i() const { return i_; }
  const SValueSequence& s() const { return s_; }
  const std::vector<Rational>& sigma() const { return sigma_; }

  /// First index carrying the same s-value as k.
  std::int64_t k_min_of_index(std::size_t k) const { return kmin_[k]; }

  /// ω_k = w^{a(k_min(s(k))) − a(k)} u^{a(k)} ω_0: returns (w-power, u-exponent).
  std::pair<ExponentVector, ExponentVector> omega_exponents(std::size_t k) const;

  /// I(s(k)) as an index set.
  const std::vector<std::size_t>& i_of_index(std::size_t k) const { return i_of_s_[k]; }

 private:
  Weights w_;
  SValueSequence s_;
  std::vector<Rational> sigma_;
  std::vector<ExponentVector> a_;
  std::vector<std::size_t> i_;
  std::vector<std::int64_t> kmin_;
  std::vector<std::vector<std::size_t>> i_of_s_;
};

OmegaFrame omega_frame(const Weights& w);

struct BProduct {
  Rational coeff;
  std::size_t target;
};

/// [ω_i] ⋆ [ω_j] = coeff · [ω_{(i+j) mod μ}].
BProduct b_product(const OmegaFrame& frame, std::size_t i, std::size_t j);

/// Residue metric g(e_j, e_k).
Rational b_metric(const OmegaFrame& frame, std::size_t j, std::size_t k);
RationalMatrix b_metric_matrix(const OmegaFrame& frame);

/// ((ω_1, ω_j, ω_k)) by the closed form (not via product and metric).
Rational b_three_tensor(const OmegaFrame& frame, std::size_t j, std::size_t k);

/// Multiplication by μ[ω_1] in the ω basis; column = source.
RationalMatrix a0_matrix_B(const OmegaFrame& frame);

/// A∞ = diag(σ).
RationalMatrix a_infty_B(const OmegaFrame& frame);

struct SpectrumCheck {
  bool ok;
  std::vector<Rational> char_poly;  // lowest degree first
  Rational constant_expected;       // −μ^μ ∏ w_i^{−w_i}
};

/// Whether det(X − A0) = X^μ − μ^μ ∏ w_i^{−w_i}.
SpectrumCheck critical_spectrum_check(const OmegaFrame& frame);
SpectrumCheck critical_spectrum_check(const Weights& w, const RationalMatrix& a0);

}  // namespace orbimirror
