#pragma once

// Genus-0 potential F(t) = Σ A(α) t^α/α! of the B-side Frobenius manifold,
// reconstructed from its cubic terms through homogeneity and WDVV.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "orbimirror/bside.hpp"

namespace orbimirror {

/// Exponent vector α ∈ ℕ^μ.
using MultiIndex = std::vector<std::int32_t>;

std::int64_t length(const MultiIndex& alpha);

struct MultiIndexHash {
  std::size_t operator()(const MultiIndex& m) const noexcept;
};

/// A shuttle step needed to divide by zero.
class ReconstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Cubic data A_{ijk}(0) = g(e_i ⋆ e_j, e_k), keyed by sorted (i ≤ j ≤ k);
/// zero entries omitted.
std::map<std::array<std::size_t, 3>, Rational> initial_coeffs(const OmegaFrame& frame);
std::map<std::array<std::size_t, 3>, Rational> initial_coeffs(const Weights& w);

class Potential {
 public:
  /// Empty potential; coefficients are filled by reconstruct().
  Potential(const Weights& w, std::int64_t max_length);

  const Weights& weights() const { return frame_.weights(); }
  const OmegaFrame& frame() const { return frame_; }
  const std::vector<Rational>& sigma() const { return frame_.sigma(); }
  const RationalMatrix& gram() const { return gram_; }
  const RationalMatrix& gram_inverse() const { return gram_inv_; }
  std::int64_t max_length() const { return max_length_; }
  std::size_t mu() const { return static_cast<std::size_t>(frame_.mu()); }

  /// A(α) for 3 ≤ |α| ≤ max_length. Throws std::out_of_range otherwise, and
  /// std::logic_error if the coefficient was never determined.
  const Rational& at(const MultiIndex& alpha) const;
  bool contains(const MultiIndex& alpha) const { return coeffs_.count(alpha) != 0; }

  /// A_{ijk}(α) = A(α + e_i + e_j + e_k).
  const Rational& at(std::size_t i, std::size_t j, std::size_t k, MultiIndex alpha) const;

  /// Non-zero coefficients ordered by length, then lexicographically.
  std::vector<std::pair<MultiIndex, Rational>> nonzero_coefficients() const;

  /// d(α) = 3 − n + Σ α_k (σ(k) − 1).
  Rational homogeneity_degree(const MultiIndex& alpha) const;

  std::size_t size() const { return coeffs_.size(); }

 private:
  friend Potential reconstruct(const Weights& w, std::int64_t max_length);
  friend class ShuttleSolver;

  OmegaFrame frame_;
  RationalMatrix gram_;
  RationalMatrix gram_inv_;
  std::int64_t max_length_;
  std::unordered_map<MultiIndex, Rational, MultiIndexHash> coeffs_;
};

/// A(α + e_1) = A(α)·d(α)/μ. Throws std::invalid_argument if |α| < 3 and
/// std::out_of_range / std::logic_error if A(α) is unknown.
Rational homogeneity_step(const Potential& p, const MultiIndex& alpha);

/// Every A(α) with 3 ≤ |α| ≤ max_length. Throws ReconstructionError if a shuttle
/// pivot vanishes, std::invalid_argument if max_length < 3 or n = 0.
Potential reconstruct(const Weights& w, std::int64_t max_length);

/// Coefficient of t^α/α! in Σ F_{ija} g^{ab} F_{bkl} − Σ F_{jka} g^{ab} F_{bil}.
/// Needs |α| + 3 ≤ max_length (throws std::out_of_range otherwise).
Rational wdvv_residual(const Potential& p, std::size_t i, std::size_t j, std::size_t k, std::size_t l,
                       const MultiIndex& alpha);

struct ResidualFailure {
  std::array<std::size_t, 4> equation;
  MultiIndex alpha;
  Rational value;
};

/// Checks every equation (i,j,k,l) at every α with |α| ≤ max_length − 3;
/// returns the first non-vanishing residual, if any.
std::optional<ResidualFailure> find_nonzero_residual(const Potential& p);

/// All α ∈ ℕ^dim with |α| = total, in lexicographic order.
std::vector<MultiIndex> multi_indices_of_length(std::size_t dim, std::int64_t total);

}  // namespace orbimirror
