#pragma once

// Weight-vector combinatorics shared by the A side and the B side.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbimirror/rational.hpp"

namespace orbimirror {

/// Weight vector (w_0, ..., w_n) of a weighted projective space P(w).
/// Accepted unreduced and unordered.
class Weights {
 public:
  /// Throws std::invalid_argument if empty or some w_i < 1.
  explicit Weights(std::vector<std::int64_t> w);
  Weights(std::initializer_list<std::int64_t> w) : Weights(std::vector<std::int64_t>(w)) {}

  std::span<const std::int64_t> values() const { return w_; }
  std::int64_t operator[](std::size_t i) const { return w_[i]; }
  std::size_t size() const { return w_.size(); }

  /// Complex dimension n (number of weights minus one).
  std::int64_t n() const { return static_cast<std::int64_t>(w_.size()) - 1; }
  /// mu = w_0 + ... + w_n, the rank of both rings.
  std::int64_t mu() const { return mu_; }

  std::string to_string() const;

  bool operator==(const Weights&) const = default;

 private:
  std::vector<std::int64_t> w_;
  std::int64_t mu_ = 0;
};

/// A root of unity g = exp(2iπγ) in the union of the μ_{w_i}, stored by its
/// rotation number γ ∈ [0, 1).
struct Sector {
  Rational gamma;

  Sector() = default;
  explicit Sector(Rational g);

  bool is_identity() const { return sgn(gamma) == 0; }
  Sector inverse() const;
  /// Group product: gammas add modulo 1.
  Sector operator*(const Sector& other) const;

  friend bool operator==(const Sector& a, const Sector& b) { return a.gamma == b.gamma; }
  friend bool operator<(const Sector& a, const Sector& b) { return a.gamma < b.gamma; }
};

/// True if g lies in some μ_{w_i}.
bool is_sector_of(const Weights& w, const Sector& g);

/// All distinct sectors sorted by γ; the identity comes first.
std::vector<Sector> sectors(const Weights& w);

/// I(g) = {i : γ·w_i ∈ ℤ}.
std::vector<std::size_t> i_set(const Weights& w, const Sector& g);

/// I(·) evaluated on a bare rational value v (used by the B side on s-values).
std::vector<std::size_t> i_set_of_value(const Weights& w, const Rational& v);

/// ∏_{i ∈ I} w_i^{-1}.
Rational inverse_weight_product(const Weights& w, std::span<const std::size_t> indices);

/// Complex dimension of the twisted sector: |I(g)| - 1.
std::int64_t sector_dim(const Weights& w, const Sector& g);

/// age(g) = Σ frac(γ·w_i).
Rational age(const Weights& w, const Sector& g);

/// Order used when equal s-values come from different weights.
enum class TieOrder { AscendingSource, DescendingSource };

/// The sorted multiset ⊔_i {ℓ/w_i : 0 ≤ ℓ < w_i}, with provenance.
struct SValueSequence {
  std::vector<Rational> values;
  std::vector<std::size_t> source;     // index i the value came from
  std::vector<std::int64_t> numerator;  // ℓ in ℓ/w_i

  std::size_t size() const { return values.size(); }
  const Rational& operator[](std::size_t k) const { return values[k]; }
};

SValueSequence s_sequence(const Weights& w, TieOrder ties = TieOrder::AscendingSource);

/// σ(k) = k - μ·s(k).
std::vector<Rational> sigma(const Weights& w, const SValueSequence& s);
std::vector<Rational> sigma(const Weights& w);

/// Closed form codim + Σ floor(γ·w_i): the first index k with s(k) = γ(g).
std::int64_t k_min(const Weights& w, const Sector& g);

/// Least k with s(k) equal to the given value, by scanning. Throws
/// std::invalid_argument if the value does not occur.
std::int64_t k_min_by_scan(const SValueSequence& s, const Rational& value);

}  // namespace orbimirror
