#pragma once

// Classical orbifold cohomology ring of P(w): the basis η_g^d, its grading,
// the orbifold Poincaré pairing and the orbifold cup product.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "orbimirror/combinatorics.hpp"
#include "orbimirror/matrix.hpp"

namespace orbimirror {

/// η_g^d: the d-th power of the hyperplane class on the sector of g.
struct BasisClass {
  Sector g;
  std::int64_t d = 0;

  friend bool operator==(const BasisClass& a, const BasisClass& b) { return a.g == b.g && a.d == b.d; }
  friend bool operator<(const BasisClass& a, const BasisClass& b) {
    if (a.g.gamma != b.g.gamma) return a.g.gamma < b.g.gamma;
    return a.d < b.d;
  }
};

/// Finite sum Σ c·Q^e with rational exponents e ≥ 0. Zero terms are never stored.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(Rational scalar, Rational qexp = 0);

  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Value at Q = 1.
  Rational at_q_one() const;

  QPoly& operator+=(const QPoly& rhs);
  QPoly operator*(const QPoly& rhs) const;
  QPoly scaled(const Rational& factor) const;

  friend bool operator==(const QPoly&, const QPoly&) = default;

 private:
  void add_term(const Rational& qexp, const Rational& scalar);
  std::map<Rational, Rational> terms_;  // qexp -> scalar
};

/// Sparse linear combination of basis classes with QPoly coefficients.
class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(const BasisClass& basis, QPoly coeff = QPoly(1));

  const std::map<BasisClass, QPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const BasisClass& basis, const QPoly& coeff);
  CohClass& operator+=(const CohClass& rhs);

  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  std::map<BasisClass, QPoly> terms_;
};

/// The μ basis classes sorted by (γ(g), d), with cached degrees.
class OrderedBasis {
 public:
  explicit OrderedBasis(const Weights& w);

  std::size_t size() const { return classes_.size(); }
  const BasisClass& operator[](std::size_t i) const { return classes_[i]; }
  const std::vector<BasisClass>& classes() const { return classes_; }
  /// Orbifold degree 2(d + age(g)) of entry i.
  const Rational& degree(std::size_t i) const { return degrees_[i]; }
  /// Throws std::out_of_range for a class not in the basis.
  std::size_t index_of(const BasisClass& c) const;

 private:
  std::vector<BasisClass> classes_;
  std::vector<Rational> degrees_;
  std::map<BasisClass, std::size_t> index_;
};

OrderedBasis ordered_basis(const Weights& w);

/// True if g is a sector of w and 0 ≤ d ≤ dim(g).
bool is_valid_class(const Weights& w, const BasisClass& c);

/// 2(d + age(g)).
Rational degree(const Weights& w, const BasisClass& c);

/// ∫^orb η_1^n = ∏ w_i^{-1}.
Rational integral_top(const Weights& w);

/// Orbifold Poincaré pairing on basis classes.
Rational pairing(const Weights& w, const BasisClass& a, const BasisClass& b);

/// Pairing extended bilinearly, with every Q specialized to 1.
Rational pairing(const Weights& w, const CohClass& a, const CohClass& b);

RationalMatrix gram_matrix(const Weights& w);

/// J(g0,g1,g∞) = {i : Σ frac(γ_k w_i) = 2}. Throws std::invalid_argument unless
/// γ0 + γ1 + γ∞ is an integer.
std::vector<std::size_t> obstruction_set(const Weights& w, const Sector& g0, const Sector& g1, const Sector& ginf);

struct CupTerm {
  Rational coeff;
  BasisClass out;
};

/// η_{g0}^{d0} ∪ η_{g1}^{d1}, or nullopt when the product vanishes.
/// Throws ConsistencyError if a surviving exponent d is not a non-negative integer.
std::optional<CupTerm> cup(const Weights& w, const BasisClass& a, const BasisClass& b);

CohClass cup(const Weights& w, const CohClass& a, const CohClass& b);

/// Coefficients of η_1^k in c(TP(w)) = ∏(1 + w_i η_1^1), k = 0..n.
std::vector<Rational> chern_total(const Weights& w);

/// A∞ = diag(deg/2) over the ordered basis.
RationalMatrix a_infty_A(const Weights& w);

/// True iff G·A + Aᵀ·G = n·G, i.e. A + A* = n·Id for the adjoint w.r.t. G.
bool satisfies_a_infty_duality(const RationalMatrix& a, const RationalMatrix& gram, std::int64_t n);

}  // namespace orbimirror
