#include "orbimirror/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace orbimirror {

QPoly::QPoly(Rational scalar, Rational qexp) {
  if (sgn(qexp) < 0) throw std::invalid_argument("QPoly: negative Q exponent " + to_string(qexp));
  add_term(qexp, scalar);
}

void QPoly::add_term(const Rational& qexp, const Rational& scalar) {
  if (sgn(scalar) == 0) return;
  auto [it, inserted] = terms_.try_emplace(qexp, scalar);
  if (!inserted) {
    it->second += scalar;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational QPoly::at_q_one() const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) out += c;
  return out;
}

QPoly& QPoly::operator+=(const QPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

QPoly QPoly::operator*(const QPoly& rhs) const {
  QPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

QPoly QPoly::scaled(const Rational& factor) const {
  QPoly out;
  for (const auto& [e, c] : terms_) out.add_term(e, c * factor);
  return out;
}

CohClass::CohClass(const BasisClass& basis, QPoly coeff) { add(basis, coeff); }

void CohClass::add(const BasisClass& basis, const QPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(basis, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
  for (const auto& [b, c] : rhs.terms_) add(b, c);
  return *this;
}

OrderedBasis::OrderedBasis(const Weights& w) {
  for (const auto& g : sectors(w)) {
    const auto dim = sector_dim(w, g);
    const Rational a = age(w, g);
    for (std::int64_t d = 0; d <= dim; ++d) {
      index_.emplace(BasisClass{g, d}, classes_.size());
      classes_.push_back({g, d});
      degrees_.push_back(2 * (Rational(static_cast<long>(d)) + a));
    }
  }
}

std::size_t OrderedBasis::index_of(const BasisClass& c) const {
  auto it = index_.find(c);
  if (it == index_.end())
    throw std::out_of_range("basis class eta(" + to_string(c.g.gamma) + ";" + std::to_string(c.d) + ") not in basis");
  return it->second;
}

OrderedBasis ordered_basis(const Weights& w) { return OrderedBasis(w); }

bool is_valid_class(const Weights& w, const BasisClass& c) {
  return is_sector_of(w, c.g) && c.d >= 0 && c.d <= sector_dim(w, c.g);
}

Rational degree(const Weights& w, const BasisClass& c) {
  return 2 * (Rational(static_cast<long>(c.d)) + age(w, c.g));
}

Rational integral_top(const Weights& w) {
  std::vector<std::size_t> all(w.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return inverse_weight_product(w, all);
}

Rational pairing(const Weights& w, const BasisClass& a, const BasisClass& b) {
  if (!(b.g == a.g.inverse())) return 0;
  if (degree(w, a) + degree(w, b) != 2 * w.n()) return 0;
  return inverse_weight_product(w, i_set(w, a.g));
}

Rational pairing(const Weights& w, const CohClass& a, const CohClass& b) {
  Rational out = 0;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms()) {
      Rational p = pairing(w, ba, bb);
      if (sgn(p) != 0) out += p * ca.at_q_one() * cb.at_q_one();
    }
  return out;
}

RationalMatrix gram_matrix(const Weights& w) {
  const OrderedBasis basis(w);
  RationalMatrix g(basis.size(), basis.size());
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) g(r, c) = pairing(w, basis[r], basis[c]);
  return g;
}

std::vector<std::size_t> obstruction_set(const Weights& w, const Sector& g0, const Sector& g1, const Sector& ginf) {
  if (!is_integer(g0.gamma + g1.gamma + ginf.gamma))
    throw std::invalid_argument("obstruction_set: g0*g1*ginf != 1 (gammas " + to_string(g0.gamma) + ", " +
                                to_string(g1.gamma) + ", " + to_string(ginf.gamma) + ")");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    Rational s = frac_of(g0.gamma * w[i]) + frac_of(g1.gamma * w[i]) + frac_of(ginf.gamma * w[i]);
    if (s == 2) out.push_back(i);
  }
  return out;
}

std::optional<CupTerm> cup(const Weights& w, const BasisClass& a, const BasisClass& b) {
  const Sector prod = a.g * b.g;
  const auto i_prod = i_set(w, prod);
  if (i_prod.empty()) return std::nullopt;

  const Rational dq = Rational(static_cast<long>(a.d + b.d)) + age(w, a.g) + age(w, b.g) - age(w, prod);
  if (!is_integer(dq) || sgn(dq) < 0)
    throw ConsistencyError("cup: target exponent " + to_string(dq) + " is not a non-negative integer");
  const auto d = dq.get_num().get_si();
  if (d > static_cast<std::int64_t>(i_prod.size()) - 1) return std::nullopt;

  // K = J(g0, g1, (g0 g1)^{-1}) ⊔ (I(g0 g1) − I(g0) ∩ I(g1)).
  const auto i_a = i_set(w, a.g);
  const auto i_b = i_set(w, b.g);
  std::vector<std::size_t> common;
  std::set_intersection(i_a.begin(), i_a.end(), i_b.begin(), i_b.end(), std::back_inserter(common));
  std::vector<std::size_t> k_set = obstruction_set(w, a.g, b.g, prod.inverse());
  std::set_difference(i_prod.begin(), i_prod.end(), common.begin(), common.end(), std::back_inserter(k_set));

  mpz_class coeff = 1;
  for (auto i : k_set) coeff *= static_cast<long>(w[i]);
  return CupTerm{Rational(coeff), BasisClass{prod, d}};
}

CohClass cup(const Weights& w, const CohClass& a, const CohClass& b) {
  CohClass out;
  for (const auto& [ba, ca] : a.terms())
    for (const auto& [bb, cb] : b.terms())
      if (auto t = cup(w, ba, bb)) out.add(t->out, (ca * cb).scaled(t->coeff));
  return out;
}

std::vector<Rational> chern_total(const Weights& w) {
  // e_k(w) by the usual one-variable-at-a-time recurrence, truncated at k = n.
  const auto n = static_cast<std::size_t>(w.n());
  std::vector<Rational> e(n + 2);
  e[0] = 1;
  for (auto wi : w.values())
    for (std::size_t k = n + 1; k >= 1; --k) e[k] += e[k - 1] * wi;
  e.resize(n + 1);
  return e;
}

RationalMatrix a_infty_A(const Weights& w) {
  const OrderedBasis basis(w);
  std::vector<Rational> diag;
  for (std::size_t i = 0; i < basis.size(); ++i) diag.push_back(basis.degree(i) / 2);
  return RationalMatrix::diagonal(diag);
}

bool satisfies_a_infty_duality(const RationalMatrix& a, const RationalMatrix& gram, std::int64_t n) {
  return gram * a + a.transpose() * gram == gram.scaled(Rational(static_cast<long>(n)));
}

}  // namespace orbimirror
