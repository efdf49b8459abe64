#include "orbimirror/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace orbimirror {

Weights::Weights(std::vector<std::int64_t> w) : w_(std::move(w)) {
  if (w_.empty()) throw std::invalid_argument("weights: empty weight vector");
  for (auto x : w_) {
    if (x < 1) throw std::invalid_argument("weights: every weight must be >= 1, got " + std::to_string(x));
    mu_ += x;
  }
}

std::string Weights::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w_[i]);
  }
  return out + ")";
}

Sector::Sector(Rational g) : gamma(std::move(g)) {
  gamma.canonicalize();
  if (sgn(gamma) < 0 || gamma >= 1) throw std::invalid_argument("sector: gamma must lie in [0,1), got " + orbimirror::to_string(gamma));
}

Sector Sector::inverse() const { return is_identity() ? *this : Sector(1 - gamma); }

Sector Sector::operator*(const Sector& other) const { return Sector(frac_of(gamma + other.gamma)); }

bool is_sector_of(const Weights& w, const Sector& g) {
  for (auto wi : w.values())
    if (is_integer(g.gamma * wi)) return true;
  return false;
}

std::vector<Sector> sectors(const Weights& w) {
  std::vector<Rational> all;
  for (auto wi : w.values())
    for (std::int64_t l = 0; l < wi; ++l) all.push_back(make_rational(l, wi));
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<Sector> out;
  out.reserve(all.size());
  for (auto& g : all) out.emplace_back(g);
  return out;
}

std::vector<std::size_t> i_set_of_value(const Weights& w, const Rational& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (is_integer(v * w[i])) out.push_back(i);
  return out;
}

std::vector<std::size_t> i_set(const Weights& w, const Sector& g) { return i_set_of_value(w, g.gamma); }

Rational inverse_weight_product(const Weights& w, std::span<const std::size_t> indices) {
  mpz_class p = 1;
  for (auto i : indices) p *= static_cast<long>(w[i]);
  Rational out(mpz_class(1), p);
  out.canonicalize();
  return out;
}

std::int64_t sector_dim(const Weights& w, const Sector& g) {
  return static_cast<std::int64_t>(i_set(w, g).size()) - 1;
}

Rational age(const Weights& w, const Sector& g) {
  Rational out = 0;
  for (auto wi : w.values()) out += frac_of(g.gamma * wi);
  return out;
}

SValueSequence s_sequence(const Weights& w, TieOrder ties) {
  struct Entry {
    Rational value;
    std::size_t source;
    std::int64_t numerator;
  };
  std::vector<Entry> entries;
  entries.reserve(static_cast<std::size_t>(w.mu()));
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::int64_t l = 0; l < w[i]; ++l) entries.push_back({make_rational(l, w[i]), i, l});

  std::sort(entries.begin(), entries.end(), [ties](const Entry& a, const Entry& b) {
    if (a.value != b.value) return a.value < b.value;
    return ties == TieOrder::AscendingSource ? a.source < b.source : a.source > b.source;
  });

  SValueSequence s;
  for (auto& e : entries) {
    s.values.push_back(e.value);
    s.source.push_back(e.source);
    s.numerator.push_back(e.numerator);
  }
  return s;
}

std::vector<Rational> sigma(const Weights& w, const SValueSequence& s) {
  std::vector<Rational> out;
  out.reserve(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) out.push_back(Rational(static_cast<long>(k)) - w.mu() * s[k]);
  return out;
}

std::vector<Rational> sigma(const Weights& w) { return sigma(w, s_sequence(w)); }

std::int64_t k_min(const Weights& w, const Sector& g) {
  const auto codim = static_cast<std::int64_t>(w.size() - i_set(w, g).size());
  mpz_class floors = 0;
  for (auto wi : w.values()) floors += floor_of(g.gamma * wi);
  return codim + floors.get_si();
}

std::int64_t k_min_by_scan(const SValueSequence& s, const Rational& value) {
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s[k] == value) return static_cast<std::int64_t>(k);
  throw std::invalid_argument("k_min_by_scan: value " + to_string(value) + " is not an s-value");
}

}  // namespace orbimirror
