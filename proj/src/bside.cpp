#include "orbimirror/bside.hpp"

#include <stdexcept>

namespace orbimirror {

namespace {

void check_index(const OmegaFrame& frame, std::size_t k, const char* what) {
  if (k >= static_cast<std::size_t>(frame.mu()))
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(k) + " out of range [0," +
                            std::to_string(frame.mu()) + ")");
}

Rational weight_power(const Weights& w, const ExponentVector& e) {
  Rational out = 1;
  for (std::size_t l = 0; l < e.size(); ++l)
    if (e[l] != 0) out *= power(w[l], e[l]);
  return out;
}

}  // namespace

OmegaFrame::OmegaFrame(const Weights& w, TieOrder ties)
    : w_(w), s_(s_sequence(w, ties)), sigma_(orbimirror::sigma(w, s_)) {
  const auto mu = static_cast<std::size_t>(w.mu());
  const std::size_t length = 2 * mu - 1;

  a_.reserve(length);
  i_.reserve(length);
  a_.emplace_back(w.size(), 0);
  i_.push_back(0);
  for (std::size_t k = 1; k < length; ++k) {
    ExponentVector next = a_.back();
    ++next[i_.back()];
    std::size_t arg = 0;
    for (std::size_t j = 1; j < w.size(); ++j)
      if (make_rational(next[j], w[j]) < make_rational(next[arg], w[arg])) arg = j;
    a_.push_back(std::move(next));
    i_.push_back(arg);
  }

  kmin_.resize(mu);
  i_of_s_.resize(mu);
  for (std::size_t k = 0; k < mu; ++k) {
    kmin_[k] = (k > 0 && s_[k] == s_[k - 1]) ? kmin_[k - 1] : static_cast<std::int64_t>(k);
    i_of_s_[k] = i_set_of_value(w, s_[k]);
  }
}

std::pair<ExponentVector, ExponentVector> OmegaFrame::omega_exponents(std::size_t k) const {
  check_index(*this, k, "omega_exponents");
  const auto& base = a_[static_cast<std::size_t>(kmin_[k])];
  ExponentVector wpow(w_.size());
  for (std::size_t l = 0; l < w_.size(); ++l) wpow[l] = base[l] - a_[k][l];
  return {wpow, a_[k]};
}

OmegaFrame omega_frame(const Weights& w) { return OmegaFrame(w); }

BProduct b_product(const OmegaFrame& frame, std::size_t i, std::size_t j) {
  check_index(frame, i, "b_product");
  check_index(frame, j, "b_product");
  const auto mu = static_cast<std::size_t>(frame.mu());
  const std::size_t r = (i + j) % mu;
  const auto& a = frame.a();
  const auto& ki = a[static_cast<std::size_t>(frame.k_min_of_index(i))];
  const auto& kj = a[static_cast<std::size_t>(frame.k_min_of_index(j))];
  const auto& kr = a[static_cast<std::size_t>(frame.k_min_of_index(r))];
  ExponentVector e(frame.weights().size());
  for (std::size_t l = 0; l < e.size(); ++l) e[l] = ki[l] + kj[l] - kr[l] + a[r][l] - a[i + j][l];
  return {weight_power(frame.weights(), e), r};
}

Rational b_metric(const OmegaFrame& frame, std::size_t j, std::size_t k) {
  check_index(frame, j, "b_metric");
  check_index(frame, k, "b_metric");
  const auto mu = frame.mu();
  const auto n = frame.weights().n();
  if (static_cast<std::int64_t>((j + k) % static_cast<std::size_t>(mu)) != ((n % mu) + mu) % mu) return 0;
  return inverse_weight_product(frame.weights(), frame.i_of_index(k));
}

RationalMatrix b_metric_matrix(const OmegaFrame& frame) {
  const auto mu = static_cast<std::size_t>(frame.mu());
  RationalMatrix g(mu, mu);
  for (std::size_t j = 0; j < mu; ++j)
    for (std::size_t k = 0; k < mu; ++k) g(j, k) = b_metric(frame, j, k);
  return g;
}

Rational b_three_tensor(const OmegaFrame& frame, std::size_t j, std::size_t k) {
  check_index(frame, j, "b_three_tensor");
  check_index(frame, k, "b_three_tensor");
  const auto mu = static_cast<std::size_t>(frame.mu());
  if (mu < 2) throw std::invalid_argument("b_three_tensor: needs mu >= 2");
  const auto n = static_cast<std::size_t>(frame.weights().n());
  if ((1 + j + k) % mu != n % mu) return 0;
  const auto& sig = frame.sigma();
  if (sig[1] + sig[j] + sig[k] == static_cast<long>(n)) return inverse_weight_product(frame.weights(), frame.i_of_index(j));
  auto both = frame.i_of_index(j);
  const auto& ik = frame.i_of_index(k);
  both.insert(both.end(), ik.begin(), ik.end());
  return inverse_weight_product(frame.weights(), both);
}

RationalMatrix a0_matrix_B(const OmegaFrame& frame) {
  const auto mu = static_cast<std::size_t>(frame.mu());
  RationalMatrix a0(mu, mu);
  const auto& s = frame.s();
  for (std::size_t j = 0; j < mu; ++j) {
    const std::size_t row = (j + 1) % mu;
    a0(row, j) = s[row] == s[j] ? Rational(frame.mu())
                                : frame.mu() * inverse_weight_product(frame.weights(), frame.i_of_index(j));
  }
  return a0;
}

RationalMatrix a_infty_B(const OmegaFrame& frame) { return RationalMatrix::diagonal(frame.sigma()); }

SpectrumCheck critical_spectrum_check(const Weights& w, const RationalMatrix& a0) {
  Rational constant = power(w.mu(), w.mu());
  for (auto wi : w.values()) constant *= power(wi, -wi);
  constant = -constant;

  SpectrumCheck out{true, a0.characteristic_polynomial(), constant};
  const auto mu = static_cast<std::size_t>(w.mu());
  if (out.char_poly.size() != mu + 1) out.ok = false;
  for (std::size_t d = 0; out.ok && d <= mu; ++d) {
    const Rational expected = d == mu ? Rational(1) : (d == 0 ? constant : Rational(0));
    if (out.char_poly[d] != expected) out.ok = false;
  }
  return out;
}

SpectrumCheck critical_spectrum_check(const OmegaFrame& frame) {
  return critical_spectrum_check(frame.weights(), a0_matrix_B(frame));
}

}  // namespace orbimirror
