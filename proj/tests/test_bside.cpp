#include "doctest.h"
#include "orbimirror/bside.hpp"
#include "support.hpp"

using namespace orbimirror;
using testing::q;

TEST_CASE("omega frame recursion") {
  const OmegaFrame f(Weights{1, 2});
  const std::vector<ExponentVector> a{{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}};
  REQUIRE(f.a().size() == 5);
  CHECK(f.a() == a);
  REQUIRE(f.i().size() >= 4);
  CHECK(std::vector<std::size_t>(f.i().begin(), f.i().begin() + 4) == std::vector<std::size_t>{0, 1, 1, 0});

  const OmegaFrame p2(Weights{1, 1, 1});
  for (std::size_t k = 0; k + 1 < p2.a().size(); ++k) CHECK(p2.i()[k] == k % 3);

  const auto [wpow, u] = f.omega_exponents(2);
  CHECK(u == ExponentVector{1, 1});
  CHECK(wpow == ExponentVector{0, 0});
}

TEST_CASE("Jacobian product") {
  const OmegaFrame f(Weights{1, 2});
  const auto p11 = b_product(f, 1, 1);
  CHECK(p11.coeff == q("1/2"));
  CHECK(p11.target == 2);
  const auto p12 = b_product(f, 1, 2);
  CHECK(p12.coeff == q("1/2"));
  CHECK(p12.target == 0);
  for (const auto& v : testing::suite()) {
    const OmegaFrame frame{Weights(v)};
    for (std::size_t j = 0; j < static_cast<std::size_t>(frame.mu()); ++j) {
      const auto p = b_product(frame, 0, j);
      CHECK(p.coeff == 1);
      CHECK(p.target == j);
    }
  }
}

TEST_CASE("residue metric") {
  const OmegaFrame f(Weights{1, 2});
  CHECK(b_metric(f, 0, 1) == q("1/2"));
  CHECK(b_metric(f, 2, 2) == q("1/2"));
  CHECK(b_metric(f, 0, 0) == 0);
  const RationalMatrix p2 = b_metric_matrix(OmegaFrame(Weights{1, 1, 1}));
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) CHECK(p2(j, k) == (j + k == 2 ? 1 : 0));
  for (const auto& v : testing::suite()) CHECK(b_metric_matrix(OmegaFrame(Weights(v))).is_symmetric());
}

TEST_CASE("three-tensor") {
  const OmegaFrame p2(Weights{1, 1, 1});
  CHECK(b_three_tensor(p2, 2, 2) == 1);
  CHECK(b_three_tensor(p2, 1, 0) == 1);
  CHECK(b_three_tensor(p2, 1, 1) == 0);
  CHECK(b_three_tensor(OmegaFrame(Weights{1, 2}), 1, 2) == q("1/4"));
}

TEST_CASE("A0 on the B side and its spectrum") {
  RationalMatrix p2(3, 3);
  p2(1, 0) = 3; p2(2, 1) = 3; p2(0, 2) = 3;
  CHECK(a0_matrix_B(OmegaFrame(Weights{1, 1, 1})) == p2);

  RationalMatrix m(3, 3);
  m(1, 0) = 3; m(2, 1) = q("3/2"); m(0, 2) = q("3/2");
  CHECK(a0_matrix_B(OmegaFrame(Weights{1, 2})) == m);

  const auto c111 = critical_spectrum_check(OmegaFrame(Weights{1, 1, 1}));
  CHECK(c111.ok);
  CHECK(c111.char_poly == std::vector<Rational>{-27, 0, 0, 1});
  CHECK(critical_spectrum_check(OmegaFrame(Weights{1, 2})).constant_expected == q("-27/4"));

  const auto big = critical_spectrum_check(OmegaFrame(Weights{1, 2, 2, 3, 3, 3}));
  CHECK(big.ok);
  const Rational constant = -Rational(power(14, 14)) / (4 * 4 * 27 * 27 * 27);
  CHECK(big.constant_expected == constant);
  CHECK(testing::char_poly_is(a0_matrix_B(OmegaFrame(Weights{1, 2, 2, 3, 3, 3})), constant));
}

TEST_CASE("A_infty duality on the B side") {
  for (const auto& v : testing::suite()) {
    const OmegaFrame f{Weights(v)};
    const RationalMatrix a = a_infty_B(f);
    const RationalMatrix g = b_metric_matrix(f);
    CHECK(g * a + a.transpose() * g == g.scaled(f.weights().n()));
  }
}

TEST_CASE("B-side structure on the suite") {
  for (const auto& v : testing::suite()) {
    const Weights w(v);
    CAPTURE(w.to_string());
    const OmegaFrame f(w);
    const OmegaFrame other(w, TieOrder::DescendingSource);
    const auto mu = static_cast<std::size_t>(w.mu());
    for (std::size_t k = 0; k < f.a().size(); ++k) {
      std::int64_t total = 0;
      for (auto x : f.a()[k]) total += x;
      CHECK(total == static_cast<std::int64_t>(k));
    }
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) {
        const auto ij = b_product(f, i, j);
        const auto alt = b_product(other, i, j);
        CHECK(ij.coeff == alt.coeff);
        CHECK(ij.target == alt.target);
        CHECK(b_metric(f, i, j) == b_metric(other, i, j));
        CHECK(f.sigma()[i] + f.sigma()[j] >= f.sigma()[ij.target]);
        for (std::size_t k = 0; k < mu; ++k) {
          const auto jk = b_product(f, j, k);
          const auto lhs = b_product(f, ij.target, k);
          const auto rhs = b_product(f, i, jk.target);
          CHECK(lhs.target == rhs.target);
          CHECK(ij.coeff * lhs.coeff == jk.coeff * rhs.coeff);
          const Rational g_ij_k = ij.coeff * b_metric(f, ij.target, k);
          CHECK(g_ij_k == jk.coeff * b_metric(f, i, jk.target));
          if (i == 1) CHECK(g_ij_k == b_three_tensor(f, j, k));
        }
      }
    CHECK(a0_matrix_B(f) == a0_matrix_B(other));
    CHECK(testing::char_poly_is(a0_matrix_B(f), critical_spectrum_check(f).constant_expected));
  }
}
