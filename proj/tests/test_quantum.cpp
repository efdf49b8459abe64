#include "doctest.h"
#include "orbimirror/quantum.hpp"
#include "support.hpp"

using namespace orbimirror;
using testing::eta;
using testing::q;

TEST_CASE("expected curve degree") {
  CHECK(expected_curve_degree(Weights{1, 1, 1}, eta("0", 1), eta("0", 0)) == 0);
  CHECK(expected_curve_degree(Weights{1, 1, 1, 1}, eta("0", 2), eta("0", 0)) == 0);
  CHECK(expected_curve_degree(Weights{1, 2}, eta("0", 1), eta("1/2", 0)) == q("3/2"));
  CHECK(expected_curve_degree(Weights{1, 1, 1}, eta("0", 2), eta("0", 2)) == 3);
}

TEST_CASE("triple classification") {
  const Weights w{1, 2};
  CHECK(classify_triple(w, eta("0", 0), eta("0", 1)).kind == TripleKind::Vanishing);
  CHECK(classify_triple(w, eta("0", 0), eta("0", 1)).test_value == 1);
  CHECK(classify_triple(w, eta("0", 0), eta("0", 0)).kind == TripleKind::Classical);
  CHECK(classify_triple(w, eta("0", 1), eta("0", 1)).kind == TripleKind::Vanishing);
  const auto quantum = classify_triple(w, eta("0", 1), eta("1/2", 0));
  CHECK(quantum.kind == TripleKind::Quantum);
  CHECK(quantum.test_value == 3);
  CHECK(classify_triple(Weights{1, 1, 1}, eta("0", 2), eta("0", 2)).kind == TripleKind::Quantum);
  CHECK(to_string(TripleKind::Classical) == "CLASSICAL");
}

TEST_CASE("three-point numbers") {
  CHECK(three_point(Weights{1, 2}, eta("0", 1), eta("1/2", 0)) == q("1/4"));
  CHECK(three_point(Weights{1, 2}, eta("0", 0), eta("0", 0)) == q("1/2"));
  CHECK(three_point(Weights{1, 1, 1}, eta("0", 2), eta("0", 2)) == 1);
  CHECK(three_point(Weights{1, 2}, eta("0", 0), eta("0", 1)) == 0);

  // On P^n, ((h, h^n, h^n)) = 1 exactly when 1 + n + n ≡ n mod n+1.
  for (std::int64_t n = 1; n <= 5; ++n) {
    const Weights w(std::vector<std::int64_t>(n + 1, 1));
    const bool expected = (1 + 2 * n - n) % (n + 1) == 0;
    CHECK(three_point(w, eta("0", n), eta("0", n)) == (expected ? 1 : 0));
  }
}

TEST_CASE("s_k closed form and ratio") {
  CHECK(s_k(Weights{1, 2}, Sector()) == 1);
  CHECK(s_k(Weights{1, 2}, Sector(q("1/2"))) == q("1/2"));
  CHECK(s_k(Weights{1, 2, 2, 3, 3, 3}, Sector(q("1/3"))) == q("1/108"));
  for (const auto& v : testing::suite()) {
    const Weights w(v);
    for (const auto& g : sectors(w)) {
      const auto ratio = s_k_ratio(w, g);
      if (ratio) CHECK(*ratio == s_k(w, g));
    }
  }
}

TEST_CASE("multiplication by the hyperplane class") {
  const Weights w{1, 2};
  CHECK(quantum_mult_hyperplane(w, CohClass(eta("0", 1))) == CohClass(eta("1/2", 0), QPoly(q("1/2"), q("1/2"))));
  CHECK(quantum_mult_hyperplane(w, CohClass(eta("1/2", 0))) == CohClass(eta("0", 0), QPoly(q("1/2"), q("1/2"))));
  CHECK(quantum_mult_hyperplane(w, CohClass(eta("0", 0))) == CohClass(eta("0", 1)));
  CHECK(quantum_mult_hyperplane(Weights{1, 1, 1}, CohClass(eta("0", 2))) == CohClass(eta("0", 0), QPoly(1, 1)));
  CHECK_THROWS_AS(quantum_mult_hyperplane(Weights{3}, CohClass(eta("0", 0))), std::invalid_argument);
}

TEST_CASE("appendix relations on the suite") {
  for (const auto& v : testing::suite()) {
    const Weights w(v);
    CAPTURE(w.to_string());
    Rational top = 1;
    for (auto wi : w.values()) top *= power(wi, -wi);
    const CohClass one(eta("0", 0));
    CHECK(quantum_hyperplane_power(w, one, w.mu()) == CohClass(eta("0", 0), QPoly(top, 1)));
    for (const auto& g : sectors(w)) {
      if (g.is_identity()) continue;
      CHECK(quantum_hyperplane_power(w, one, k_min(w, g)) ==
            CohClass(BasisClass{g.inverse(), 0}, QPoly(s_k(w, g), g.gamma)));
    }
  }
}

TEST_CASE("A0 on the A side") {
  RationalMatrix p2(3, 3);
  p2(1, 0) = 3; p2(2, 1) = 3; p2(0, 2) = 3;
  CHECK(a0_matrix_A(Weights{1, 1, 1}) == p2);

  RationalMatrix m(3, 3);
  m(1, 0) = 3; m(2, 1) = q("3/2"); m(0, 2) = q("3/2");
  CHECK(a0_matrix_A(Weights{1, 2}) == m);
  CHECK(testing::char_poly_is(a0_matrix_A(Weights{1, 2}), q("-27/4")));
}

TEST_CASE("expected dimension") {
  const std::vector<Sector> identity(3);
  CHECK(expected_dim(Weights{1, 1, 1}, 3, 0, identity) == 4);
  CHECK(expected_dim(Weights{1, 1, 1}, 3, 1, identity) == 10);
  const std::vector<Sector> twisted{Sector(), Sector(), Sector(q("1/2"))};
  CHECK(expected_dim(Weights{1, 2}, 3, q("1/6"), twisted) == 2);
  CHECK_THROWS_AS(expected_dim(Weights{1, 2}, 2, 0, twisted), std::invalid_argument);
}
