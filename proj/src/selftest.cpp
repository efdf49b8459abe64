#include "orbimirror/selftest.hpp"

#include <algorithm>
#include <functional>

#include "orbimirror/quantum.hpp"
#include "orbimirror/wdvv.hpp"

namespace orbimirror {

namespace {

std::string name_of(const BasisClass& c) { return "eta(" + to_string(c.g.gamma) + ";" + std::to_string(c.d) + ")"; }

/// Runs one check. The body returns an empty string on success, otherwise a
/// description of the first counterexample.
void run_check(Report& report, const std::string& check, const std::string& summary,
               const std::function<std::string()>& body) {
  try {
    const std::string problem = body();
    if (problem.empty())
      report.note(check, summary);
    else
      report.fail(check, problem);
  } catch (const std::exception& e) {
    report.status = Status::Error;
    report.findings.push_back({check, std::string("error: ") + e.what()});
  }
}

Rational pairing_at_q1(const Weights& w, const CohClass& a, const BasisClass& b) { return pairing(w, a, CohClass(b)); }

}  // namespace

Report run_selftest(const Weights& w, const SelftestOptions& options) {
  Report report;
  const auto mu = static_cast<std::size_t>(w.mu());
  const auto all = sectors(w);
  const OrderedBasis basis(w);
  const auto s = s_sequence(w);
  const auto sig = sigma(w);

  run_check(report, "basis_count", "the basis has mu = " + std::to_string(mu) + " classes", [&]() -> std::string {
    if (basis.size() != mu) return std::to_string(basis.size()) + " classes, expected " + std::to_string(mu);
    std::size_t total = 0;
    for (const auto& g : all) total += i_set(w, g).size();
    if (total != mu) return "sum of |I(g)| is " + std::to_string(total);
    return {};
  });

  run_check(report, "comb_kmin", "closed-form k_min equals the first occurrence in s", [&]() -> std::string {
    for (const auto& g : all) {
      const auto closed = k_min(w, g);
      const auto scanned = k_min_by_scan(s, g.gamma);
      if (closed != scanned)
        return "gamma " + to_string(g.gamma) + ": closed form " + std::to_string(closed) + ", scan " + std::to_string(scanned);
    }
    return {};
  });

  run_check(report, "comb_sigma", "sigma(k_min(g^-1)+d) = d + age(g)", [&]() -> std::string {
    for (const auto& c : basis.classes()) {
      const auto k = static_cast<std::size_t>(k_min(w, c.g.inverse()) + c.d);
      if (k >= mu || sig[k] != c.d + age(w, c.g))
        return name_of(c) + ": index " + std::to_string(k) + " has the wrong spectrum value";
    }
    return {};
  });

  run_check(report, "comb_duality", "index sums hit n mod mu exactly on Poincare-dual pairs", [&]() -> std::string {
    const auto n = w.n();
    const auto m = static_cast<std::int64_t>(mu);
    for (const auto& a : basis.classes())
      for (const auto& b : basis.classes()) {
        const auto sum = k_min(w, a.g.inverse()) + a.d + k_min(w, b.g.inverse()) + b.d;
        const bool congruent = ((sum - n) % m + m) % m == 0;
        const bool dual = (a.g * b.g).is_identity() && a.d + b.d == sector_dim(w, a.g);
        if (congruent != dual) return name_of(a) + ", " + name_of(b) + ": congruence and duality disagree";
      }
    return {};
  });

  run_check(report, "age_inversion", "age(g) + age(g^-1) = n - dim(g)", [&]() -> std::string {
    for (const auto& g : all)
      if (age(w, g) + age(w, g.inverse()) != w.n() - sector_dim(w, g)) return "fails at gamma " + to_string(g.gamma);
    return {};
  });

  const RationalMatrix gram = gram_matrix(w);
  run_check(report, "a_infty_duality_A", "A_infty + A_infty* = n Id on the A side", [&]() -> std::string {
    if (!gram.is_symmetric()) return "gram matrix is not symmetric";
    if (sgn(gram.determinant()) == 0) return "gram matrix is singular";
    if (!satisfies_a_infty_duality(a_infty_A(w), gram, w.n())) return "G A + A^T G != n G";
    return {};
  });

  run_check(report, "cup_unit", "eta(0;0) is a two-sided unit", [&]() -> std::string {
    const BasisClass one{Sector(), 0};
    for (const auto& c : basis.classes()) {
      const auto left = cup(w, one, c);
      const auto right = cup(w, c, one);
      if (!left || left->coeff != 1 || !(left->out == c)) return "1 x " + name_of(c) + " != " + name_of(c);
      if (!right || right->coeff != 1 || !(right->out == c)) return name_of(c) + " x 1 != " + name_of(c);
    }
    return {};
  });

  run_check(report, "cup_commutative_graded", "cup is commutative and additive in degree", [&]() -> std::string {
    for (std::size_t a = 0; a < mu; ++a)
      for (std::size_t b = 0; b < mu; ++b) {
        const auto ab = cup(w, basis[a], basis[b]);
        const auto ba = cup(w, basis[b], basis[a]);
        if (ab.has_value() != ba.has_value() || (ab && (ab->coeff != ba->coeff || !(ab->out == ba->out))))
          return name_of(basis[a]) + " and " + name_of(basis[b]) + " do not commute";
        if (ab && degree(w, ab->out) != basis.degree(a) + basis.degree(b))
          return name_of(basis[a]) + " x " + name_of(basis[b]) + " has the wrong degree";
      }
    return {};
  });

  run_check(report, "cup_associative", "(a b) c = a (b c) on all basis triples", [&]() -> std::string {
    std::vector<CohClass> single;
    for (const auto& c : basis.classes()) single.emplace_back(c);
    for (std::size_t a = 0; a < mu; ++a)
      for (std::size_t b = 0; b < mu; ++b) {
        const CohClass ab = cup(w, single[a], single[b]);
        for (std::size_t c = 0; c < mu; ++c) {
          const CohClass lhs = cup(w, ab, single[c]);
          const CohClass rhs = cup(w, single[a], cup(w, single[b], single[c]));
          if (!(lhs == rhs))
            return "(" + name_of(basis[a]) + " " + name_of(basis[b]) + ") " + name_of(basis[c]) + " differs";
        }
      }
    return {};
  });

  run_check(report, "cup_frobenius", "<a b, c> = <a, b c> on all basis triples", [&]() -> std::string {
    std::vector<CohClass> single;
    for (const auto& c : basis.classes()) single.emplace_back(c);
    for (std::size_t a = 0; a < mu; ++a)
      for (std::size_t b = 0; b < mu; ++b) {
        const CohClass ab = cup(w, single[a], single[b]);
        for (std::size_t c = 0; c < mu; ++c) {
          const Rational lhs = pairing_at_q1(w, ab, basis[c]);
          const Rational rhs = pairing(w, single[a], cup(w, single[b], single[c]));
          if (lhs != rhs)
            return "<" + name_of(basis[a]) + " " + name_of(basis[b]) + ", " + name_of(basis[c]) + "> = " + to_string(lhs) +
                   " but <a, b c> = " + to_string(rhs);
        }
      }
    return {};
  });

  const OmegaFrame frame(w);
  const RationalMatrix bgram = b_metric_matrix(frame);
  run_check(report, "omega_recursion", "|a(k)| = k and min_j a(k)_j/w_j = s(k)", [&]() -> std::string {
    for (std::size_t k = 0; k < frame.a().size(); ++k) {
      const auto& ak = frame.a()[k];
      std::int64_t total = 0;
      Rational least = -1;
      for (std::size_t j = 0; j < ak.size(); ++j) {
        total += ak[j];
        const Rational r = make_rational(ak[j], w[j]);
        if (least < 0 || r < least) least = r;
      }
      if (total != static_cast<std::int64_t>(k)) return "|a(" + std::to_string(k) + ")| = " + std::to_string(total);
      if (k < mu && least != s[k]) return "a(" + std::to_string(k) + ") gives " + to_string(least) + " not s(k)";
    }
    return {};
  });

  run_check(report, "a_infty_duality_B", "A_infty + A_infty* = n Id on the B side", [&]() -> std::string {
    if (!bgram.is_symmetric()) return "metric is not symmetric";
    if (sgn(bgram.determinant()) == 0) return "metric is singular";
    if (!satisfies_a_infty_duality(a_infty_B(frame), bgram, w.n())) return "G A + A^T G != n G";
    return {};
  });

  run_check(report, "b_product_associative", "(e_i e_j) e_k = e_i (e_j e_k)", [&]() -> std::string {
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) {
        const auto ij = b_product(frame, i, j);
        for (std::size_t k = 0; k < mu; ++k) {
          const auto lhs = b_product(frame, ij.target, k);
          const auto jk = b_product(frame, j, k);
          const auto rhs = b_product(frame, i, jk.target);
          if (ij.coeff * lhs.coeff != jk.coeff * rhs.coeff || lhs.target != rhs.target)
            return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
      }
    return {};
  });

  run_check(report, "b_product_frobenius", "g(e_i e_j, e_k) = g(e_i, e_j e_k) and matches the 3-tensor",
            [&]() -> std::string {
              for (std::size_t i = 0; i < mu; ++i)
                for (std::size_t j = 0; j < mu; ++j) {
                  const auto ij = b_product(frame, i, j);
                  for (std::size_t k = 0; k < mu; ++k) {
                    const auto jk = b_product(frame, j, k);
                    const Rational lhs = ij.coeff * b_metric(frame, ij.target, k);
                    if (lhs != jk.coeff * b_metric(frame, i, jk.target))
                      return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
                    if (i == 1 && mu > 1 && lhs != b_three_tensor(frame, j, k))
                      return "3-tensor (1," + std::to_string(j) + "," + std::to_string(k) + ")";
                  }
                }
              return {};
            });

  run_check(report, "newton_filtration", "nonzero products never raise the spectrum", [&]() -> std::string {
    const auto& bs = frame.sigma();
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) {
        const auto p = b_product(frame, i, j);
        if (sgn(p.coeff) != 0 && bs[i] + bs[j] < bs[p.target])
          return "e_" + std::to_string(i) + " e_" + std::to_string(j);
      }
    return {};
  });

  run_check(report, "tie_invariance", "B-side outputs agree for both tie orders", [&]() -> std::string {
    const OmegaFrame other(w, TieOrder::DescendingSource);
    if (frame.s().values != other.s().values) return "s-values differ";
    if (frame.sigma() != other.sigma()) return "spectra differ";
    for (std::size_t i = 0; i < mu; ++i)
      for (std::size_t j = 0; j < mu; ++j) {
        const auto p = b_product(frame, i, j);
        const auto q = b_product(other, i, j);
        if (p.coeff != q.coeff || p.target != q.target)
          return "product e_" + std::to_string(i) + " e_" + std::to_string(j);
        if (b_metric(frame, i, j) != b_metric(other, i, j)) return "metric (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
    if (!(a0_matrix_B(frame) == a0_matrix_B(other))) return "A0 matrices differ";
    if (mu > 1)
      for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t k = 0; k < mu; ++k)
          if (b_three_tensor(frame, j, k) != b_three_tensor(other, j, k))
            return "3-tensor (1," + std::to_string(j) + "," + std::to_string(k) + ")";
    return {};
  });

  run_check(report, "spectrum_B", "det(X - A0) = X^mu - mu^mu prod w^-w on the B side", [&]() -> std::string {
    return critical_spectrum_check(frame).ok ? std::string() : "characteristic polynomial differs";
  });

  if (w.n() >= 1) {
    run_check(report, "spectrum_A", "det(X - A0) = X^mu - mu^mu prod w^-w on the A side at Q=1", [&]() -> std::string {
      return critical_spectrum_check(w, a0_matrix_A(w)).ok ? std::string() : "characteristic polynomial differs";
    });

    run_check(report, "appendix_relations", "(eta_1^1)^mu = Q prod w^-w and the k_min powers", [&]() -> std::string {
      Rational top = 1;
      for (auto wi : w.values()) top *= power(wi, -wi);
      const CohClass one(BasisClass{Sector(), 0});
      const CohClass full = quantum_hyperplane_power(w, one, w.mu());
      if (!(full == CohClass(BasisClass{Sector(), 0}, QPoly(top, 1)))) return "(eta_1^1)^mu is not Q prod w^-w";
      for (const auto& g : all) {
        if (g.is_identity()) continue;
        const CohClass lhs = quantum_hyperplane_power(w, one, k_min(w, g));
        const CohClass rhs(BasisClass{g.inverse(), 0}, QPoly(s_k(w, g), g.gamma));
        if (!(lhs == rhs)) return "(eta_1^1)^k_min at gamma " + to_string(g.gamma);
        const auto ratio = s_k_ratio(w, g);
        if (ratio && *ratio != s_k(w, g)) return "s_k ratio differs at gamma " + to_string(g.gamma);
      }
      return {};
    });

    run_check(report, "q_degree", "eta_1^1 * raises deg/2 + mu * (Q exponent) by exactly 1", [&]() -> std::string {
      for (std::size_t a = 0; a < mu; ++a) {
        const CohClass image = quantum_mult_hyperplane(w, CohClass(basis[a]));
        for (const auto& [b, q] : image.terms())
          for (const auto& [e, c] : q.terms())
            if (degree(w, b) / 2 + w.mu() * e != basis.degree(a) / 2 + 1) return "eta_1^1 * " + name_of(basis[a]);
      }
      return {};
    });

    run_check(report, "three_point_column", "<(eta_1^1 * a)|Q=1, b> = ((eta_1^1, a, b))", [&]() -> std::string {
      for (std::size_t a = 0; a < mu; ++a) {
        const CohClass image = quantum_mult_hyperplane(w, CohClass(basis[a]));
        for (std::size_t b = 0; b < mu; ++b)
          if (pairing(w, image, CohClass(basis[b])) != three_point(w, basis[a], basis[b]))
            return name_of(basis[a]) + ", " + name_of(basis[b]);
      }
      return {};
    });

    run_check(report, "cubic_mirror", "A_{1jk}(0) equals ((eta_1^1, a, b)) through xi", [&]() -> std::string {
      const MirrorIndexMap xi(w);
      const auto cubic = initial_coeffs(frame);
      for (std::size_t j = 0; j < mu; ++j)
        for (std::size_t k = 0; k < mu; ++k) {
          std::array<std::size_t, 3> key{1, j, k};
          std::sort(key.begin(), key.end());
          const auto it = cubic.find(key);
          const Rational value = it == cubic.end() ? Rational(0) : it->second;
          if (value != three_point(w, basis[xi.inverse(j)], basis[xi.inverse(k)]))
            return "(1," + std::to_string(j) + "," + std::to_string(k) + ")";
        }
      return {};
    });

    run_check(report, "triple_test_value", "every 3-point test value is an integer", [&]() -> std::string {
      for (const auto& a : basis.classes())
        for (const auto& b : basis.classes()) classify_triple(w, a, b);
      return {};
    });

    run_check(report, "mirror_classical", "classical mirror check passes", [&]() -> std::string {
      const Report r = check_classical(w);
      return r.passed() ? std::string() : r.findings.front().check + ": " + r.findings.front().detail;
    });
    run_check(report, "mirror_quantum", "quantum mirror check passes", [&]() -> std::string {
      const Report r = check_quantum(w);
      return r.passed() ? std::string() : r.findings.front().check + ": " + r.findings.front().detail;
    });

    if (w.mu() <= options.wdvv_max_mu) {
      run_check(report, "wdvv", "reconstruction to length " + std::to_string(options.wdvv_max_length) +
                                    " satisfies every WDVV equation", [&]() -> std::string {
        const Potential p = reconstruct(w, options.wdvv_max_length);
        const auto failure = find_nonzero_residual(p);
        if (!failure) return {};
        std::string alpha;
        for (auto v : failure->alpha) alpha += std::to_string(v);
        return "equation (" + std::to_string(failure->equation[0]) + "," + std::to_string(failure->equation[1]) + "," +
               std::to_string(failure->equation[2]) + "," + std::to_string(failure->equation[3]) + ") at alpha " + alpha +
               " has residual " + to_string(failure->value);
      });
    }
  }
  return report;
}

}  // namespace orbimirror
