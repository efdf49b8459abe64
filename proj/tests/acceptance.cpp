// Acceptance run: one PASS/FAIL line per criterion, with its time budget.

#include <chrono>
#include <functional>
#include <iostream>

#include "orbimirror/mirror.hpp"
#include "orbimirror/quantum.hpp"
#include "orbimirror/selftest.hpp"
#include "orbimirror/wdvv.hpp"
#include "support.hpp"

using namespace orbimirror;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<Weights> suite_weights() {
  std::vector<Weights> out;
  for (const auto& v : testing::suite()) out.emplace_back(v);
  return out;
}

Outcome reference_table() {
  Outcome o;
  const Weights w{1, 2, 2, 3, 3, 3};
  const OrderedBasis basis(w);
  const auto& table = testing::reference_cup_table();
  o.require(basis.size() == 14 && table.size() == 14, "basis size");
  for (std::size_t r = 0; r < basis.size() && o.ok; ++r)
    for (std::size_t c = r; c < basis.size(); ++c) {
      const auto expected = testing::parse_reference_cell(table[r][c - r]);
      for (const auto& t : {cup(w, basis[r], basis[c]), cup(w, basis[c], basis[r])}) {
        const bool match = t.has_value() == !expected.zero &&
                           (!t || (t->coeff == expected.coeff && t->out == expected.out));
        o.require(match, "entry (" + std::to_string(r) + "," + std::to_string(c) + ")");
      }
    }
  return o;
}

Outcome mirror_suite(bool quantum) {
  Outcome o;
  for (const auto& w : suite_weights()) {
    const Report r = quantum ? check_quantum(w) : check_classical(w);
    o.require(r.passed(), w.to_string() + ": " + (r.findings.empty() ? "" : r.findings.front().detail));
  }
  return o;
}

Outcome spectral() {
  Outcome o;
  for (const auto& w : suite_weights()) {
    Rational constant = -Rational(power(w.mu(), w.mu()));
    for (auto wi : w.values()) constant *= power(wi, -wi);
    o.require(testing::char_poly_is(a0_matrix_B(OmegaFrame(w)), constant), w.to_string() + " B side");
    o.require(testing::char_poly_is(a0_matrix_A(w), constant), w.to_string() + " A side");
    o.require(critical_spectrum_check(OmegaFrame(w)).ok, w.to_string() + " Hessenberg B side");
  }
  return o;
}

Outcome appendix() {
  Outcome o;
  for (const auto& w : suite_weights()) {
    Rational top = 1;
    for (auto wi : w.values()) top *= power(wi, -wi);
    const CohClass one(BasisClass{Sector(), 0});
    o.require(quantum_hyperplane_power(w, one, w.mu()) == CohClass(BasisClass{Sector(), 0}, QPoly(top, 1)),
              w.to_string() + ": (eta_1^1)^mu");
    for (const auto& g : sectors(w)) {
      if (g.is_identity()) continue;
      o.require(quantum_hyperplane_power(w, one, k_min(w, g)) ==
                    CohClass(BasisClass{g.inverse(), 0}, QPoly(s_k(w, g), g.gamma)),
                w.to_string() + ": k_min power at " + to_string(g.gamma));
      const auto ratio = s_k_ratio(w, g);
      if (ratio) o.require(*ratio == s_k(w, g), w.to_string() + ": s_k ratio at " + to_string(g.gamma));
    }
  }
  return o;
}

Outcome reconstruction_p2() {
  Outcome o;
  const auto oracle = testing::kontsevich_numbers(4);
  const Potential p = reconstruct(Weights{1, 1, 1}, 11);
  o.require(p.at(MultiIndex{0, 1, 2}) == 1 && p.at(MultiIndex{0, 1, 2}) == Rational(oracle[1]), "A(0,1,2)");
  for (int d = 2; d <= 4; ++d)
    o.require(p.at(MultiIndex{0, 0, 3 * d - 1}) == Rational(oracle[d]), "A(0,0," + std::to_string(3 * d - 1) + ")");
  o.require(oracle[1] == 1 && oracle[2] == 1 && oracle[3] == 12 && oracle[4] == 620, "oracle values");
  return o;
}

Outcome reconstruction_p1() {
  Outcome o;
  const Potential p = reconstruct(Weights{1, 1}, 8);
  for (int k = 3; k <= 8; ++k) o.require(p.at(MultiIndex{0, k}) == 1, "A(0," + std::to_string(k) + ")");
  return o;
}

Outcome overdetermination() {
  Outcome o;
  for (const auto& w : suite_weights()) {
    if (w.mu() > 5) continue;
    const Potential p = reconstruct(w, 7);
    const auto failure = find_nonzero_residual(p);
    o.require(!failure, w.to_string() + (failure ? ": residual " + to_string(failure->value) : ""));
  }
  return o;
}

Outcome selftests() {
  Outcome o;
  for (const auto& w : suite_weights()) {
    const Report r = run_selftest(w);
    o.require(r.passed(), w.to_string() + ": " + (r.passed() ? "" : r.findings.back().check));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "cup table of P(1,2,2,3,3,3) matches the reference table", 1, reference_table},
      {2, "classical mirror check on the suite", 5, [] { return mirror_suite(false); }},
      {3, "quantum mirror check on the suite", 5, [] { return mirror_suite(true); }},
      {4, "det(X - A0) = X^mu - mu^mu prod w^-w on both sides", 60, spectral},
      {5, "appendix relations and s_k", 60, appendix},
      {6, "WDVV reconstruction: P^2 to length 11 and P^1 to length 8",
       60,
       [] {
         Outcome o = reconstruction_p2();
         const auto start = std::chrono::steady_clock::now();
         const Outcome p1 = reconstruction_p1();
         const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
         o.require(p1.ok, "P^1 " + p1.detail);
         o.require(seconds < 1, "P^1 took " + std::to_string(seconds) + " s");
         return o;
       }},
      {7, "all WDVV residuals vanish (length 7, mu <= 5)", 120, overdetermination},
      {8, "selftest property suites on the suite", 60, selftests},
  };

  int failures = 0;
  std::cout << "suite: ";
  for (const auto& w : suite_weights()) std::cout << w.to_string() << " ";
  std::cout << "\n";
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && seconds >= c.budget_seconds) {
      o.ok = false;
      o.detail = "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.3f s", seconds);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << " (" << timing << ")";
    if (!o.ok) std::cout << " -- " << o.detail;
    std::cout << "\n";
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
