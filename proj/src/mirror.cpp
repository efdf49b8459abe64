#include "orbimirror/mirror.hpp"

#include "orbimirror/quantum.hpp"

namespace orbimirror {

namespace {

std::string name_of(const BasisClass& c) { return "eta(" + to_string(c.g.gamma) + ";" + std::to_string(c.d) + ")"; }

}  // namespace

MirrorIndexMap::MirrorIndexMap(const Weights& w) : basis_(w) {
  const auto mu = static_cast<std::size_t>(w.mu());
  forward_.resize(basis_.size());
  inverse_.assign(mu, mu);
  if (basis_.size() != mu)
    throw ConsistencyError("xi_map: basis has " + std::to_string(basis_.size()) + " classes, expected " + std::to_string(mu));
  for (std::size_t a = 0; a < basis_.size(); ++a) {
    const auto& c = basis_[a];
    const auto k = static_cast<std::size_t>(k_min(w, c.g.inverse()) + c.d);
    if (k >= mu || inverse_[k] != mu)
      throw ConsistencyError("xi_map: " + name_of(c) + " maps to index " + std::to_string(k) + " which is out of range or taken");
    forward_[a] = k;
    inverse_[k] = a;
  }
}

MirrorIndexMap xi_map(const Weights& w) { return MirrorIndexMap(w); }

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Error: return "ERROR";
  }
  return "?";
}

void Report::fail(std::string check, std::string detail) {
  if (status == Status::Pass) status = Status::Fail;
  findings.push_back({std::move(check), std::move(detail)});
}

void Report::note(std::string check, std::string detail) { findings.push_back({std::move(check), std::move(detail)}); }

Report check_classical(const Weights& w) {
  Report report;
  const MirrorIndexMap xi(w);
  const OmegaFrame frame(w);
  const auto& basis = xi.basis();
  const auto& sig = frame.sigma();
  const std::size_t mu = basis.size();

  bool grading_ok = true;
  for (std::size_t a = 0; a < mu && grading_ok; ++a)
    if (basis.degree(a) / 2 != sig[xi.forward(a)]) {
      grading_ok = false;
      report.fail("grading", name_of(basis[a]) + ": deg/2 = " + to_string(basis.degree(a) / 2) + " but sigma(" +
                                 std::to_string(xi.forward(a)) + ") = " + to_string(sig[xi.forward(a)]));
    }

  bool pairing_ok = true;
  for (std::size_t a = 0; a < mu && pairing_ok; ++a)
    for (std::size_t b = 0; b < mu && pairing_ok; ++b) {
      const Rational lhs = pairing(w, basis[a], basis[b]);
      const Rational rhs = b_metric(frame, xi.forward(a), xi.forward(b));
      if (lhs != rhs) {
        pairing_ok = false;
        report.fail("pairing", "<" + name_of(basis[a]) + "," + name_of(basis[b]) + "> = " + to_string(lhs) + " but g(e_" +
                                   std::to_string(xi.forward(a)) + ",e_" + std::to_string(xi.forward(b)) + ") = " + to_string(rhs));
      }
    }

  bool product_ok = true;
  for (std::size_t a = 0; a < mu && product_ok; ++a)
    for (std::size_t b = 0; b < mu && product_ok; ++b) {
      const auto ka = xi.forward(a);
      const auto kb = xi.forward(b);
      const auto cupped = cup(w, basis[a], basis[b]);
      const auto bp = b_product(frame, ka, kb);
      const bool graded = sig[ka] + sig[kb] == sig[bp.target];
      std::string problem;
      if (cupped && !graded) {
        problem = "cup is nonzero but the B-side product drops Newton degree";
      } else if (!cupped && graded) {
        problem = "cup vanishes but the graded B-side product is " + to_string(bp.coeff) + "*e_" + std::to_string(bp.target);
      } else if (cupped) {
        const auto kout = xi(cupped->out);
        if (kout != bp.target || cupped->coeff != bp.coeff)
          problem = "cup = " + to_string(cupped->coeff) + "*" + name_of(cupped->out) + " (xi -> e_" + std::to_string(kout) +
                    ") but B-side = " + to_string(bp.coeff) + "*e_" + std::to_string(bp.target);
      }
      if (!problem.empty()) {
        product_ok = false;
        report.fail("product", name_of(basis[a]) + " x " + name_of(basis[b]) + " (e_" + std::to_string(ka) + ", e_" +
                                   std::to_string(kb) + "): " + problem);
      }
    }

  if (report.passed())
    report.note("classical", "grading, pairing and graded product agree on all " + std::to_string(mu * mu) + " basis pairs");
  return report;
}

Report check_quantum(const Weights& w) {
  Report report;
  const MirrorIndexMap xi(w);
  const OmegaFrame frame(w);
  const auto& basis = xi.basis();
  const std::size_t mu = basis.size();

  const RationalMatrix gram_a = gram_matrix(w);
  const RationalMatrix gram_b = b_metric_matrix(frame);
  const RationalMatrix a0_a = a0_matrix_A(w);
  const RationalMatrix a0_b = a0_matrix_B(frame);
  const RationalMatrix ainf_a = a_infty_A(w);
  const RationalMatrix ainf_b = a_infty_B(frame);

  // Conjugating by the permutation of Ξ amounts to reindexing entries.
  auto compare = [&](const char* check, const RationalMatrix& ma, const RationalMatrix& mb) {
    for (std::size_t r = 0; r < mu; ++r)
      for (std::size_t c = 0; c < mu; ++c)
        if (ma(r, c) != mb(xi.forward(r), xi.forward(c))) {
          report.fail(check, "entry (" + name_of(basis[r]) + "," + name_of(basis[c]) + "): A-side " + to_string(ma(r, c)) +
                                 " vs B-side (" + std::to_string(xi.forward(r)) + "," + std::to_string(xi.forward(c)) +
                                 ") " + to_string(mb(xi.forward(r), xi.forward(c))));
          return;
        }
  };
  compare("gram", gram_a, gram_b);
  compare("a0", a0_a, a0_b);
  compare("a_infty", ainf_a, ainf_b);

  if (xi(BasisClass{Sector(), 0}) != 0) report.fail("unit", "xi(eta(0;0)) != 0");
  if (xi(BasisClass{Sector(), 1}) != 1) report.fail("hyperplane", "xi(eta(0;1)) != 1");

  bool tensor_ok = true;
  for (std::size_t a = 0; a < mu && tensor_ok; ++a)
    for (std::size_t b = 0; b < mu && tensor_ok; ++b) {
      const Rational lhs = three_point(w, basis[a], basis[b]);
      const Rational rhs = b_three_tensor(frame, xi.forward(a), xi.forward(b));
      if (lhs != rhs) {
        tensor_ok = false;
        report.fail("three_tensor", "((eta(0;1)," + name_of(basis[a]) + "," + name_of(basis[b]) + ")) = " + to_string(lhs) +
                                        " but ((w_1,w_" + std::to_string(xi.forward(a)) + ",w_" +
                                        std::to_string(xi.forward(b)) + ")) = " + to_string(rhs));
      }
    }

  if (report.passed())
    report.note("quantum", "gram, A0 (Q=1), A_infty, unit and 3-tensor agree under xi for mu = " + std::to_string(mu));
  return report;
}

}  // namespace orbimirror
