#pragma once

// Mirror checkers: the index bijection Ξ: η_g^d ↦ ω_{k_min(g^{-1})+d} and the
// exhaustive comparisons of the classical and quantum data it transports.

#include <string>
#include <vector>

#include "orbimirror/bside.hpp"
#include "orbimirror/cohomology.hpp"

namespace orbimirror {

class MirrorIndexMap {
 public:
  /// Throws ConsistencyError if the map fails to be a bijection onto 0..μ-1.
  explicit MirrorIndexMap(const Weights& w);

  /// B-side index of the A-side basis entry at position a (ordered basis).
  std::size_t forward(std::size_t a) const { return forward_[a]; }
  std::size_t inverse(std::size_t k) const { return inverse_[k]; }
  std::size_t size() const { return forward_.size(); }
  const OrderedBasis& basis() const { return basis_; }

  std::size_t operator()(const BasisClass& c) const { return forward_[basis_.index_of(c)]; }

 private:
  OrderedBasis basis_;
  std::vector<std::size_t> forward_;
  std::vector<std::size_t> inverse_;
};

MirrorIndexMap xi_map(const Weights& w);

enum class Status { Pass, Fail, Error };

std::string_view to_string(Status status);

/// One structured line of a report: which check, and what was found.
struct Finding {
  std::string check;
  std::string detail;
};

struct Report {
  Status status = Status::Pass;
  std::vector<Finding> findings;

  bool passed() const { return status == Status::Pass; }
  void fail(std::string check, std::string detail);
  void note(std::string check, std::string detail);
};

/// Pairings, graded products and gradings agree under Ξ.
Report check_classical(const Weights& w);

/// Gram matrices, A0 (A side at Q = 1), A∞, unit and 3-tensors agree under Ξ.
Report check_quantum(const Weights& w);

}  // namespace orbimirror
