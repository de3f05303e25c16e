#pragma once

#include <optional>
#include <string>
#include <vector>

#include "yblie/graded.hpp"

namespace yblie {

/// Coordinates and values of the first differing matrix entry of a failed
/// axiom, scanned row-major.
struct Witness {
  std::size_t row = 0;
  std::size_t col = 0;
  Scalar lhs;
  Scalar rhs;
};

struct AxiomResult {
  std::string name;
  bool pass = false;
  std::optional<Witness> witness;  // present iff !pass
};

/// Per-axiom pass/fail summary.  Checkers never fail fast: every axiom of a
/// definition gets an entry, diagnostics stay complete even after the first
/// failure.
class CheckReport {
 public:
  const std::vector<AxiomResult>& axioms() const { return axioms_; }
  bool all_pass() const;
  const AxiomResult* find(const std::string& name) const;
  /// Names of the failing axioms, in report order.
  std::vector<std::string> failing() const;

  /// Records lhs == rhs as one axiom entry.
  void require_equal(const std::string& name, const ExactMorphism& lhs,
                     const ExactMorphism& rhs);
  /// Records f == 0 as one axiom entry.
  void require_zero(const std::string& name, const ExactMorphism& f);
  void add(AxiomResult r) { axioms_.push_back(std::move(r)); }
  /// Appends another report's entries under "prefix.".
  void merge(const std::string& prefix, const CheckReport& sub);

 private:
  std::vector<AxiomResult> axioms_;
};

}  // namespace yblie
