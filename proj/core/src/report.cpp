#include "yblie/report.hpp"

namespace yblie {

bool CheckReport::all_pass() const {
  for (const auto& a : axioms_)
    if (!a.pass) return false;
  return true;
}

const AxiomResult* CheckReport::find(const std::string& name) const {
  for (const auto& a : axioms_)
    if (a.name == name) return &a;
  return nullptr;
}

std::vector<std::string> CheckReport::failing() const {
  std::vector<std::string> out;
  for (const auto& a : axioms_)
    if (!a.pass) out.push_back(a.name);
  return out;
}

void CheckReport::require_equal(const std::string& name, const ExactMorphism& lhs,
                                const ExactMorphism& rhs) {
  AxiomResult r;
  r.name = name;
  const Matrix& a = lhs.mat();
  const Matrix& b = rhs.mat();
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    // Shape trouble should have been caught earlier; surface it as a failure
    // with a zero witness rather than crashing mid-report.
    r.pass = false;
    r.witness = Witness{0, 0, Scalar::zero(a.field()), Scalar::zero(b.field())};
    axioms_.push_back(std::move(r));
    return;
  }
  r.pass = true;
  for (std::size_t i = 0; i < a.rows() && r.pass; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a.at(i, j) != b.at(i, j)) {
        r.pass = false;
        r.witness = Witness{i, j, a.at(i, j), b.at(i, j)};
        break;
      }
  axioms_.push_back(std::move(r));
}

void CheckReport::require_zero(const std::string& name, const ExactMorphism& f) {
  require_equal(name, f,
                ExactMorphism::zero(f.mat().field(), f.source(), f.target()));
}

void CheckReport::merge(const std::string& prefix, const CheckReport& sub) {
  for (const auto& a : sub.axioms_) {
    AxiomResult copy = a;
    copy.name = prefix + "." + a.name;
    axioms_.push_back(std::move(copy));
  }
}

}  // namespace yblie
