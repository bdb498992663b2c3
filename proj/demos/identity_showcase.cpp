// Showcase of the identity verifier: the flagship alternating sum that
// collapses to 1/2 exactly once, the self-duality of the cleared number
// sequence, and what a failed check looks like when a moment is corrupted.
//
// Build target: demo_identities (see demos/CMakeLists.txt).

#include <iostream>

#include "umbra/umbra.hpp"

using namespace umbra;

namespace {

void show(const IdentityReport& r) {
  std::cout << (r.passed ? "PASS " : "FAIL ") << r.identity;
  for (const auto& [k, v] : r.params) std::cout << ' ' << k << '=' << v;
  if (!r.steps.empty()) {
    std::cout << "  steps=";
    for (std::size_t i = 0; i < r.steps.size(); ++i)
      std::cout << (i ? "," : "") << r.steps[i];
  }
  std::cout << "\n  lhs = " << r.lhs.str() << "\n  rhs = " << r.rhs.str()
            << '\n';
  if (r.witness)
    std::cout << "  first disagreement at " << r.witness->monomial << ": "
              << r.witness->lhs_coeff << " vs " << r.witness->rhs_coeff
              << '\n';
}

}  // namespace

int main() {
  Verifier verify(standard_moments());

  std::cout << "The alternating subset sum equals (1/2) a1 a2 a3 exactly at "
               "(m, n) = (3, 3):\n";
  show(verify.check_main_identity(3, BarnesContext::symbolic(3)));

  std::cout << "\n...and vanishes for every other odd m (here m = 5, n = 3):\n";
  show(verify.check_main_identity(5, BarnesContext::symbolic(3)));

  std::cout << "\nSelf-duality of the signed cleared numbers, order j = 4, "
               "two symbolic steps:\n";
  show(verify.check_self_dual(4, BarnesContext::symbolic(2)));

  std::cout << "\nNumeric spot check of the reflection law with steps "
               "(1/2, 3):\n";
  show(verify.check_reflection(
      5, BarnesContext::numeric({Rational(1, 2), Rational(3)})));

  std::cout << "\nNow corrupt the fourth Bernoulli moment (add 1) and watch a "
               "recurrence break:\n";
  const MomentOverride corrupted(standard_moments(), SymbolKind::bernoulli, 4,
                                 bernoulli_number(4) + Rational(1));
  Verifier broken(corrupted);
  show(broken.check_odd_recurrence(2, BarnesContext::symbolic(1)));

  return 0;
}
