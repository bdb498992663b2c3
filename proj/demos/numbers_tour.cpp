// A short tour of the exact engine: Bernoulli numbers three ways, the
// generalized numbers and polynomials for chosen steps, and the equal-step
// polynomial family.
//
// Build target: demo_numbers (see demos/CMakeLists.txt).

#include <iostream>

#include "umbra/umbra.hpp"

using namespace umbra;

int main() {
  std::cout << "Bernoulli numbers by recurrence, series inversion, and "
               "umbral evaluation:\n";
  const TruncatedSeries inv =
      inverse(TruncatedSeries::egf_unit_factor(MultiPoly::constant(Rational(1)), 12));
  const BarnesContext unit = BarnesContext::numeric({Rational(1)});
  for (int k = 0; k <= 12; ++k) {
    std::cout << "  B_" << k << " = " << bernoulli_number(k)
              << "   series: " << inv.egf_coeff(k).str()
              << "   umbral: " << bb_number_umbral(k, unit).str() << '\n';
  }

  std::cout << "\nGeneralized numbers for steps a = (1, 2, 3) "
               "(note B_0 = 1/(a1 a2 a3)):\n";
  const BarnesContext steps =
      BarnesContext::numeric({Rational(1), Rational(2), Rational(3)});
  for (int k = 0; k <= 6; ++k)
    std::cout << "  B_" << k << "(1,2,3) = " << bb_number_umbral(k, steps).str()
              << '\n';

  std::cout << "\nSymbolic cleared forms P_k(a) = (a1 a2) B_k(a1, a2):\n";
  const BarnesContext sym = BarnesContext::symbolic(2);
  for (int k = 0; k <= 4; ++k)
    std::cout << "  P_" << k << " = " << bb_number_umbral(k, sym).str() << '\n';

  std::cout << "\nPolynomials in x (numeric steps divide by a1...an):\n";
  for (int j = 0; j <= 3; ++j)
    std::cout << "  B_" << j << "(x; (1)) = "
              << bb_polynomial(j, unit).str() << '\n';

  std::cout << "\nEqual-step family B_j^{(n)}(x), rows j = 0..3, n = 0..3:\n";
  for (int j = 0; j <= 3; ++j) {
    std::cout << "  j=" << j << ":";
    for (int n = 0; n <= 3; ++n)
      std::cout << "   " << norlund_polynomial(j, n).str();
    std::cout << '\n';
  }

  std::cout << "\nThe same polynomial in LaTeX: "
            << to_latex(bb_polynomial(2, BarnesContext::symbolic(1))) << '\n';
  return 0;
}
