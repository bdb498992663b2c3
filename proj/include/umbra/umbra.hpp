#pragma once

// Umbrella header: the complete exact umbral-calculus engine.
//
//   rational.hpp    exact rational arithmetic and combinatorial helpers
//   variable.hpp    scalar variables and umbral symbols
//   polynomial.hpp  sparse multivariate / umbral polynomials, canonical order
//   series.hpp      truncated power series with polynomial coefficients
//   umbral.hpp      moment providers, umbral expansion and evaluation
//   barnes.hpp      Bernoulli-Barnes numbers/polynomials by three routes
//   identities.hpp  identity checkers, suite runner, reports
//   io.hpp          LaTeX / JSON / CSV serialization

#include "umbra/rational.hpp"
#include "umbra/variable.hpp"
#include "umbra/polynomial.hpp"
#include "umbra/series.hpp"
#include "umbra/umbral.hpp"
#include "umbra/barnes.hpp"
#include "umbra/identities.hpp"
#include "umbra/io.hpp"
