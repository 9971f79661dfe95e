#ifndef KREINPOLY_ORACLE_HPP
#define KREINPOLY_ORACLE_HPP

// Independent ground truth for every closed form in the library: exact
// symbolic-expansion integration for lattice parameters, and high-precision
// adaptive quadrature otherwise.  Deliberately formula-free with respect to
// the theorem machinery: only monomial coefficients and termwise Gamma/Beta
// integrals, so that route agreement means something.

#include <functional>

#include "kreinpoly/krein.hpp"

namespace kreinpoly {

enum class OracleMethod { exact_expansion, quadrature };

struct OracleResult {
    Scalar value;
    OracleMethod method = OracleMethod::exact_expansion;
    double error_estimate = 0.0;
};

// integral of x^t w(x)^beta over the family domain, in closed form.
//   Laguerre: Gamma(t + alpha beta + 1) / beta^(t + alpha beta + 1)
//   Hermite:  0 for odd integer t, Gamma((t+1)/2) / beta^((t+1)/2) for even t
//   Jacobi:   binomial expansion after x = 2u - 1 into Beta functions
// t may be any Scalar with t + alpha beta > -1 (Hermite: integer t only).
Scalar integrate_monomial_weight(const FamilySpec& family, const Scalar& t, const Scalar& beta);

// Expands x^s prod p_{m_i} exactly into the monomial basis and integrates
// termwise.  Exact when every Gamma argument lands on the half-integer
// lattice and the powers stay rational; float (with budget) otherwise.
OracleResult oracle_functional(const FunctionalRequest& req);

// Adaptive Gauss-Kronrod quadrature tuned per family: semi-infinite with
// exponential decay, full line with Gaussian decay, finite interval with
// endpoint algebraic singularities lifted by repeated x -> u^2 substitution.
OracleResult quad_functional(const FunctionalRequest& req, double tol);

// Adaptive quadrature of a raw integrand on (a, b); used by tests that need
// an independent numeric check of non-functional integrals.
double adaptive_quadrature(const std::function<double(double)>& f, double a, double b,
                           double tol, double* err_out = nullptr);

// Stable pointwise evaluation by three-term recurrence (float path only;
// the quadrature owns this so MonomialPoly never gets evaluated in double).
double poly_eval_recurrence(const FamilySpec& family, long n, double x);

} // namespace kreinpoly

#endif
