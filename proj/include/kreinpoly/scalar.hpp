#ifndef KREINPOLY_SCALAR_HPP
#define KREINPOLY_SCALAR_HPP

// Scalar algebra for exact Krein-functional evaluation: arbitrary-precision
// rationals adjoined with sqrt(pi), plus a floating fallback that carries a
// relative-error budget.
//
// Every closed form in scope evaluates to q * sqrt(pi)^e with q rational and
// e in {0,1} whenever the Gamma arguments stay on the half-integer lattice.
// Arithmetic that would leave that field (sqrt(pi)^2, irrational powers,
// Gamma off the lattice) demotes to the floating representation and widens
// the budget instead of fabricating exactness.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "kreinpoly/errors.hpp"

namespace kreinpoly {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Rational times sqrt(pi)^e.  q is kept canonical (lowest terms, positive
// denominator; GMP maintains this), e is 0 or 1.  Zero is stored with e=0.
struct ExactValue {
    BigRat q;
    int e = 0;
};

struct FloatValue {
    double value = 0.0;
    // Accumulated relative-error budget.  Convention: when value == 0 the
    // field holds an absolute bound instead (a relative budget on an exact
    // float zero carries no information).
    double rel = 0.0;
};

// Exact half-integer: the value is twice/2.  Represents the nu +- 1/2
// parameters of the Hermite theorems without rounding.
struct HalfInt {
    long twice = 0;

    constexpr HalfInt() = default;
    constexpr explicit HalfInt(long t) : twice(t) {}
    static constexpr HalfInt of_int(long n) { return HalfInt(2 * n); }
    constexpr bool is_integer() const { return twice % 2 == 0; }
    BigRat as_rational() const { return BigRat(twice, 2); }
    constexpr HalfInt operator+(long n) const { return HalfInt(twice + 2 * n); }
    double to_double() const { return 0.5 * static_cast<double>(twice); }
};

class Scalar {
public:
    Scalar() : exact_{BigRat(0), 0}, is_exact_(true) {}

    static Scalar exact(BigRat q, int sqrtpi_exp = 0);
    static Scalar exact(long n) { return exact(BigRat(n)); }
    static Scalar exact(long num, long den);
    static Scalar exact(const HalfInt& h) { return exact(h.as_rational()); }
    static Scalar sqrt_pi() { return exact(BigRat(1), 1); }
    static Scalar floating(double v, double rel);

    bool is_exact() const { return is_exact_; }
    bool is_zero() const;
    bool is_negative() const;

    // Exact accessors; only valid when is_exact().
    const BigRat& rational() const;
    int sqrtpi_exp() const;
    const ExactValue& exact_value() const;

    bool is_integer() const;            // exact integer (e == 0)
    bool is_nonneg_integer() const;
    bool is_half_lattice() const;       // exact, e == 0, denominator 1 or 2
    long as_long() const;               // requires is_integer() and fits

    double value() const;               // numeric value of either representation
    double rel_budget() const;          // 0 for exact values
    double abs_bound() const;           // absolute error bound implied by the budget
    Scalar to_float() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    // Bit-identical equality of exact values (both must be exact).
    bool same_exact(const Scalar& o) const;

    // Serialization: "p/q", "p/q*sqrt(pi)", or "decimal±rel".
    std::string str() const;
    static Scalar parse(const std::string& s);

    // Parameter parsing for the CLI: integers and "p/q" stay exact,
    // decimal strings route to the float representation.
    static Scalar parse_param(const std::string& s);

private:
    ExactValue exact_;
    FloatValue float_;
    bool is_exact_ = true;

    static Scalar demote_mul(const Scalar& a, const Scalar& b);
};

// Three-way numeric comparison usable for precondition checks.  Exact
// rationals (e == 0) compare exactly; anything else compares as double.
int scalar_cmp(const Scalar& a, const Scalar& b);

// ---- lattice arithmetic -------------------------------------------------

BigInt factorial(long n);

// Reciprocal factorial with the 1/(-n)! = 0 convention used throughout the
// closed forms (a term whose factorial argument is negative vanishes).
BigRat recip_factorial(long n);

// (a)_n = a (a+1) ... (a+n-1); exact when a is exact.  n >= 0.
Scalar pochhammer(const Scalar& a, long n);

// Pochhammer with integer index of either sign via the Gamma-ratio
// convention: (a)_{-n} = 1 / ((a-1)(a-2)...(a-n)).  A zero factor in the
// reciprocal raises PoleError.
Scalar poch_int(const Scalar& a, long n);

// Generalized binomial coefficient C(x, k) = x (x-1) ... (x-k+1) / k!.
Scalar gen_binomial(const Scalar& x, long k);

// Gamma on the half-integer lattice: exact, with Gamma(1/2) = sqrt(pi).
// Accepts any half-integer that is not a non-positive integer (negative
// half-odd arguments are reached by the recursion Gamma(x) = Gamma(x+1)/x).
Scalar gamma_halfint(const HalfInt& x);

// Gamma of a Scalar: exact on the half-integer lattice; float Lanczos for
// other positive arguments (relative error <= 1e-13); PoleError at
// non-positive lattice integers; PreconditionError for non-lattice x <= 0.
Scalar gamma_scalar(const Scalar& x);

// Beta(a, b) = Gamma(a) Gamma(b) / Gamma(a+b), combining the three factors
// so that a single residual sqrt(pi) stays exact.
Scalar beta_scalar(const Scalar& a, const Scalar& b);

// Harmonic number H_x: exact partial sum for non-negative integers,
// psi(x+1) + gamma_E on the float path for non-integer x > -1.
Scalar harmonic_general(const Scalar& x);

// base^n for integer n (exact when base is exact; PoleError on 0^-n).
Scalar ipow(const Scalar& base, long n);

// base^expo for rational expo.  Exact for integer exponents, and for
// half-integer exponents when the base is a perfect rational square;
// otherwise demotes to float.  base must be positive unless expo is integer.
Scalar pow_scalar(const Scalar& base, const BigRat& expo);

// ---- float kernels (documented approximation schemes) -------------------

// Lanczos approximation, g = 7, 9 coefficients (Godfrey's table).
double lanczos_gamma(double x);
double digamma(double x);

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kSqrtPi = 1.77245385090551602729816748334114518;
inline constexpr double kEulerGamma = 0.577215664901532860606512090082402431;

} // namespace kreinpoly

#endif
