#ifndef KREINPOLY_POLY_HPP
#define KREINPOLY_POLY_HPP

// Classical orthogonal polynomial representations: exact monomial
// coefficients, squared norms, the Hermite->Laguerre conversion, the Jacobi
// parameter-shift expansion, and monomial inversion.

#include <string>
#include <vector>

#include "kreinpoly/scalar.hpp"

namespace kreinpoly {

enum class Family { laguerre, hermite, jacobi };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

// Which classical family plus its weight parameters.
//   Laguerre: weight x^alpha e^{-x} on (0, inf)
//   Hermite:  weight e^{-x^2} on R
//   Jacobi:   weight (1-x)^alpha (1+x)^gamma on (-1, 1)
struct FamilySpec {
    Family kind = Family::laguerre;
    Scalar alpha = Scalar::exact(0L);
    Scalar gamma = Scalar::exact(0L);

    static FamilySpec laguerre(Scalar alpha) { return {Family::laguerre, std::move(alpha), Scalar::exact(0L)}; }
    static FamilySpec hermite() { return {Family::hermite, Scalar::exact(0L), Scalar::exact(0L)}; }
    static FamilySpec jacobi(Scalar alpha, Scalar gamma) { return {Family::jacobi, std::move(alpha), std::move(gamma)}; }

    bool params_exact() const;
    // Orthogonality validity: alpha > -1 (and gamma > -1 for Jacobi).
    void validate() const;
    FamilySpec to_float() const;
};

// Dense exact polynomial in the monomial basis, lowest degree first.
// Trailing coefficient nonzero unless the zero polynomial.
struct MonomialPoly {
    std::vector<BigRat> c;

    MonomialPoly() = default;
    explicit MonomialPoly(std::vector<BigRat> coeffs) : c(std::move(coeffs)) { normalize(); }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    void normalize();

    const BigRat& coeff(long k) const; // 0 beyond the stored range
    BigRat eval(const BigRat& x) const;

    MonomialPoly operator*(const MonomialPoly& o) const;
    MonomialPoly operator+(const MonomialPoly& o) const;
    MonomialPoly operator-(const MonomialPoly& o) const;
    MonomialPoly scaled(const BigRat& s) const;
    MonomialPoly shifted(long s) const; // multiply by x^s
    bool operator==(const MonomialPoly& o) const { return c == o.c; }

    // JSON array of exact-value strings, lowest degree first.
    std::string to_json() const;
    static MonomialPoly from_json(const std::string& json);
};

// Degrees above the cap are rejected; rational coefficient bit-size grows
// fast and the cap keeps exact runs bounded.
long degree_cap();
void set_degree_cap(long cap);

// Exact monomial coefficients of L_n^(alpha), H_n or P_n^(alpha,gamma).
// Requires exact family parameters.  Results are memoized.
MonomialPoly poly_coeffs(const FamilySpec& family, long n);

// Squared norm d_n^2 of the family member of degree n.
Scalar norm_h(const FamilySpec& family, long n);

// H_m(x) = sign * scale * x^nu * L^(param)_degree(x^2), nu = m mod 2.
struct HermiteLaguerreDecomp {
    int sign;       // (-1)^((m-nu)/2)
    BigRat scale;   // m! / (1/2)_((m+nu)/2)
    int nu;         // 0 or 1
    long degree;    // (m - nu) / 2
    HalfInt param;  // nu - 1/2
};
HermiteLaguerreDecomp hermite_to_laguerre(long m);

// Coefficients c_{kj} expanding P_k^(alpha,gamma) in the beta-shifted basis
// {P_j^(alpha beta, gamma beta)}, j = 0..k.
std::vector<Scalar> jacobi_param_shift(long k, const Scalar& alpha, const Scalar& gamma,
                                       const Scalar& beta);

// Coefficients d_l with x^s = sum_l d_l p_l in the family basis
// (Jacobi: the beta-shifted basis P_l^(alpha beta, gamma beta); Laguerre and
// Hermite: the family basis itself, beta playing no role).
std::vector<Scalar> monomial_inversion(const FamilySpec& family, long s, const Scalar& beta);

} // namespace kreinpoly

#endif
