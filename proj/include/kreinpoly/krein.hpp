#ifndef KREINPOLY_KREIN_HPP
#define KREINPOLY_KREIN_HPP

// The three closed-form evaluation routes for Krein-like functionals
//
//     J_{m_1..m_r}(s, beta) = integral  w(x)^beta x^s p_{m_1}(x) ... p_{m_r}(x) dx
//
// plus a dispatcher.  "lauricella" is the r-ary multivariate-series route,
// "ode" the differential-equation route (r = 2), "algebraic" the explicit
// route built from product linearizations (r = 2).

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "kreinpoly/poly.hpp"

namespace kreinpoly {

enum class Route { lauricella, ode, algebraic, oracle, automatic };
enum class Backend { exact, floating };

std::string route_name(Route r);
Route route_from_name(const std::string& name);

struct FunctionalRequest {
    FamilySpec family;
    std::vector<long> degrees;       // m_1..m_r, r >= 1
    Scalar s = Scalar::exact(0L);    // real for Laguerre, integer >= 0 otherwise
    Scalar beta = Scalar::exact(1L); // weight exponent, > 0
    Route route = Route::automatic;
    Backend backend = Backend::exact;

    long r() const { return static_cast<long>(degrees.size()); }
    // Checks the request invariants (theorem preconditions included).
    void validate() const;
    FunctionalRequest to_float() const;
};

struct EvaluationReport {
    Scalar value;
    Route route_used = Route::automatic;
    std::uint64_t term_count = 0;
    std::chrono::microseconds wall{0};
    std::string notes;
};

// Lauricella / Srivastava-Daoust route (any r >= 1).
Scalar krein_lauricella(const FunctionalRequest& req, EvalStats* stats = nullptr);

// Differential-equation route (r = 2 only; Laguerre additionally needs
// s + alpha (beta - 1) to be a non-negative integer).
Scalar krein_ode(const FunctionalRequest& req, EvalStats* stats = nullptr);

// Algebraic route from explicit expansions and product linearizations (r = 2).
Scalar krein_algebraic(const FunctionalRequest& req, EvalStats* stats = nullptr);

// Dispatcher.  route == automatic picks: algebraic for r = 2 exact
// integer-lattice inputs, lauricella otherwise when applicable, oracle as a
// last resort.  Exactness beats speed; among exact routes algebraic beats
// lauricella beats ode.
EvaluationReport evaluate(const FunctionalRequest& req);

// True when the closed forms can stay inside the q * sqrt(pi)^e field for
// this request (drives the automatic route/backend choice).
bool exact_representable(const FunctionalRequest& req);

// Internal continuation used by the moment module: the closed form extended
// to real s on the float path (no Hermite parity short-circuit, Gamma-ratio
// Pochhammers).  For integer s it agrees with krein_lauricella.
Scalar krein_lauricella_continued(const FamilySpec& family, const std::vector<long>& degrees,
                                  double s, const Scalar& beta);

} // namespace kreinpoly

#endif
