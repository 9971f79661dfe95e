#ifndef KREINPOLY_HYPER_HPP
#define KREINPOLY_HYPER_HPP

// Terminating hypergeometric kernels: 2F1, 3F2, the Lauricella function of
// type A in r variables, and the two-row Srivastava-Daoust array used by the
// Jacobi functional.  Only terminating series are supported: every series
// here is cut off by a non-positive-integer numerator parameter, which is
// what makes exact evaluation a finite computation.

#include <cstdint>
#include <vector>

#include "kreinpoly/scalar.hpp"

namespace kreinpoly {

struct EvalStats {
    std::uint64_t terms = 0;
};

// F_A^(r)(a; b_1..b_r; c_1..c_r; x_1..x_r) with each b_i = -t_i a
// non-positive integer.  Support is the box 0 <= j_i <= t_i.
struct TerminatingSeriesSpec {
    Scalar a;
    std::vector<Scalar> b;
    std::vector<Scalar> c;
    std::vector<Scalar> x;
    std::vector<long> t;

    // Derives the termination box from b and checks the invariants:
    // b_i non-positive integers, no denominator pole inside the box.
    static TerminatingSeriesSpec make(Scalar a, std::vector<Scalar> b,
                                      std::vector<Scalar> c, std::vector<Scalar> x);
    void validate() const;
    std::uint64_t box_size() const;
};

// F^{1:2;...;2}_{1:1;...;1}(a0: {a1_i, a2_i}; b0: {b1_i}; x) with linked
// (a0)_{j1+...+jr} / (b0)_{j1+...+jr} rows; terminates via a1_i = -m_i.
struct SrivastavaDaoustSpec {
    Scalar a0;
    Scalar b0;
    std::vector<Scalar> a1;
    std::vector<Scalar> a2;
    std::vector<Scalar> b1;
    std::vector<Scalar> x;
    std::vector<long> t;

    static SrivastavaDaoustSpec make(Scalar a0, std::vector<Scalar> a1,
                                     std::vector<Scalar> a2, Scalar b0,
                                     std::vector<Scalar> b1, std::vector<Scalar> x);
    void validate() const;
};

Scalar hyp2f1_terminating(const Scalar& a, const Scalar& b, const Scalar& c,
                          const Scalar& x, EvalStats* stats = nullptr);

Scalar hyp3f2_terminating(const Scalar& a1, const Scalar& a2, const Scalar& a3,
                          const Scalar& b1, const Scalar& b2, const Scalar& x,
                          EvalStats* stats = nullptr);

Scalar lauricella_fa(const TerminatingSeriesSpec& spec, EvalStats* stats = nullptr);

Scalar srivastava_daoust(const SrivastavaDaoustSpec& spec, EvalStats* stats = nullptr);

} // namespace kreinpoly

#endif
