#include "kreinpoly/hyper.hpp"

#include <string>

namespace kreinpoly {

namespace {

// Termination index of a numerator parameter: -b when b is a non-positive
// exact integer, nullopt otherwise.
std::optional<long> termination_of(const Scalar& b) {
    if (b.is_integer() && b.rational() <= 0)
        return -b.as_long();
    return std::nullopt;
}

// (c)_j vanishes for j >= 1 - c (integer c <= 0); reject if that happens
// within the termination range j <= t.
void check_denominator(const Scalar& c, long t, const char* where) {
    if (auto pole = termination_of(c)) {
        if (t >= *pole + 1)
            throw PoleError(std::string(where) + ": denominator pole inside the termination box");
    }
}

void bump(EvalStats* stats, std::uint64_t n = 1) {
    if (stats)
        stats->terms += n;
}

} // namespace

// ---- single-variable series ----------------------------------------------

Scalar hyp2f1_terminating(const Scalar& a, const Scalar& b, const Scalar& c,
                          const Scalar& x, EvalStats* stats) {
    auto ta = termination_of(a), tb = termination_of(b);
    long t;
    if (ta && tb)
        t = std::min(*ta, *tb);
    else if (ta)
        t = *ta;
    else if (tb)
        t = *tb;
    else
        throw NonTerminatingError("2F1 requires a non-positive-integer numerator parameter");
    check_denominator(c, t, "2F1");

    Scalar sum = Scalar::exact(1L);
    Scalar term = Scalar::exact(1L);
    bump(stats);
    for (long j = 1; j <= t; ++j) {
        Scalar jm1 = Scalar::exact(j - 1);
        term *= (a + jm1) * (b + jm1) / ((c + jm1) * Scalar::exact(j));
        term *= x;
        sum += term;
        bump(stats);
    }
    return sum;
}

Scalar hyp3f2_terminating(const Scalar& a1, const Scalar& a2, const Scalar& a3,
                          const Scalar& b1, const Scalar& b2, const Scalar& x,
                          EvalStats* stats) {
    std::optional<long> t;
    for (const Scalar* a : {&a1, &a2, &a3})
        if (auto ti = termination_of(*a))
            t = t ? std::min(*t, *ti) : *ti;
    if (!t)
        throw NonTerminatingError("3F2 requires a non-positive-integer numerator parameter");
    check_denominator(b1, *t, "3F2");
    check_denominator(b2, *t, "3F2");

    Scalar sum = Scalar::exact(1L);
    Scalar term = Scalar::exact(1L);
    bump(stats);
    for (long j = 1; j <= *t; ++j) {
        Scalar jm1 = Scalar::exact(j - 1);
        term *= (a1 + jm1) * (a2 + jm1) * (a3 + jm1);
        term /= (b1 + jm1) * (b2 + jm1) * Scalar::exact(j);
        term *= x;
        sum += term;
        bump(stats);
    }
    return sum;
}

// ---- Lauricella F_A --------------------------------------------------------

TerminatingSeriesSpec TerminatingSeriesSpec::make(Scalar a, std::vector<Scalar> b,
                                                  std::vector<Scalar> c,
                                                  std::vector<Scalar> x) {
    TerminatingSeriesSpec spec;
    spec.a = std::move(a);
    spec.b = std::move(b);
    spec.c = std::move(c);
    spec.x = std::move(x);
    spec.t.reserve(spec.b.size());
    for (const Scalar& bi : spec.b) {
        auto ti = termination_of(bi);
        if (!ti)
            throw NonTerminatingError("F_A: every b_i must be a non-positive integer");
        spec.t.push_back(*ti);
    }
    spec.validate();
    return spec;
}

void TerminatingSeriesSpec::validate() const {
    if (b.size() != c.size() || b.size() != x.size() || b.size() != t.size())
        throw PreconditionError("F_A: parameter lists must have equal length");
    if (b.empty())
        throw PreconditionError("F_A: needs at least one variable");
    for (std::size_t i = 0; i < c.size(); ++i)
        check_denominator(c[i], t[i], "F_A");
}

std::uint64_t TerminatingSeriesSpec::box_size() const {
    std::uint64_t n = 1;
    for (long ti : t)
        n *= static_cast<std::uint64_t>(ti + 1);
    return n;
}

namespace {

// Recursive lexicographic walk of the termination box with running updates:
// each step multiplies by one Pochhammer/argument factor, so a term costs
// O(1) scalar operations instead of per-term Gamma calls.
struct FaWalker {
    const TerminatingSeriesSpec& spec;
    EvalStats* stats;
    Scalar sum = Scalar::exact(0L);

    explicit FaWalker(const TerminatingSeriesSpec& s, EvalStats* st) : spec(s), stats(st) {}

    // prefix carries (a)_{sum of previous j} * prod of per-variable factors;
    // shift is that running j-sum.
    void walk(std::size_t dim, Scalar prefix, long shift) {
        if (dim == spec.b.size()) {
            sum += prefix;
            bump(stats);
            return;
        }
        Scalar cur = prefix;
        walk(dim + 1, cur, shift);
        for (long j = 1; j <= spec.t[dim]; ++j) {
            Scalar step = Scalar::exact(shift + j - 1);
            cur *= (spec.a + step) * (spec.b[dim] + Scalar::exact(j - 1));
            cur /= (spec.c[dim] + Scalar::exact(j - 1)) * Scalar::exact(j);
            cur *= spec.x[dim];
            walk(dim + 1, cur, shift + j);
        }
    }
};

} // namespace

Scalar lauricella_fa(const TerminatingSeriesSpec& spec, EvalStats* stats) {
    spec.validate();
    FaWalker w(spec, stats);
    w.walk(0, Scalar::exact(1L), 0);
    return w.sum;
}

// ---- Srivastava-Daoust -----------------------------------------------------

SrivastavaDaoustSpec SrivastavaDaoustSpec::make(Scalar a0, std::vector<Scalar> a1,
                                                std::vector<Scalar> a2, Scalar b0,
                                                std::vector<Scalar> b1,
                                                std::vector<Scalar> x) {
    SrivastavaDaoustSpec spec;
    spec.a0 = std::move(a0);
    spec.b0 = std::move(b0);
    spec.a1 = std::move(a1);
    spec.a2 = std::move(a2);
    spec.b1 = std::move(b1);
    spec.x = std::move(x);
    spec.t.reserve(spec.a1.size());
    for (const Scalar& ai : spec.a1) {
        auto ti = termination_of(ai);
        if (!ti)
            throw NonTerminatingError("Srivastava-Daoust: every a_i^(1) must be a non-positive integer");
        spec.t.push_back(*ti);
    }
    spec.validate();
    return spec;
}

void SrivastavaDaoustSpec::validate() const {
    if (a1.size() != a2.size() || a1.size() != b1.size() || a1.size() != x.size() ||
        a1.size() != t.size())
        throw PreconditionError("Srivastava-Daoust: parameter lists must have equal length");
    if (a1.empty())
        throw PreconditionError("Srivastava-Daoust: needs at least one variable");
    long total = 0;
    for (long ti : t)
        total += ti;
    check_denominator(b0, total, "Srivastava-Daoust");
    for (std::size_t i = 0; i < b1.size(); ++i)
        check_denominator(b1[i], t[i], "Srivastava-Daoust");
}

namespace {

struct SdWalker {
    const SrivastavaDaoustSpec& spec;
    EvalStats* stats;
    Scalar sum = Scalar::exact(0L);

    explicit SdWalker(const SrivastavaDaoustSpec& s, EvalStats* st) : spec(s), stats(st) {}

    void walk(std::size_t dim, Scalar prefix, long shift) {
        if (dim == spec.a1.size()) {
            sum += prefix;
            bump(stats);
            return;
        }
        Scalar cur = prefix;
        walk(dim + 1, cur, shift);
        for (long j = 1; j <= spec.t[dim]; ++j) {
            Scalar step = Scalar::exact(shift + j - 1);
            Scalar jm1 = Scalar::exact(j - 1);
            cur *= (spec.a0 + step) * (spec.a1[dim] + jm1) * (spec.a2[dim] + jm1);
            cur /= (spec.b0 + step) * (spec.b1[dim] + jm1) * Scalar::exact(j);
            cur *= spec.x[dim];
            walk(dim + 1, cur, shift + j);
        }
    }
};

} // namespace

Scalar srivastava_daoust(const SrivastavaDaoustSpec& spec, EvalStats* stats) {
    spec.validate();
    SdWalker w(spec, stats);
    w.walk(0, Scalar::exact(1L), 0);
    return w.sum;
}

} // namespace kreinpoly
