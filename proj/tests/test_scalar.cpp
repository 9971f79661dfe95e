#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "kreinpoly/scalar.hpp"

using namespace kreinpoly;

namespace {

Scalar q(long n, long d = 1) { return Scalar::exact(n, d); }

// Independent oracle for H_x at non-integer x: the absolutely convergent
// series H_x = sum_i x / (i (i + x)) with an integral tail correction.
double harmonic_series_oracle(double x) {
    const long n = 200000;
    double s = 0.0;
    for (long i = n; i >= 1; --i) {
        double di = static_cast<double>(i);
        s += x / (di * (di + x));
    }
    // tail: integral_n^inf x/(t(t+x)) dt = log(1 + x/n), midpoint-corrected
    double tail = std::log1p(x / (n + 0.5));
    return s + tail;
}

} // namespace

TEST_CASE("pochhammer basics") {
    CHECK(pochhammer(q(5), 0).same_exact(q(1)));
    CHECK(pochhammer(q(1), 4).same_exact(q(24)));
    CHECK(pochhammer(q(1, 2), 2).same_exact(q(3, 4)));
}

TEST_CASE("pochhammer recurrence (a)_{n+1} = (a)_n (a+n)") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
    for (int trial = 0; trial < 60; ++trial) {
        Scalar a = q(num(rng), den(rng));
        for (long n = 0; n <= 50; n += 10) {
            Scalar lhs = pochhammer(a, n + 1);
            Scalar rhs = pochhammer(a, n) * (a + q(n));
            CHECK(lhs.same_exact(rhs));
        }
    }
}

TEST_CASE("gamma on the lattice") {
    CHECK(gamma_scalar(q(5)).same_exact(q(24)));
    CHECK(gamma_scalar(q(1, 2)).same_exact(Scalar::sqrt_pi()));
    CHECK(gamma_scalar(q(7, 2)).same_exact(Scalar::exact(BigRat(15, 8), 1)));
    // negative half-odd arguments via the recursion
    CHECK(gamma_scalar(q(-1, 2)).same_exact(Scalar::exact(BigRat(-2), 1)));
    CHECK(gamma_scalar(q(-3, 2)).same_exact(Scalar::exact(BigRat(4, 3), 1)));
    CHECK_THROWS_AS(gamma_scalar(q(0)), PoleError);
    CHECK_THROWS_AS(gamma_scalar(q(-3)), PoleError);
}

TEST_CASE("gamma recurrence on the half lattice") {
    for (long twice = 1; twice <= 120; ++twice) {
        Scalar x = q(twice, 2);
        Scalar lhs = gamma_scalar(x + q(1));
        Scalar rhs = x * gamma_scalar(x);
        CHECK(lhs.same_exact(rhs));
    }
}

TEST_CASE("gen_binomial") {
    CHECK(gen_binomial(q(3, 7), 0).same_exact(q(1)));
    CHECK(gen_binomial(q(6), 2).same_exact(q(15)));
    CHECK(gen_binomial(q(7, 2), 2).same_exact(q(35, 8)));
    for (long n = 0; n <= 40; n += 5)
        for (long k = 0; k <= n; k += 3) {
            BigRat expect(factorial(n));
            expect /= BigRat(factorial(k) * factorial(n - k));
            CHECK(gen_binomial(q(n), k).same_exact(Scalar::exact(expect)));
        }
}

TEST_CASE("harmonic numbers") {
    CHECK(harmonic_general(q(0)).same_exact(q(0)));
    CHECK(harmonic_general(q(3)).same_exact(q(11, 6)));
    // H_{1/2} = 2 - 2 log 2, derived from the series oracle
    double oracle = harmonic_series_oracle(0.5);
    CHECK(oracle == doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-9));
    Scalar h = harmonic_general(q(1, 2));
    CHECK(!h.is_exact());
    CHECK(h.value() == doctest::Approx(oracle).epsilon(1e-9));
    CHECK(h.value() == doctest::Approx(2.0 - 2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS(harmonic_general(q(-2)), PoleError);
}

TEST_CASE("float and exact paths agree within budget on random lattice inputs") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> twice(1, 80), nsel(0, 20);
    for (int trial = 0; trial < 500; ++trial) {
        Scalar x = q(twice(rng), 2);
        long n = nsel(rng);
        Scalar ex = pochhammer(x, n);
        Scalar fl = pochhammer(x.to_float(), n);
        CHECK(std::fabs(fl.value() - ex.value()) <=
              std::fabs(ex.value()) * (fl.rel_budget() + 1e-12) + 1e-300);

        Scalar ge = gamma_scalar(x);
        Scalar gf = Scalar::floating(lanczos_gamma(x.value()), 1e-13);
        CHECK(std::fabs(gf.value() - ge.value()) <= std::fabs(ge.value()) * 1e-12);
    }
}

TEST_CASE("lanczos gamma matches lattice values to 1e-13") {
    for (long twice = 1; twice <= 60; ++twice) {
        double x = 0.5 * twice;
        double exact = gamma_scalar(q(twice, 2)).value();
        CHECK(std::fabs(lanczos_gamma(x) - exact) <= 1e-13 * exact * 10);
    }
}

TEST_CASE("mixed-radical addition is rejected") {
    CHECK_THROWS_AS((void)(q(1) + Scalar::sqrt_pi()), MixedRadicalError);
    // adding zero is fine regardless of exponent
    CHECK((q(0) + Scalar::sqrt_pi()).same_exact(Scalar::sqrt_pi()));
    CHECK((Scalar::sqrt_pi() + q(0)).same_exact(Scalar::sqrt_pi()));
}

TEST_CASE("mixed exact/float demotes and widens the budget") {
    Scalar a = q(1, 3);
    Scalar b = Scalar::floating(0.5, 1e-10);
    Scalar c = a * b;
    CHECK(!c.is_exact());
    CHECK(c.rel_budget() >= 1e-10);
    Scalar d = c + q(2);
    CHECK(!d.is_exact());
    CHECK(d.rel_budget() > 0.0);
}

TEST_CASE("pow_scalar exactness") {
    CHECK(ipow(q(2, 3), 3).same_exact(q(8, 27)));
    CHECK(pow_scalar(q(4), BigRat(1, 2)).same_exact(q(2)));
    CHECK(pow_scalar(q(9, 4), BigRat(-1, 2)).same_exact(q(2, 3)));
    CHECK(pow_scalar(q(4), BigRat(3, 2)).same_exact(q(8)));
    Scalar irr = pow_scalar(q(2), BigRat(1, 2));
    CHECK(!irr.is_exact());
    CHECK(irr.value() == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("serialization round-trips") {
    for (const Scalar& s : {q(7, 3), q(-10), Scalar::sqrt_pi(),
                            Scalar::exact(BigRat(-15, 8), 1), q(0)}) {
        Scalar back = Scalar::parse(s.str());
        CHECK(back.same_exact(s));
    }
    CHECK(q(10908801561641984L).str() == "10908801561641984");
    CHECK(Scalar::exact(BigRat(2, 3), 1).str() == "2/3*sqrt(pi)");
    Scalar f = Scalar::floating(158950.04487071103, 1e-12);
    Scalar back = Scalar::parse(f.str());
    CHECK(!back.is_exact());
    CHECK(back.value() == doctest::Approx(f.value()).epsilon(1e-15));
}

TEST_CASE("parse_param: decimals route to float, rationals stay exact") {
    CHECK(Scalar::parse_param("3/10").is_exact());
    CHECK(!Scalar::parse_param("0.3").is_exact());
    CHECK(Scalar::parse_param("4").same_exact(q(4)));
}

TEST_CASE("poch_int gamma-ratio convention") {
    // (3)_{-1} = 1/2, (2)_{-1} = 1
    CHECK(poch_int(q(3), -1).same_exact(q(1, 2)));
    CHECK(poch_int(q(2), -1).same_exact(q(1)));
    CHECK(poch_int(q(5, 2), 3).same_exact(pochhammer(q(5, 2), 3)));
    CHECK_THROWS_AS(poch_int(q(1), -1), PoleError);
}

TEST_CASE("digamma against the harmonic oracle") {
    // psi(x+1) = H_x - gamma_E
    for (double x : {0.5, 1.5, 2.25, 7.75}) {
        double oracle = harmonic_series_oracle(x) - kEulerGamma;
        CHECK(digamma(x + 1.0) == doctest::Approx(oracle).epsilon(1e-9));
    }
}
