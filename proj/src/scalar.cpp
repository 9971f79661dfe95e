#include "kreinpoly/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace kreinpoly {

namespace {

constexpr double kEps = 2.220446049250313e-16;

// Re-encode an absolute bound as the stored budget: relative when the value
// is nonzero, absolute when it is zero.
double encode_budget(double abs_err, double value) {
    double mag = std::fabs(value);
    return mag == 0.0 ? abs_err : abs_err / mag;
}

} // namespace

// ---- Scalar construction -------------------------------------------------

Scalar Scalar::exact(BigRat q, int sqrtpi_exp) {
    Scalar s;
    q.canonicalize();
    s.exact_.q = std::move(q);
    s.exact_.e = (s.exact_.q == 0) ? 0 : sqrtpi_exp;
    s.is_exact_ = true;
    return s;
}

Scalar Scalar::exact(long num, long den) {
    BigRat q(num, den);
    q.canonicalize();
    return exact(std::move(q));
}

Scalar Scalar::floating(double v, double rel) {
    Scalar s;
    s.is_exact_ = false;
    s.float_.value = v;
    s.float_.rel = rel;
    return s;
}

bool Scalar::is_zero() const {
    return is_exact_ ? exact_.q == 0 : float_.value == 0.0;
}

bool Scalar::is_negative() const {
    return is_exact_ ? exact_.q < 0 : float_.value < 0.0;
}

const BigRat& Scalar::rational() const {
    if (!is_exact_)
        throw std::logic_error("Scalar::rational on float value");
    return exact_.q;
}

int Scalar::sqrtpi_exp() const {
    if (!is_exact_)
        throw std::logic_error("Scalar::sqrtpi_exp on float value");
    return exact_.e;
}

const ExactValue& Scalar::exact_value() const {
    if (!is_exact_)
        throw std::logic_error("Scalar::exact_value on float value");
    return exact_;
}

bool Scalar::is_integer() const {
    return is_exact_ && exact_.e == 0 && exact_.q.get_den() == 1;
}

bool Scalar::is_nonneg_integer() const {
    return is_integer() && exact_.q >= 0;
}

bool Scalar::is_half_lattice() const {
    if (!is_exact_ || exact_.e != 0)
        return false;
    const BigInt& den = exact_.q.get_den();
    return den == 1 || den == 2;
}

long Scalar::as_long() const {
    if (!is_integer())
        throw std::logic_error("Scalar::as_long on non-integer");
    if (!exact_.q.get_num().fits_slong_p())
        throw std::overflow_error("Scalar::as_long overflow");
    return exact_.q.get_num().get_si();
}

double Scalar::value() const {
    if (!is_exact_)
        return float_.value;
    double v = exact_.q.get_d();
    return exact_.e ? v * kSqrtPi : v;
}

double Scalar::rel_budget() const {
    return is_exact_ ? 0.0 : float_.rel;
}

double Scalar::abs_bound() const {
    if (is_exact_)
        return 0.0;
    return float_.value == 0.0 ? float_.rel : std::fabs(float_.value) * float_.rel;
}

Scalar Scalar::to_float() const {
    if (!is_exact_)
        return *this;
    return floating(value(), kEps);
}

// ---- arithmetic ----------------------------------------------------------

Scalar Scalar::operator-() const {
    if (is_exact_)
        return exact(BigRat(-exact_.q), exact_.e);
    return floating(-float_.value, float_.rel);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (is_exact_ && o.is_exact_) {
        if (exact_.q == 0) {
            *this = o;
            return *this;
        }
        if (o.exact_.q == 0)
            return *this;
        if (exact_.e != o.exact_.e)
            throw MixedRadicalError("sum of exact values with different sqrt(pi) exponents");
        exact_.q += o.exact_.q;
        if (exact_.q == 0)
            exact_.e = 0;
        return *this;
    }
    double a = value(), b = o.value();
    double abs_err = abs_bound() + o.abs_bound();
    double v = a + b;
    abs_err += std::fabs(v) * kEps;
    *this = floating(v, encode_budget(abs_err, v));
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    return *this += -o;
}

Scalar Scalar::demote_mul(const Scalar& a, const Scalar& b) {
    double av = a.value(), bv = b.value();
    double v = av * bv;
    double abs_err = std::fabs(av) * b.abs_bound() + std::fabs(bv) * a.abs_bound() +
                     a.abs_bound() * b.abs_bound() + std::fabs(v) * kEps;
    return floating(v, encode_budget(abs_err, v));
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (is_exact_ && o.is_exact_) {
        int e = exact_.e + o.exact_.e;
        if (e <= 1 || exact_.q == 0 || o.exact_.q == 0) {
            exact_.q *= o.exact_.q;
            exact_.e = (exact_.q == 0) ? 0 : e;
            return *this;
        }
        // sqrt(pi)^2 = pi leaves the field; no in-scope closed form needs it.
        *this = demote_mul(*this, o);
        return *this;
    }
    *this = demote_mul(*this, o);
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero())
        throw std::domain_error("Scalar division by zero");
    if (is_exact_ && o.is_exact_) {
        int e = exact_.e - o.exact_.e;
        if (e >= 0 || exact_.q == 0) {
            exact_.q /= o.exact_.q;
            exact_.e = (exact_.q == 0) ? 0 : e;
            return *this;
        }
        double v = value() / o.value();
        *this = floating(v, kEps);
        return *this;
    }
    double ov = o.value();
    double v = value() / ov;
    double abs_err = (abs_bound() + std::fabs(v) * o.abs_bound()) / std::fabs(ov) +
                     std::fabs(v) * kEps;
    *this = floating(v, encode_budget(abs_err, v));
    return *this;
}

bool Scalar::same_exact(const Scalar& o) const {
    if (!is_exact_ || !o.is_exact_)
        return false;
    return exact_.e == o.exact_.e && exact_.q == o.exact_.q;
}

int scalar_cmp(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact() && a.sqrtpi_exp() == 0 && b.sqrtpi_exp() == 0)
        return cmp(a.rational(), b.rational());
    double x = a.value(), y = b.value();
    return x < y ? -1 : (x > y ? 1 : 0);
}

// ---- serialization -------------------------------------------------------

std::string Scalar::str() const {
    if (is_exact_) {
        std::string body = exact_.q.get_str();
        if (exact_.e == 0)
            return body;
        if (exact_.q == 1)
            return "sqrt(pi)";
        if (exact_.q == -1)
            return "-sqrt(pi)";
        return body + "*sqrt(pi)";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", float_.value);
    char rel[32];
    std::snprintf(rel, sizeof rel, "%.3g", float_.rel);
    return std::string(buf) + "\xC2\xB1" + rel; // value±rel
}

namespace {

BigRat parse_rational(const std::string& s) {
    BigRat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: '" + s + "'");
    q.canonicalize();
    return q;
}

} // namespace

Scalar Scalar::parse(const std::string& s) {
    auto pm = s.find("\xC2\xB1");
    if (pm != std::string::npos)
        return floating(std::strtod(s.c_str(), nullptr),
                        std::strtod(s.substr(pm + 2).c_str(), nullptr));
    if (s == "sqrt(pi)")
        return sqrt_pi();
    if (s == "-sqrt(pi)")
        return exact(BigRat(-1), 1);
    auto star = s.find("*sqrt(pi)");
    if (star != std::string::npos)
        return exact(parse_rational(s.substr(0, star)), 1);
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return floating(std::strtod(s.c_str(), nullptr), kEps);
    return exact(parse_rational(s));
}

Scalar Scalar::parse_param(const std::string& s) {
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos ||
        s.find('E') != std::string::npos)
        return floating(std::strtod(s.c_str(), nullptr), kEps);
    return exact(parse_rational(s));
}

// ---- lattice arithmetic --------------------------------------------------

BigInt factorial(long n) {
    if (n < 0)
        throw PoleError("factorial of negative integer");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigRat recip_factorial(long n) {
    if (n < 0)
        return BigRat(0);
    return BigRat(BigInt(1), factorial(n));
}

Scalar pochhammer(const Scalar& a, long n) {
    if (n < 0)
        throw PreconditionError("pochhammer needs n >= 0");
    if (a.is_exact() && a.sqrtpi_exp() != 0)
        throw PreconditionError("pochhammer of a sqrt(pi)-valued argument");
    if (a.is_exact()) {
        BigRat p(1), x = a.rational();
        for (long i = 0; i < n; ++i, ++x)
            p *= x;
        return Scalar::exact(std::move(p));
    }
    double p = 1.0, x = a.value();
    for (long i = 0; i < n; ++i)
        p *= x + static_cast<double>(i);
    return Scalar::floating(p, a.rel_budget() * static_cast<double>(n) +
                                   kEps * static_cast<double>(n + 1));
}

Scalar poch_int(const Scalar& a, long n) {
    if (n >= 0)
        return pochhammer(a, n);
    Scalar den = pochhammer(a - Scalar::exact(-n), -n);
    if (den.is_zero())
        throw PoleError("pochhammer with negative index hits a zero factor");
    return Scalar::exact(1L) / den;
}

Scalar gen_binomial(const Scalar& x, long k) {
    if (k < 0)
        throw PreconditionError("gen_binomial needs k >= 0");
    if (x.is_exact()) {
        if (x.sqrtpi_exp() != 0)
            throw PreconditionError("gen_binomial of a sqrt(pi)-valued argument");
        BigRat p(1), v = x.rational();
        for (long i = 0; i < k; ++i, --v)
            p *= v;
        return Scalar::exact(p * recip_factorial(k));
    }
    double p = 1.0, v = x.value();
    for (long i = 0; i < k; ++i)
        p *= v - static_cast<double>(i);
    return Scalar::floating(p / factorial(k).get_d(),
                            x.rel_budget() * static_cast<double>(k) +
                                kEps * static_cast<double>(k + 2));
}

Scalar gamma_halfint(const HalfInt& x) {
    if (x.is_integer()) {
        long n = x.twice / 2;
        if (n <= 0)
            throw PoleError("Gamma pole at non-positive integer");
        return Scalar::exact(BigRat(factorial(n - 1)));
    }
    // x = k + 1/2.  Gamma(1/2) = sqrt(pi); walk the recursion in either
    // direction.
    long k = (x.twice - 1) / 2;
    BigRat q(1);
    if (k >= 0) {
        BigRat f(1, 2);
        for (long i = 0; i < k; ++i, ++f)
            q *= f; // (1/2)_k
    } else {
        BigRat f = x.as_rational();
        for (long i = 0; i < -k; ++i, ++f)
            q /= f; // Gamma(x) = Gamma(x+1)/x repeatedly
    }
    return Scalar::exact(std::move(q), 1);
}

Scalar gamma_scalar(const Scalar& x) {
    if (x.is_half_lattice()) {
        const BigRat& q = x.rational();
        if (q.get_den() == 1) {
            if (q <= 0)
                throw PoleError("Gamma pole at non-positive integer");
            if (!q.get_num().fits_slong_p())
                throw std::overflow_error("Gamma argument too large");
            return Scalar::exact(BigRat(factorial(q.get_num().get_si() - 1)));
        }
        BigInt t = q.get_num(); // den == 2, so twice the value
        if (!t.fits_slong_p())
            throw std::overflow_error("Gamma argument too large");
        return gamma_halfint(HalfInt(t.get_si()));
    }
    double v = x.value();
    if (v <= 0.0) {
        double r = std::round(v);
        if (std::fabs(v - r) < 1e-12 && r <= 0.0)
            throw PoleError("Gamma pole at non-positive integer");
        throw PreconditionError("Gamma of negative non-lattice argument rejected");
    }
    double g = lanczos_gamma(v);
    // Condition number of Gamma is |x psi(x)|.
    double cond = std::fabs(v * digamma(v));
    return Scalar::floating(g, x.rel_budget() * (1.0 + cond) + 1e-13);
}

Scalar beta_scalar(const Scalar& a, const Scalar& b) {
    Scalar ga = gamma_scalar(a);
    Scalar gb = gamma_scalar(b);
    Scalar gab = gamma_scalar(a + b);
    if (ga.is_exact() && gb.is_exact() && gab.is_exact()) {
        int e = ga.sqrtpi_exp() + gb.sqrtpi_exp() - gab.sqrtpi_exp();
        if (e == 0 || e == 1) {
            BigRat q = ga.rational() * gb.rational() / gab.rational();
            return Scalar::exact(std::move(q), e);
        }
        // Two residual sqrt(pi) factors multiply to pi: float path.
        return Scalar::floating(ga.value() * gb.value() / gab.value(), 4 * kEps);
    }
    return ga * gb / gab;
}

Scalar harmonic_general(const Scalar& x) {
    if (x.is_integer()) {
        long n = x.as_long();
        if (n < 0)
            throw PoleError("harmonic number pole at negative integer");
        BigRat h(0);
        for (long i = 1; i <= n; ++i)
            h += BigRat(1, i);
        return Scalar::exact(std::move(h));
    }
    double v = x.value();
    if (v <= -1.0)
        throw PreconditionError("harmonic_general needs x > -1");
    return Scalar::floating(digamma(v + 1.0) + kEulerGamma,
                            x.rel_budget() + 1e-12);
}

Scalar ipow(const Scalar& base, long n) {
    if (n == 0)
        return Scalar::exact(1L);
    if (base.is_zero()) {
        if (n < 0)
            throw PoleError("0 raised to a negative power");
        return Scalar::exact(0L);
    }
    if (base.is_exact()) {
        if (base.sqrtpi_exp() != 0)
            throw PreconditionError("integer power of a sqrt(pi)-valued base");
        unsigned long a = static_cast<unsigned long>(n < 0 ? -n : n);
        BigInt num, den;
        mpz_pow_ui(num.get_mpz_t(), base.rational().get_num().get_mpz_t(), a);
        mpz_pow_ui(den.get_mpz_t(), base.rational().get_den().get_mpz_t(), a);
        BigRat q(num, den);
        q.canonicalize();
        if (n < 0)
            q = BigRat(1) / q;
        return Scalar::exact(std::move(q));
    }
    double v = std::pow(base.value(), static_cast<double>(n));
    return Scalar::floating(v, base.rel_budget() * std::fabs(static_cast<double>(n)) + kEps);
}

namespace {

std::optional<BigRat> exact_sqrt(const BigRat& q) {
    if (q < 0)
        return std::nullopt;
    const BigInt& num = q.get_num();
    const BigInt& den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        BigInt sn, sd;
        mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
        BigRat r(sn, sd);
        r.canonicalize();
        return r;
    }
    return std::nullopt;
}

} // namespace

Scalar pow_scalar(const Scalar& base, const BigRat& expo) {
    if (expo.get_den() == 1) {
        if (!expo.get_num().fits_slong_p())
            throw std::overflow_error("pow_scalar exponent too large");
        return ipow(base, expo.get_num().get_si());
    }
    if (base.is_zero())
        return Scalar::exact(0L);
    if (scalar_cmp(base, Scalar()) < 0)
        throw PreconditionError("fractional power of a negative base");
    if (base.is_exact() && base.sqrtpi_exp() == 0 && expo.get_den() == 2) {
        if (auto root = exact_sqrt(base.rational())) {
            BigRat half_steps = expo * 2; // integer
            long n = half_steps.get_num().get_si();
            return ipow(Scalar::exact(*root), n);
        }
    }
    double v = std::pow(base.value(), expo.get_d());
    double rel = base.rel_budget() * std::fabs(expo.get_d()) + 2 * kEps;
    return Scalar::floating(v, rel);
}

// ---- float kernels ---------------------------------------------------------

double lanczos_gamma(double x) {
    // Lanczos approximation with g = 7, n = 9 (Godfrey's coefficients).
    static const double g = 7.0;
    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    if (x < 0.5) {
        // reflection keeps accuracy near 0
        return kPi / (std::sin(kPi * x) * lanczos_gamma(1.0 - x));
    }
    double z = x - 1.0;
    double a = c[0];
    for (int i = 1; i < 9; ++i)
        a += c[i] / (z + i);
    double t = z + g + 0.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

double digamma(double x) {
    if (x <= 0.0)
        throw PreconditionError("digamma needs x > 0");
    double r = 0.0;
    while (x < 6.0) {
        r -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x, inv2 = inv * inv;
    // asymptotic series with Bernoulli numbers B2..B14
    double series = inv2 * (1.0 / 12 - inv2 * (1.0 / 120 - inv2 * (1.0 / 252 - inv2 * (1.0 / 240 - inv2 * (1.0 / 132 - inv2 * (691.0 / 32760 - inv2 * (1.0 / 12)))))));
    return r + std::log(x) - 0.5 * inv - series;
}

} // namespace kreinpoly
