#include "kreinpoly/poly.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "kreinpoly/hyper.hpp"

namespace kreinpoly {

std::string family_name(Family f) {
    switch (f) {
    case Family::laguerre: return "laguerre";
    case Family::hermite: return "hermite";
    case Family::jacobi: return "jacobi";
    }
    return "?";
}

Family family_from_name(const std::string& name) {
    if (name == "laguerre")
        return Family::laguerre;
    if (name == "hermite")
        return Family::hermite;
    if (name == "jacobi")
        return Family::jacobi;
    throw PreconditionError("unknown family '" + name + "'");
}

bool FamilySpec::params_exact() const {
    switch (kind) {
    case Family::hermite: return true;
    case Family::laguerre: return alpha.is_exact();
    case Family::jacobi: return alpha.is_exact() && gamma.is_exact();
    }
    return false;
}

void FamilySpec::validate() const {
    Scalar minus_one = Scalar::exact(-1L);
    if (kind != Family::hermite && scalar_cmp(alpha, minus_one) <= 0)
        throw PreconditionError("family parameter alpha must exceed -1");
    if (kind == Family::jacobi && scalar_cmp(gamma, minus_one) <= 0)
        throw PreconditionError("family parameter gamma must exceed -1");
}

FamilySpec FamilySpec::to_float() const {
    FamilySpec f = *this;
    f.alpha = alpha.to_float();
    f.gamma = gamma.to_float();
    return f;
}

// ---- MonomialPoly ----------------------------------------------------------

void MonomialPoly::normalize() {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

const BigRat& MonomialPoly::coeff(long k) const {
    static const BigRat zero(0);
    if (k < 0 || k >= static_cast<long>(c.size()))
        return zero;
    return c[static_cast<std::size_t>(k)];
}

BigRat MonomialPoly::eval(const BigRat& x) const {
    BigRat acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

MonomialPoly MonomialPoly::operator*(const MonomialPoly& o) const {
    if (is_zero() || o.is_zero())
        return {};
    std::vector<BigRat> out(c.size() + o.c.size() - 1, BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j)
            out[i + j] += c[i] * o.c[j];
    return MonomialPoly(std::move(out));
}

MonomialPoly MonomialPoly::operator+(const MonomialPoly& o) const {
    std::vector<BigRat> out(std::max(c.size(), o.c.size()), BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] += c[i];
    for (std::size_t i = 0; i < o.c.size(); ++i)
        out[i] += o.c[i];
    return MonomialPoly(std::move(out));
}

MonomialPoly MonomialPoly::operator-(const MonomialPoly& o) const {
    return *this + o.scaled(BigRat(-1));
}

MonomialPoly MonomialPoly::scaled(const BigRat& s) const {
    std::vector<BigRat> out = c;
    for (auto& v : out)
        v *= s;
    return MonomialPoly(std::move(out));
}

MonomialPoly MonomialPoly::shifted(long s) const {
    if (is_zero())
        return {};
    std::vector<BigRat> out(c.size() + static_cast<std::size_t>(s), BigRat(0));
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i + static_cast<std::size_t>(s)] = c[i];
    return MonomialPoly(std::move(out));
}

std::string MonomialPoly::to_json() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
            os << ',';
        os << '"' << c[i].get_str() << '"';
    }
    os << ']';
    return os.str();
}

MonomialPoly MonomialPoly::from_json(const std::string& json) {
    std::vector<BigRat> out;
    std::string cur;
    bool in_str = false;
    for (char ch : json) {
        if (ch == '"') {
            if (in_str) {
                BigRat q;
                if (q.set_str(cur, 10) != 0)
                    throw std::invalid_argument("bad coefficient '" + cur + "'");
                q.canonicalize();
                out.push_back(std::move(q));
                cur.clear();
            }
            in_str = !in_str;
        } else if (in_str) {
            cur += ch;
        }
    }
    return MonomialPoly(std::move(out));
}

// ---- degree cap ------------------------------------------------------------

namespace {
std::atomic<long> g_degree_cap{64};
}

long degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(long cap) { g_degree_cap.store(cap); }

static void check_degree(long n) {
    if (n < 0)
        throw PreconditionError("degree must be non-negative");
    if (n > degree_cap())
        throw PreconditionError("degree exceeds the configured cap");
}

// ---- poly_coeffs -----------------------------------------------------------

namespace {

MonomialPoly laguerre_coeffs(const BigRat& alpha, long n) {
    // L_n^(a)(x) = sum_i (-1)^i / i! * C(n+a, n-i) x^i
    std::vector<BigRat> c(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) {
        Scalar b = gen_binomial(Scalar::exact(BigRat(alpha + n)), n - i);
        BigRat v = b.rational() * recip_factorial(i);
        if (i % 2)
            v = -v;
        c[static_cast<std::size_t>(i)] = v;
    }
    return MonomialPoly(std::move(c));
}

MonomialPoly hermite_coeffs(long n) {
    // H_n(x) = sum_k (-1)^k n!/(k! (n-2k)!) (2x)^(n-2k)
    std::vector<BigRat> c(static_cast<std::size_t>(n) + 1, BigRat(0));
    BigRat nfact(factorial(n));
    for (long k = 0; 2 * k <= n; ++k) {
        long d = n - 2 * k;
        BigRat v = nfact * recip_factorial(k) * recip_factorial(d);
        BigInt two_d;
        mpz_ui_pow_ui(two_d.get_mpz_t(), 2, static_cast<unsigned long>(d));
        v *= two_d;
        if (k % 2)
            v = -v;
        c[static_cast<std::size_t>(d)] = v;
    }
    return MonomialPoly(std::move(c));
}

MonomialPoly jacobi_coeffs(const BigRat& a, const BigRat& b, long n) {
    // P_n^(a,b)(x) = (a+1)_n / n! * 2F1(-n, n+a+b+1; a+1; (1-x)/2),
    // expanded exactly term by term.
    std::vector<BigRat> c(static_cast<std::size_t>(n) + 1, BigRat(0));
    BigRat lead(1);
    {
        BigRat f = a + 1;
        for (long i = 0; i < n; ++i, ++f)
            lead *= f;
        lead *= recip_factorial(n);
    }
    BigRat term = lead; // T_k for k = 0
    for (long k = 0; k <= n; ++k) {
        // accumulate T_k * 2^-k * (1-x)^k
        BigRat p2 = term;
        for (long i = 0; i < k; ++i)
            p2 /= 2;
        BigRat bin(1);
        for (long i = 0; i <= k; ++i) {
            BigRat v = p2 * bin;
            if (i % 2)
                v = -v;
            c[static_cast<std::size_t>(i)] += v;
            bin *= BigRat(k - i, i + 1);
        }
        if (k < n) {
            BigRat num = BigRat(-n + k) * (BigRat(n) + a + b + 1 + k);
            BigRat den = (a + 1 + k) * BigRat(k + 1);
            term *= num / den;
        }
    }
    return MonomialPoly(std::move(c));
}

struct PolyKey {
    int kind;
    BigRat a, g;
    long n;
    bool operator<(const PolyKey& o) const {
        if (kind != o.kind)
            return kind < o.kind;
        if (int c = cmp(a, o.a); c != 0)
            return c < 0;
        if (int c = cmp(g, o.g); c != 0)
            return c < 0;
        return n < o.n;
    }
};

std::map<PolyKey, MonomialPoly> g_poly_cache;
std::shared_mutex g_poly_mutex;

} // namespace

MonomialPoly poly_coeffs(const FamilySpec& family, long n) {
    check_degree(n);
    family.validate();
    if (!family.params_exact())
        throw PreconditionError("poly_coeffs requires exact family parameters");

    PolyKey key{static_cast<int>(family.kind),
                family.kind == Family::hermite ? BigRat(0) : family.alpha.rational(),
                family.kind == Family::jacobi ? family.gamma.rational() : BigRat(0), n};
    {
        std::shared_lock lock(g_poly_mutex);
        auto it = g_poly_cache.find(key);
        if (it != g_poly_cache.end())
            return it->second;
    }
    MonomialPoly p;
    switch (family.kind) {
    case Family::laguerre: p = laguerre_coeffs(key.a, n); break;
    case Family::hermite: p = hermite_coeffs(n); break;
    case Family::jacobi: p = jacobi_coeffs(key.a, key.g, n); break;
    }
    std::unique_lock lock(g_poly_mutex);
    return g_poly_cache.emplace(key, std::move(p)).first->second;
}

// ---- norms -----------------------------------------------------------------

Scalar norm_h(const FamilySpec& family, long n) {
    check_degree(n);
    family.validate();
    switch (family.kind) {
    case Family::laguerre:
        // Gamma(n+alpha+1) / n!
        return gamma_scalar(family.alpha + Scalar::exact(n + 1)) *
               Scalar::exact(recip_factorial(n));
    case Family::hermite: {
        // 2^n n! sqrt(pi)
        BigInt two_n;
        mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
        return Scalar::exact(BigRat(two_n * factorial(n)), 1);
    }
    case Family::jacobi: {
        // 2^(a+g+1) B(n+a+1, n+g+1) (n+a+g+1)_n / n!
        const Scalar& a = family.alpha;
        const Scalar& g = family.gamma;
        Scalar two_pow;
        if (a.is_exact() && g.is_exact())
            two_pow = pow_scalar(Scalar::exact(2L), (a + g).rational() + 1);
        else {
            double e = (a + g).value() + 1.0;
            two_pow = Scalar::floating(std::pow(2.0, e),
                                       (a.rel_budget() + g.rel_budget()) * std::fabs(e) + 1e-15);
        }
        Scalar nn = Scalar::exact(n);
        return two_pow * beta_scalar(a + nn + Scalar::exact(1L), g + nn + Scalar::exact(1L)) *
               pochhammer(a + g + nn + Scalar::exact(1L), n) *
               Scalar::exact(recip_factorial(n));
    }
    }
    throw std::logic_error("unreachable");
}

// ---- Hermite -> Laguerre ----------------------------------------------------

HermiteLaguerreDecomp hermite_to_laguerre(long m) {
    check_degree(m);
    int nu = static_cast<int>(m % 2);
    long half = (m - nu) / 2;
    HermiteLaguerreDecomp d;
    d.sign = (half % 2) ? -1 : 1;
    d.nu = nu;
    d.degree = half;
    d.param = HalfInt(2 * nu - 1);
    Scalar poch = pochhammer(Scalar::exact(1, 2), (m + nu) / 2);
    d.scale = BigRat(factorial(m)) / poch.rational();
    return d;
}

// ---- Jacobi parameter shift -------------------------------------------------

std::vector<Scalar> jacobi_param_shift(long k, const Scalar& alpha, const Scalar& gamma,
                                       const Scalar& beta) {
    check_degree(k);
    Scalar one = Scalar::exact(1L);
    Scalar B = beta * (alpha + gamma); // shifted alpha+gamma
    Scalar ab = alpha * beta;
    if (scalar_cmp(ab, Scalar::exact(-1L)) <= 0 ||
        scalar_cmp(gamma * beta, Scalar::exact(-1L)) <= 0)
        throw PreconditionError("shifted parameters must exceed -1");
    std::vector<Scalar> c;
    c.reserve(static_cast<std::size_t>(k) + 1);
    for (long j = 0; j <= k; ++j) {
        Scalar jj = Scalar::exact(j);
        Scalar pre = pochhammer(alpha + gamma + Scalar::exact(k + 1), j) *
                     pochhammer(alpha + jj + one, k - j) *
                     (B + Scalar::exact(2 * j + 1)) *
                     Scalar::exact(recip_factorial(k - j)) /
                     pochhammer(B + jj + one, j + 1);
        Scalar f = hyp3f2_terminating(Scalar::exact(j - k), alpha + gamma + Scalar::exact(k + j + 1),
                                      ab + jj + one, alpha + jj + one,
                                      B + Scalar::exact(2 * j + 2), one);
        c.push_back(pre * f);
    }
    return c;
}

// ---- monomial inversion -------------------------------------------------------

std::vector<Scalar> monomial_inversion(const FamilySpec& family, long s, const Scalar& beta) {
    check_degree(s);
    family.validate();
    Scalar one = Scalar::exact(1L);
    std::vector<Scalar> d;
    switch (family.kind) {
    case Family::laguerre: {
        // x^s = s! sum_j (-1)^j C(s+alpha, s-j) L_j^(alpha)(x)
        BigInt sf = factorial(s);
        for (long j = 0; j <= s; ++j) {
            Scalar v = gen_binomial(family.alpha + Scalar::exact(s), s - j) *
                       Scalar::exact(BigRat(sf));
            if (j % 2)
                v = -v;
            d.push_back(v);
        }
        return d;
    }
    case Family::hermite: {
        // x^s = s!/2^s sum_j H_{s-2j} / (j! (s-2j)!)
        d.assign(static_cast<std::size_t>(s) + 1, Scalar::exact(0L));
        BigRat pre(factorial(s));
        for (long i = 0; i < s; ++i)
            pre /= 2;
        for (long j = 0; 2 * j <= s; ++j) {
            BigRat v = pre * recip_factorial(j) * recip_factorial(s - 2 * j);
            d[static_cast<std::size_t>(s - 2 * j)] = Scalar::exact(std::move(v));
        }
        return d;
    }
    case Family::jacobi: {
        // d_j(s, beta) with x^s = sum_j d_j P_j^(alpha beta, gamma beta)
        Scalar B = beta * (family.alpha + family.gamma);
        Scalar gb = family.gamma * beta;
        for (long j = 0; j <= s; ++j) {
            Scalar jj = Scalar::exact(j);
            Scalar v = gen_binomial(Scalar::exact(s), j) *
                       hyp2f1_terminating(Scalar::exact(j - s), gb + jj + one,
                                          B + Scalar::exact(2 * j + 2), Scalar::exact(2L)) *
                       Scalar::exact(BigRat(factorial(j)) * BigRat(BigInt(1) << static_cast<unsigned long>(j))) /
                       pochhammer(B + jj + one, j);
            if ((s - j) % 2)
                v = -v;
            d.push_back(v);
        }
        return d;
    }
    }
    throw std::logic_error("unreachable");
}

} // namespace kreinpoly
