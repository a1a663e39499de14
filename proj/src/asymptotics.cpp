#include "cubicmaps/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace cubicmaps {

namespace {

using mp = boost::multiprecision::cpp_bin_float_50;
constexpr int kDigits = 50;

const mp& pi_mp()
{
    static const mp v = boost::math::constants::pi<mp>();
    return v;
}

// Ai(0) and -Ai'(0)
const mp& airy_c1()
{
    static const mp v = 1 / (pow(mp(3), mp(2) / 3) * boost::math::tgamma(mp(2) / 3));
    return v;
}
const mp& airy_c2()
{
    static const mp v = 1 / (pow(mp(3), mp(1) / 3) * boost::math::tgamma(mp(1) / 3));
    return v;
}

struct AiryMp {
    mp ai, aip;
};

AiryMp airy_maclaurin(const mp& x)
{
    const mp x3 = x * x * x;
    const mp eps = std::numeric_limits<mp>::epsilon();
    mp f = 1, g = x, fp = 0, gp = 1;
    mp a = 1, b = x, d = x * x / 2, e = 1;
    fp = d;
    for (int k = 1; k < 2000; ++k) {
        a *= x3 / ((3 * k - 1) * (3 * k));
        b *= x3 / ((3 * k) * (3 * k + 1));
        e *= x3 / ((3 * k) * (3 * k - 2));
        f += a;
        g += b;
        gp += e;
        if (k >= 2) {
            d *= x3 / (3 * (k - 1) * (3 * k - 1));
            fp += d;
        }
        const mp scale = abs(f) + abs(g) + abs(fp) + abs(gp);
        if (abs(a) + abs(b) + abs(d) + abs(e) <= eps * scale && k > 3) break;
    }
    return {airy_c1() * f - airy_c2() * g, airy_c1() * fp - airy_c2() * gp};
}

// u_k and v_k of the Poincare expansions, up to the smallest term for this zeta.
struct Coefficients {
    std::vector<mp> u, v;
};

Coefficients expansion_coefficients(const mp& zeta)
{
    Coefficients c;
    mp u = 1;
    c.u.push_back(1);
    c.v.push_back(1);
    mp last = 1;
    for (int k = 1; k < 500; ++k) {
        u *= mp((6 * k - 5) * (6 * k - 3) * (6 * k - 1)) / (mp(216) * (2 * k - 1) * k);
        const mp term = u / pow(zeta, k);
        if (term >= last) break;
        last = term;
        c.u.push_back(u);
        c.v.push_back(-mp(6 * k + 1) / (6 * k - 1) * u);
    }
    return c;
}

// e^zeta Ai(y), e^zeta Ai'(y) for y above the crossover.
AiryMp airy_scaled_positive(const mp& y)
{
    const mp zeta = 2 * pow(y, mp(3) / 2) / 3;
    const Coefficients c = expansion_coefficients(zeta);
    mp su = 0, sv = 0, zk = 1;
    for (std::size_t k = 0; k < c.u.size(); ++k) {
        const mp sgn = (k % 2) ? -1 : 1;
        su += sgn * c.u[k] / zk;
        sv += sgn * c.v[k] / zk;
        zk *= zeta;
    }
    const mp y4 = pow(y, mp(1) / 4);
    const mp norm = 2 * sqrt(pi_mp());
    return {su / (norm * y4), -y4 * sv / norm};
}

AiryMp airy_negative(const mp& x)  // Ai(-x), Ai'(-x) for large x > 0
{
    const mp zeta = 2 * pow(x, mp(3) / 2) / 3;
    const Coefficients c = expansion_coefficients(zeta);
    mp pu = 0, qu = 0, pv = 0, qv = 0, zk = 1;
    for (std::size_t k = 0; k < c.u.size(); ++k) {
        // (-1)^j u_{2j} zeta^{-2j} and (-1)^j u_{2j+1} zeta^{-2j-1}
        const std::size_t j = k / 2;
        const mp sgn = (j % 2) ? -1 : 1;
        if (k % 2 == 0) {
            pu += sgn * c.u[k] / zk;
            pv += sgn * c.v[k] / zk;
        } else {
            qu += sgn * c.u[k] / zk;
            qv += sgn * c.v[k] / zk;
        }
        zk *= zeta;
    }
    const mp phase = zeta + pi_mp() / 4;
    const mp s = sin(phase), co = cos(phase);
    const mp x4 = pow(x, mp(1) / 4);
    const mp rp = sqrt(pi_mp());
    return {(s * pu - co * qu) / (rp * x4), -x4 * (co * pv + s * qv) / rp};
}

mp crossover_mp()
{
    // the series loses about exp(2 zeta) to cancellation, the expansion is good to exp(-2 zeta)
    static const mp v = pow(mp(3) / 2 * (kDigits * log(mp(10)) / 4), mp(2) / 3);
    return v;
}

AiryMp airy_mp(const mp& x)
{
    if (abs(x) > kAiryBound) throw std::domain_error("airy: |x| beyond the supported bound");
    if (x >= crossover_mp()) {
        AiryMp s = airy_scaled_positive(x);
        const mp ez = exp(-2 * pow(x, mp(3) / 2) / 3);
        return {s.ai * ez, s.aip * ez};
    }
    if (x <= -crossover_mp()) return airy_negative(-x);
    return airy_maclaurin(x);
}

} // namespace

long double airy_crossover() { return crossover_mp().convert_to<long double>(); }

AiryValue airy(long double x)
{
    const AiryMp a = airy_mp(mp(x));
    return {a.ai.convert_to<long double>(), a.aip.convert_to<long double>()};
}

long double airy_second_derivative(long double x)
{
    const mp h("1e-12");
    const mp X(x);
    return ((airy_mp(X + h).aip - airy_mp(X - h).aip) / (2 * h)).convert_to<long double>();
}

long double airy_ai_quadrature(long double x)
{
    const long double s3 = std::sqrt(3.0L);
    const long double pi = boost::math::constants::pi<long double>();
    auto f = [&](long double r) {
        return std::exp(-r * r * r / 3 - x * r / 2) * std::sin(pi / 3 - x * r * s3 / 2);
    };
    boost::math::quadrature::exp_sinh<long double> integrator;
    return integrator.integrate(f) / pi;
}

long double map_airy_density(long double xl)
{
    const mp x(xl);
    const mp y = x * x;
    const mp zeta = 2 * abs(x * y) / 3;
    const mp norm = sqrt(pi_mp());
    if (y >= crossover_mp()) {
        if (x < 0) {
            // A(x) = |x|^{1/2} (S_v - S_u) / sqrt(pi); the leading terms cancel exactly
            const Coefficients c = expansion_coefficients(zeta);
            mp diff = 0, zk = zeta;
            for (std::size_t k = 1; k < c.u.size(); ++k) {
                const mp sgn = (k % 2) ? -1 : 1;
                diff += sgn * (c.v[k] - c.u[k]) / zk;
                zk *= zeta;
            }
            return (sqrt(-x) * diff / norm).convert_to<long double>();
        }
        const AiryMp s = airy_scaled_positive(y);
        return (2 * exp(-4 * x * y / 3) * (x * s.ai - s.aip)).convert_to<long double>();
    }
    const AiryMp a = airy_maclaurin(y);
    return (2 * exp(-2 * x * y / 3) * (x * a.ai - a.aip)).convert_to<long double>();
}

MapAiryCheck map_airy_checks(long double c, long double tail_x)
{
    if (c <= 0) throw std::invalid_argument("map-Airy scale must be positive");
    MapAiryCheck out;
    const long double pi = boost::math::constants::pi<long double>();
    auto integrate = [](auto&& f) {
        boost::math::quadrature::exp_sinh<long double> right;
        long double err = 0;
        const long double a = right.integrate(f, 0.0L, std::numeric_limits<long double>::infinity(), 1e-12L, &err);
        const long double b = right.integrate([&](long double x) { return f(-x); }, 0.0L,
                                              std::numeric_limits<long double>::infinity(), 1e-12L, &err);
        return a + b;
    };
    out.integral = integrate([](long double x) { return map_airy_density(x); });
    out.integral_scaled = integrate([c](long double x) { return map_airy_density(x, c); });
    const long double X = tail_x;
    out.left_tail = map_airy_density(-X) * 4 * std::sqrt(pi) * std::pow(X, 2.5L);
    {
        // the right tail is far below long double range; evaluate the scaled product directly
        const mp x(X);
        const AiryMp s = airy_scaled_positive(x * x);
        const mp a = 2 * (x * s.ai - s.aip);  // A(x) e^{4x^3/3}
        out.right_tail = (a * sqrt(pi_mp()) / 2 / sqrt(x)).convert_to<long double>();
    }
    for (long double x = -10; x <= 10; x += 0.25L) {
        const long double r = std::fabs(airy_second_derivative(x) - x * airy(x).ai);
        out.ode_residual = std::max(out.ode_residual, r);
    }
    return out;
}

// ---------------------------------------------------------------------------

RootInterval locate_dominant_singularity(const MinimalPolynomialRecord& rec, const Rational& lo, const Rational& hi,
                                         const Rational& tol)
{
    return smallest_root_qsqrt3(discriminant_y(rec.poly), lo, hi, tol);
}

RootInterval locate_dominant_singularity(const UnivariateRecord& rec, const Rational& lo, const Rational& hi,
                                         const Rational& tol)
{
    return smallest_root_qsqrt3(rec.coeffs, lo, hi, tol);
}

namespace {

// Polynomial extrapolation in h = 1/k to h = 0 through the given nodes (Neville).
long double neville_at_zero(const std::vector<long double>& h, std::vector<long double> y)
{
    const std::size_t n = h.size();
    for (std::size_t m = 1; m < n; ++m)
        for (std::size_t i = 0; i + m < n; ++i)
            y[i] = (h[i + m] * y[i] - h[i] * y[i + 1]) / (h[i + m] - h[i]);
    return y[0];
}

long double estimate(const std::vector<long double>& s, int first, int end, int order, int spacing)
{
    std::vector<long double> h, y;
    for (int i = 0; i <= order; ++i) {
        const int idx = end - i * spacing;
        h.push_back(1.0L / (first + idx));
        y.push_back(s[static_cast<std::size_t>(idx)]);
    }
    return neville_at_zero(h, y);
}

} // namespace

Extrapolation richardson_limit(const std::vector<long double>& s, int first, int max_order)
{
    const int len = static_cast<int>(s.size());
    if (len < 8) throw InsufficientTerms("extrapolation needs at least 8 terms");
    Extrapolation best;
    bool have = false;
    for (int j = 0; j <= max_order; ++j) {
        // nodes spread over the upper half so the weights stay moderate
        const int spacing = std::max(1, len / (2 * (j + 2)));
        const int shift = std::max(1, spacing / 2);
        if (j * spacing + shift >= len) break;
        const long double e1 = estimate(s, first, len - 1, j, spacing);
        const long double e2 = estimate(s, first, len - 1 - shift, j, spacing);
        const long double r = std::fabs(e1 - e2);
        if (!have || r < best.residual) {
            best = {e1, j, r};
            have = true;
        }
    }
    return best;
}

Extrapolation growth_constant(const std::vector<long double>& a)
{
    std::vector<long double> ratios;
    int first = -1;
    for (std::size_t n = 2; n < a.size(); ++n) {
        if (a[n - 1] <= 0 || a[n] <= 0) {
            if (!ratios.empty()) throw std::domain_error("growth_constant: nonpositive term inside the sequence");
            continue;
        }
        if (first < 0) first = static_cast<int>(n);
        ratios.push_back(a[n] / a[n - 1]);
    }
    if (ratios.size() < 50) throw InsufficientTerms("growth_constant needs at least 50 positive terms");
    return richardson_limit(ratios, first);
}

long double exponent_estimate(const std::vector<long double>& a, long double rho)
{
    const int N = static_cast<int>(a.size()) - 1;
    if (N < 50) throw InsufficientTerms("exponent_estimate needs at least 50 terms");
    long double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int n = N / 2; n <= N; ++n) {
        if (a[static_cast<std::size_t>(n)] <= 0) throw std::domain_error("exponent_estimate: nonpositive term");
        const long double x = std::log(static_cast<long double>(n));
        const long double y = std::log(a[static_cast<std::size_t>(n)]) + n * std::log(rho);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
    }
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

long double prefactor_at(const std::vector<long double>& a, long double rho, int n)
{
    if (n < 1 || n >= static_cast<int>(a.size())) throw std::out_of_range("prefactor_at: n outside the sequence");
    return std::exp(std::log(a[static_cast<std::size_t>(n)]) + 2.5L * std::log(static_cast<long double>(n)) +
                    n * std::log(rho));
}

std::vector<long double> class_sequence(const std::string& cls, int N, bool exact)
{
    const CatalogEntry& e = catalog_entry(cls);
    std::vector<long double> out;
    if (exact) {
        const Series<Rational> s = e.exact(N);
        for (int n = 0; n <= N; ++n) out.push_back(rational_to_real(s[n]));
    } else {
        const Series<Real> s = e.floating(N);
        for (int n = 0; n <= N; ++n) out.push_back(s[n]);
    }
    return out;
}

// ---------------------------------------------------------------------------

SingularExpansion singular_expansion(const std::string& name)
{
    const long double s3 = std::sqrt(3.0L), s2 = std::sqrt(2.0L);
    const long double c13 = std::cbrt(2.0L), c23 = c13 * c13, c16 = std::pow(2.0L, 1.0L / 6);
    const long double rho = c13 * s3 / 6;
    if (name == "B") return {"B", c13 / 3, 1.0L / 8, 9.0L / 8, 3, "closed form, edge index"};
    if (name == "C") return {"C", rho, 6 * s3 - 10, 18 * (2 - s3), 12 * s2, "closed form, edge index"};
    if (name == "L") return {"L", rho, c23 * (s3 - 1.5L), c23 * (3 - s3), 4 * c16, "closed form, edge index"};
    if (name == "M") return {"M", 3 * c13 / 8, 5.0L / 256, 63.0L / 256, 3 * s2 / 8, "closed form, edge index"};
    if (name == "D") return {"D", rho, c23 * (2.25L - s3), c23 * (4.5L + s3), 36 * c16, "closed form, edge index"};
    throw std::invalid_argument("no stored singular expansion for " + name);
}

namespace {

long double rel(long double a, long double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300L); }

// Core sizes t have weight [z^n] H(z)^t with H = z g(X(z)), X the pendant series.  With
// H/H0 = 1 - Z^2/alpha0 + b Z^3 the saddle point at z^n gives the density
// lambda^2 A(lambda^2 x / alpha0) in x = (t - alpha0 n) / n^{2/3}, lambda^3 = 1/(3 alpha0 b),
// and 3 alpha0 b = 3 X3 (1 - alpha0) / X2.
long double saddle_scale(const SingularExpansion& X, long double alpha0)
{
    return std::pow(3 * X.A3 * (1 - alpha0) / X.A2, -2.0L / 3) / alpha0;
}

void finish(MapAirySpec& s)
{
    s.consistency = std::max({rel(s.c, s.c_closed), rel(s.center, s.center_closed), rel(s.alpha0, s.alpha0_closed),
                              rel(s.beta0, s.beta0_closed)});
}

} // namespace

PredictedConstants predicted_constants()
{
    const long double s3 = std::sqrt(3.0L);
    const SingularExpansion B = singular_expansion("B"), C = singular_expansion("C"), L = singular_expansion("L"),
                            M = singular_expansion("M"), D = singular_expansion("D");
    PredictedConstants out;
    out.tau = B.rho;
    out.sigma_D = D.rho;
    out.theta = M.rho;
    const long double ti = 1 / B.rho;

    MapAirySpec& b = out.block;
    b.name = "largest block";
    b.alpha0 = (ti + L.A0) / (ti + L.A0 + L.A2);
    b.alpha0_closed = 1 / s3;
    b.beta0 = 0;
    b.beta0_closed = 0;
    b.c = std::pow(3 * L.A3 / L.A2, 2.0L / 3) / b.alpha0 / std::pow(1 - b.alpha0, 2.0L / 3);
    b.c_closed = 2 * s3 / std::pow(1 - 1 / s3, 4.0L / 3);
    b.c_saddle = saddle_scale(L, b.alpha0);
    b.center = b.alpha0;
    b.center_closed = 1 / s3;
    b.sigma_sq_gauss = L.A0 / (B.rho * (ti + L.A0) * (ti + L.A0));
    finish(b);
    out.unit_constant_block = B.A3 / C.A3 * std::pow(1 + B.rho * L.A0, 2.5L) * std::pow(b.alpha0, -2.5L);

    MapAirySpec& cb = out.cubic_block;
    cb.name = "largest cubic block";
    cb.alpha0 = b.alpha0;
    cb.alpha0_closed = b.alpha0_closed;
    cb.beta0 = L.A0 / (ti + L.A0);
    cb.beta0_closed = 1 - s3 / 2;
    cb.c = b.c / (1 - cb.beta0);
    cb.c_saddle = b.c_saddle / (1 - cb.beta0);
    cb.c_closed = 4 / std::pow(1 - 1 / s3, 4.0L / 3);
    cb.center = cb.alpha0 * (1 - cb.beta0);
    cb.center_closed = 0.5L;
    cb.sigma_sq_gauss = b.sigma_sq_gauss;
    finish(cb);

    MapAirySpec& t = out.three_connected;
    const long double th = M.rho, sg = D.rho;
    t.name = "largest 3-connected component";
    t.alpha0 = (2 * th - sg) / (2 * th - sg * (1 - sg * D.A2));
    t.alpha0_closed = 0.5L - s3 / 9;
    t.beta0 = sg * sg * D.A0 / (2 * th - sg);
    t.beta0_closed = 19.0L / 46 - 3 * s3 / 23;
    const long double c3 = std::pow(3 * D.A3 / ((1 - t.alpha0) * D.A2), 2.0L / 3) / t.alpha0;
    t.c = c3 / (1 - t.beta0);
    t.c_saddle = saddle_scale(D, t.alpha0) / (1 - t.beta0);
    // printed with 3/2 - 1/sqrt3, which does not reproduce the stated value
    t.c_closed = 72 * std::pow(1.5L + 1 / s3, -4.0L / 3);
    t.center = t.alpha0 * (1 - t.beta0);
    t.center_closed = 0.25L;
    finish(t);
    out.unit_constant_three =
        M.A3 / C.A3 * std::pow((1 + 2 * sg * D.A0) / (1 + sg * D.A0), 2.5L) * std::pow(t.alpha0, -2.5L);
    return out;
}

AiryComparison compare_to_airy(const DistTable<Real>& dist, const MapAirySpec& spec, long double window, bool reroot,
                               long double c)
{
    if (dist.unit != SizeUnit::edges || dist.n % 3 != 0) throw std::invalid_argument("compare_to_airy expects an edge-indexed table");
    if (c <= 0) c = spec.c;
    const long double n = dist.n;
    const long double scale = std::pow(n, 2.0L / 3);
    AiryComparison out;
    long step = 0;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        const long double q = (dist.support[i] - spec.center * n) / scale;
        if (std::fabs(q) <= window && dist.support[i] > 0) idx.push_back(i);
    }
    if (idx.empty()) throw std::domain_error("compare_to_airy: no support inside the window");
    for (std::size_t j = 1; j < idx.size(); ++j) step = std::gcd(step, dist.support[idx[j]] - dist.support[idx[j - 1]]);
    out.step = step == 0 ? 1 : static_cast<int>(step);
    for (std::size_t i : idx) {
        const long double t = dist.support[i];
        const long double q = (t - spec.center * n) / scale;
        long double mass = dist.masses[i];
        // a component of cubic size t has about t / (1 - beta0) edges able to carry the root
        if (reroot) mass *= n * (1 - spec.beta0) / t;
        const long double v = scale * mass / out.step;
        out.sup_distance = std::max(out.sup_distance, std::fabs(v - map_airy_density(q, c)));
        ++out.points;
    }
    out.mean_offset = (dist.mean() / dist.total() - spec.center * n) / scale;
    return out;
}

GaussianCheck gaussian_factor_check(int n)
{
    const PredictedConstants pc = predicted_constants();
    const auto table = core_counts<Real>(CoreScheme::two_core, n);
    GaussianCheck g;
    g.n = n;
    // the attainable t closest to the centre with the largest total weight nearby
    long best = -1;
    for (int t = 1; t <= n; ++t) {
        Real w = 0;
        for (const Real& c : table[static_cast<std::size_t>(t)]) w += c;
        if (w <= 0) continue;
        if (best < 0 || std::fabs(t - pc.block.alpha0 * n) < std::fabs(best - pc.block.alpha0 * n)) best = t;
    }
    g.t = static_cast<int>(best);
    Real w = 0, wm = 0;
    const auto& row = table[static_cast<std::size_t>(best)];
    for (std::size_t m = 0; m < row.size(); ++m) {
        w += row[m];
        wm += row[m] * static_cast<Real>(m);
    }
    g.mean_m = wm / w;
    g.predicted = pc.cubic_block.beta0 * g.t;
    g.z_score = (g.mean_m - g.predicted) / std::sqrt(pc.block.sigma_sq_gauss * g.t);
    return g;
}

} // namespace cubicmaps
