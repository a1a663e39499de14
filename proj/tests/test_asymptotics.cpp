#include "doctest.h"

#include <cmath>
#include <random>

#include <boost/math/special_functions/airy.hpp>

#include "cubicmaps/asymptotics.hpp"

using namespace cubicmaps;

namespace {

const long double kSqrt3 = std::sqrt(3.0L);

bool brackets(const RootInterval& r, long double x)
{
    return rational_to_real(r.lo) <= x && x <= rational_to_real(r.hi);
}

} // namespace

TEST_CASE("Airy functions against an independent implementation")
{
    for (long double x : {-40.0L, -12.5L, -7.0L, -1.0L, 0.0L, 0.5L, 3.0L, 8.0L, 12.0L, 20.0L}) {
        CAPTURE(static_cast<double>(x));
        const AiryValue v = airy(x);
        const long double ai = boost::math::airy_ai(x), aip = boost::math::airy_ai_prime(x);
        CHECK(std::fabs(v.ai - ai) <= 1e-13L * std::max(1.0L, std::fabs(ai)) + 1e-300L);
        CHECK(std::fabs(v.aip - aip) <= 1e-12L * std::max(1.0L, std::fabs(aip)) + 1e-300L);
    }
    CHECK(airy(0).ai == doctest::Approx(0.355028053887817));
    CHECK(airy_crossover() > 5);
    CHECK_THROWS(airy(2 * kAiryBound));
}

TEST_CASE("Airy integral representation")
{
    for (long double x : {-3.0L, -0.7L, 0.0L, 1.0L, 2.5L})
        CHECK(airy_ai_quadrature(x) == doctest::Approx(static_cast<double>(airy(x).ai)).epsilon(1e-10));
}

TEST_CASE("Airy equation")
{
    for (long double x = -8; x <= 8; x += 0.5L)
        CHECK(std::fabs(airy_second_derivative(x) - x * airy(x).ai) < 1e-8L);
}

TEST_CASE("map-Airy density")
{
    const MapAiryCheck m = map_airy_checks(10.9215218947L, 10);
    CHECK(std::fabs(m.integral - 1) < 1e-6L);
    CHECK(std::fabs(m.integral_scaled - 1) < 1e-6L);
    CHECK(std::fabs(m.left_tail - 1) < 0.05L);
    CHECK(std::fabs(m.right_tail - 1) < 0.05L);
    CHECK(m.ode_residual < 1e-8L);
    // closed form at the origin: -2 Ai'(0)
    CHECK(map_airy_density(0) == doctest::Approx(-2 * static_cast<double>(airy(0).aip)));
    // positive, with the heavy tail on the left
    for (long double x = -6; x <= 1.5L; x += 0.25L) CHECK(map_airy_density(x) > 0);
    CHECK(map_airy_density(-3) > map_airy_density(3));
    CHECK(map_airy_density(0.5L, 2) == doctest::Approx(2 * static_cast<double>(map_airy_density(1))));
}

TEST_CASE("dominant singularities of the stored polynomials")
{
    const Rational tol(1, 1000000000000L);
    auto sing = [&](const std::string& name) {
        return locate_dominant_singularity(minimal_polynomial(name), Rational(0), Rational(1), tol);
    };
    CHECK(brackets(sing("C"), 1 / (12 * kSqrt3)));
    CHECK(brackets(sing("B"), 2.0L / 27));
    CHECK(brackets(sing("B*"), 1 / (5 + 3 * kSqrt3)));
    CHECK(brackets(sing("M"), 27.0L / 256));
    const auto rho = locate_dominant_singularity(univariate_record("rho*"), Rational(0), Rational(1), tol);
    CHECK(rho.mid() == doctest::Approx(1 / 10.38845).epsilon(1e-6));
    CHECK(brackets(sing("C*"), rho.mid()));
    const auto phi = locate_dominant_singularity(univariate_record("phi"), Rational(0), Rational(1), tol);
    CHECK(1 / phi.mid() == doctest::Approx(18.18695).epsilon(1e-6));
    const auto phis = locate_dominant_singularity(univariate_record("phi*"), Rational(0), Rational(1), tol);
    CHECK(1 / phis.mid() == doctest::Approx(7.039997).epsilon(1e-6));
}

TEST_CASE("Richardson extrapolation")
{
    std::vector<long double> s;
    for (int k = 10; k < 60; ++k) s.push_back(3 + 1.0L / k - 2.0L / (k * k) + 0.5L / (k * k * k));
    const auto e = richardson_limit(s, 10);
    CHECK(std::fabs(e.value - 3) < 1e-12L);

    std::vector<long double> pow2{1};
    for (int n = 1; n <= 80; ++n) pow2.push_back(pow2.back() * 2 * (1 + 1.0L / (n * n)));
    CHECK(growth_constant(pow2).value == doctest::Approx(2).epsilon(1e-9));
    CHECK_THROWS_AS(growth_constant(std::vector<long double>(20, 1.0L)), InsufficientTerms);
}

TEST_CASE("exponent and prefactor on a synthetic sequence")
{
    // a_n = 5 n^{-5/2} 7^n
    std::vector<long double> a{0};
    for (int n = 1; n <= 200; ++n) a.push_back(5 * std::pow(static_cast<long double>(n), -2.5L) * std::pow(7.0L, n));
    CHECK(exponent_estimate(a, 1.0L / 7) == doctest::Approx(-2.5).epsilon(1e-9));
    CHECK(prefactor_at(a, 1.0L / 7, 150) == doctest::Approx(5).epsilon(1e-9));
}

TEST_CASE("growth of the cubic and 2-connected classes")
{
    const auto c = class_sequence("c", 120, false);
    const auto b = class_sequence("b", 120, false);
    CHECK(growth_constant(c).value == doctest::Approx(static_cast<double>(12 * kSqrt3)).epsilon(1e-6));
    CHECK(growth_constant(b).value == doctest::Approx(13.5).epsilon(1e-6));
    const auto ce = class_sequence("c", 30, true);
    for (int n = 1; n <= 30; ++n) CHECK(ce[n] == doctest::Approx(static_cast<double>(c[n])).epsilon(1e-12));
}

TEST_CASE("singular expansions")
{
    const auto b = singular_expansion("B");
    CHECK(b.rho == doctest::Approx(std::cbrt(2.0) / 3));
    CHECK(b.A0 == doctest::Approx(1.0 / 8));
    const auto c = singular_expansion("C");
    CHECK(c.rho == doctest::Approx(std::cbrt(2.0) * std::sqrt(3.0) / 6));
    CHECK(c.A3 == doctest::Approx(12 * std::sqrt(2.0)));
    CHECK_THROWS(singular_expansion("X"));
}

TEST_CASE("map-Airy constants")
{
    const PredictedConstants p = predicted_constants();
    CHECK(p.block.c == doctest::Approx(10.9215218947).epsilon(1e-10));
    CHECK(p.cubic_block.c == doctest::Approx(12.6110872117).epsilon(1e-10));
    CHECK(p.three_connected.c == doctest::Approx(27.1635288451).epsilon(1e-10));
    CHECK(p.block.center == doctest::Approx(1 / std::sqrt(3.0)));
    CHECK(p.cubic_block.center == doctest::Approx(0.5));
    CHECK(p.three_connected.center == doctest::Approx(0.25));
    for (const MapAirySpec* s : {&p.block, &p.cubic_block, &p.three_connected}) CHECK(s->consistency < 1e-12L);
    CHECK(p.unit_constant_block == doctest::Approx(1).epsilon(1e-12));
    CHECK(p.unit_constant_three == doctest::Approx(1).epsilon(1e-12));
    CHECK(p.block.sigma_sq_gauss == doctest::Approx(0.116025).epsilon(1e-5));
    // scale from the saddle point
    CHECK(p.block.c_saddle == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-12));
    CHECK(p.cubic_block.c_saddle == doctest::Approx(1).epsilon(1e-12));
    CHECK(p.block.c / p.block.c_saddle ==
          doctest::Approx(4 * std::pow(1 - 1 / std::sqrt(3.0), -4.0 / 3)).epsilon(1e-12));
}

TEST_CASE("compare_to_airy on a synthetic law")
{
    const PredictedConstants p = predicted_constants();
    for (int step : {1, 3}) {
        DistTable<Real> d;
        d.n = 3000;
        d.unit = SizeUnit::edges;
        const long double s = std::pow(3000.0L, 2.0L / 3);
        for (long t = 3; t < 3000; t += step) {
            const long double q = (t - p.block.center * 3000) / s;
            d.support.push_back(t);
            d.masses.push_back(step * map_airy_density(q, 1.5L) / s);
        }
        const auto r = compare_to_airy(d, p.block, 0.3L, false, 1.5L);
        CHECK(r.step == step);
        CHECK(r.sup_distance < 1e-12L);
        CHECK(r.points > 10);
        CHECK(compare_to_airy(d, p.block, 0.3L, false).sup_distance > 1);
    }
}

TEST_CASE("Gaussian factor of the degree-2 vertices")
{
    for (int n : {150, 300}) {
        const auto g = gaussian_factor_check(n);
        CAPTURE(n);
        CHECK(std::fabs(g.t - n / std::sqrt(3.0)) < 3);
        CHECK(std::fabs(g.z_score) < 1);
    }
}

TEST_CASE("property: map-Airy scaling")
{
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> xs(-4, 1), cs(0.5, 30);
    for (int i = 0; i < 20; ++i) {
        const long double x = xs(rng), c = cs(rng);
        CHECK(map_airy_density(x / c, c) == doctest::Approx(static_cast<double>(c * map_airy_density(x))));
    }
}
