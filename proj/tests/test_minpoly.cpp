#include "doctest.h"

#include "cubicmaps/grammars.hpp"
#include "cubicmaps/minpoly.hpp"

using namespace cubicmaps;

namespace {

Series<Rational> prefix(std::vector<Rational> c) { return Series<Rational>(std::move(c), static_cast<int>(c.size()) - 1); }

const QSqrt3 s3 = QSqrt3::sqrt3();

} // namespace

TEST_CASE("parser")
{
    CHECK_THROWS(BiPoly::parse("2u", 'y', 'z'));
    auto q = BiPoly::parse("3usqrt3 - 1", 'p', 'u');
    CHECK(q.coeff(0, 1) == QSqrt3(0, 3));
    CHECK(q.coeff(0, 0) == QSqrt3(-1));
    auto r = BiPoly::parse("y^2 - 2yz + z^2");
    CHECK(r == pow(BiPoly::y_var() - BiPoly::z_var(), 2));
    CHECK(r.deg_y() == 2);
    CHECK(r.deg_z() == 2);
    CHECK(r.integral());
    CHECK_FALSE(q.rational());
}

TEST_CASE("Newton iteration on the Catalan equation")
{
    MinimalPolynomialRecord cat{"catalan", "test", BiPoly::parse("y - z - y^2"), 'y', 'z'};
    auto y = newton_solve_poly(cat, prefix({0, 1}), 8);
    std::vector<long> expect{0, 1, 1, 2, 5, 14, 42, 132, 429};
    for (int n = 0; n <= 8; ++n) CHECK(y[n] == expect[static_cast<std::size_t>(n)]);
    CHECK_THROWS_AS(newton_solve_poly(cat, prefix({0, 2}), 8), NewtonError);
    // at y = 1/2 the derivative 1 - 2y vanishes
    MinimalPolynomialRecord branch{"branch", "test", BiPoly::parse("(1 - 2y)^2 - 4z"), 'y', 'z'};
    CHECK_THROWS_AS(newton_solve_poly(branch, prefix({Rational(1, 2)}), 4), NewtonError);
}

TEST_CASE("stored polynomials regenerate the series")
{
    auto m = newton_solve_poly(minimal_polynomial("M"), prefix({0, 0, 1}), 12);
    auto t = build_three_connected<Rational>(12).M;
    CHECK(m[5] == 68);
    CHECK(m.agrees_with(t));

    auto c = newton_solve_poly(minimal_polynomial("C"), prefix({0, 4}), 12);
    CHECK(c.agrees_with(build_cubic<Rational>(12).at("C")));
    auto b = newton_solve_poly(minimal_polynomial("B"), prefix({0, 1}), 12);
    CHECK(b.agrees_with(build_two_connected<Rational>(12).at("B")));
    auto cs = newton_solve_poly(minimal_polynomial("C*"), prefix({0}), 12);
    CHECK(cs.agrees_with(build_simple<Rational>(12).at("C*")));
    auto bs = newton_solve_poly(minimal_polynomial("B*"), prefix({0}), 12);
    CHECK(bs.agrees_with(build_two_connected_simple<Rational>(12).at("B*")));

    auto mf = newton_solve_poly(minimal_polynomial("M"), series_cast<Real>(prefix({0, 0, 1})), 12);
    for (int n = 0; n <= 12; ++n) CHECK(static_cast<double>(mf[n]) == doctest::Approx(m[n].get_d()));
}

TEST_CASE("residuals of grammar series to order 40")
{
    const int N = 40;
    CHECK(verify_poly_residual(minimal_polynomial("M"), build_three_connected<Rational>(N).M));
    CHECK(verify_poly_residual(minimal_polynomial("C"), build_cubic<Rational>(N).at("C")));
    CHECK(verify_poly_residual(minimal_polynomial("B"), build_two_connected<Rational>(N).at("B")));
    auto cs = build_simple<Rational>(N).at("C*");
    CHECK(verify_poly_residual(minimal_polynomial("C*"), cs));
    CHECK_FALSE(verify_poly_residual(minimal_polynomial("C*-printed"), cs));
    CHECK(verify_poly_residual(minimal_polynomial("B*"), build_two_connected_simple<Rational>(N).at("B*")));
    CHECK_FALSE(verify_poly_residual(minimal_polynomial("C"), build_two_connected<Rational>(N).at("B")));
}

TEST_CASE("limiting root-degree polynomial over Q(sqrt3)")
{
    const auto& q = minimal_polynomial("Q");
    const QSqrt3 a = s3 * QSqrt3(Rational(1, 36));
    Series<QSqrt3> pre({QSqrt3(0), a, a, a}, 3);
    auto p = newton_solve_poly(q, pre, 7);
    CHECK(p[4] == (QSqrt3(0, 6) - QSqrt3(1)) * QSqrt3(Rational(1, 216)));
    CHECK(p[5] == QSqrt3(0, Rational(25, 864)));
    CHECK(p[6] == QSqrt3(0, Rational(1, 36)));
    CHECK(p[7] == QSqrt3(0, Rational(35, 1296)));
}

TEST_CASE("discriminant roots locate the singularities")
{
    const Rational tol(1, 1000000000000L);
    auto first = [&](const std::string& name) {
        return smallest_root(rational_norm(discriminant_y(minimal_polynomial(name).poly)), 0, 1, tol);
    };
    CHECK(first("M").contains(Rational(27, 256)));
    CHECK(first("C").contains(QSqrt3(0, Rational(1, 36))));
    CHECK(first("B").contains(Rational(2, 27)));
    CHECK(first("B*").contains((QSqrt3(0, 3) - QSqrt3(5)) * QSqrt3(Rational(1, 2))));

    auto rho = smallest_root(rational_norm(univariate_record("rho*").coeffs), 0, 1, tol);
    CHECK(first("C*").contains(rho.lo));
    CHECK(rho.mid() == doctest::Approx(0.0962607408870));

    auto phi = smallest_root(rational_norm(univariate_record("phi").coeffs), 0, 1, tol);
    auto phis = smallest_root(rational_norm(univariate_record("phi*").coeffs), 0, 1, tol);
    CHECK(phi.mid() == doctest::Approx(0.0549844666).epsilon(1e-9));
    CHECK(phis.mid() == doctest::Approx(0.1420455067).epsilon(1e-9));

    auto inv_q = smallest_root_qsqrt3(univariate_record("q-cubic").coeffs, 1, 2, tol);
    CHECK(1 / inv_q.mid() == doctest::Approx(0.90699).epsilon(1e-5));
}

TEST_CASE("Sturm counting")
{
    // (x - 1/3)^2 (x - 1/2)(x + 1)
    const QPoly sq{Rational(1, 9), Rational(-2, 3), Rational(1)};
    const QPoly lin{Rational(-1, 2), Rational(1, 2), Rational(1)};
    QPoly f(5, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) f[i + j] += sq[i] * lin[j];
    SturmChain s(f);
    CHECK(s.roots_in(0, 1) == 2);
    CHECK(s.roots_in(-2, 0) == 1);
    CHECK(s.roots_in(Rational(1, 3), Rational(1, 2)) == 1);
    auto roots = isolate_roots(f, -2, 2, Rational(1, 1000));
    REQUIRE(roots.size() == 3);
    CHECK(roots[1].contains(Rational(1, 3)));
    CHECK(sign(QSqrt3(2) - s3) == 1);
    CHECK(sign(QSqrt3(Rational(17, 10)) - s3) == -1);
    CHECK(sign(QSqrt3(0)) == 0);
}
