#include "doctest.h"

#include <random>

#include "cubicmaps/series.hpp"

using namespace cubicmaps;
using QS = Series<Rational>;

namespace {

QS from_ints(std::vector<long> v, int order)
{
    std::vector<Rational> c;
    for (long x : v) c.emplace_back(x);
    return QS(std::move(c), order);
}

QS random_series(std::mt19937_64& rng, int order, int min_val)
{
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1, Rational(0));
    for (int i = min_val; i <= order; ++i) {
        Rational r(d(rng), 1 + (d(rng) + 9) % 4);
        r.canonicalize();
        c[static_cast<std::size_t>(i)] = r;
    }
    return QS(std::move(c), order);
}

} // namespace

TEST_CASE("series arithmetic")
{
    QS one_z = from_ints({1, 1}, 2);
    CHECK((one_z * one_z) == from_ints({1, 2, 1}, 2));

    QS b = from_ints({0, 1, 4, 24}, 3);
    CHECK((b + QS(3)) == b);
    QS b2 = b * b;
    CHECK(b2[2] == 1);
    CHECK(b2[3] == 8);
    CHECK((b2 - b2).valuation() > b2.order());
}

TEST_CASE("orders follow operand truncation")
{
    QS a = from_ints({1, 2, 3}, 2);
    QS b = from_ints({1, 1, 1, 1, 1}, 4);
    CHECK((a + b).order() == 2);
    CHECK((a * b).order() == 2);
    CHECK((QS::z() * a).order() == 3);
    CHECK_THROWS_AS(a[3], std::out_of_range);
}

TEST_CASE("exact division")
{
    QS a = QS::polynomial({0, 0, 1, 1});
    CHECK(exact_divide(a, QS::z()) == QS::polynomial({0, 1, 1}));

    QS one = from_ints({1}, 3);
    QS geo = exact_divide(one, from_ints({1, -1}, 3));
    CHECK(geo == from_ints({1, 1, 1, 1}, 3));

    CHECK_THROWS_AS(exact_divide(QS::polynomial({1, 1}), QS::z()), DivisionError);
    CHECK_THROWS_AS(exact_divide(one, QS(3)), DivisionError);
    // truncated dividend with nonzero constant term is not divisible by z
    CHECK_THROWS_AS(exact_divide(from_ints({1, 2}, 3), QS::z()), DivisionError);
}

TEST_CASE("composition")
{
    QS outer = QS::polynomial({1, 1, 1});
    QS inner = QS::polynomial({0, 2});
    CHECK(compose(outer, inner) == QS::polynomial({1, 2, 4}));

    // M(z(1+B)^3) with M = z^2+3z^3, B = z + O(z^2)
    QS m = from_ints({0, 0, 1, 3}, 3);
    QS bb = from_ints({0, 1}, 1);
    QS x = QS::z() * pow(1 + bb, 3);
    QS r = compose(m, x);
    CHECK(r.order() >= 3);
    CHECK(r[2] == 1);
    CHECK(r[3] == 9);

    CHECK_THROWS_AS(compose(outer, QS::polynomial({1, 1})), std::domain_error);
}

TEST_CASE("marker specialisation")
{
    using P = Poly<Rational>;
    P u = P::variable();
    auto u3 = u * u * u;
    Series<P> m(std::vector<P>{P(0), P(0), u3, u3 + P(2) * u3 * u}, 3);
    QS at1 = at_marker_one(m);
    CHECK(at1 == from_ints({0, 0, 1, 3}, 3));
}

TEST_CASE("polynomial exact division")
{
    using P = Poly<Rational>;
    P u = P::variable();
    P a = (u + P(1)) * (u * u - P(3));
    CHECK(divide_exact(a, u + P(1)) == u * u - P(3));
    CHECK(divide_exact(u * u * a, u * u * (u + P(1))) == u * u - P(3));
    CHECK_THROWS_AS(divide_exact(a, u - P(7)), DivisionError);
    // capped: 1/(1-u) mod u^4
    P capped = divide_exact(P(Rational(1), 3), P(1) - u);
    CHECK(capped == P(std::vector<Rational>{1, 1, 1, 1}, 3));
}

TEST_CASE("sqrt and derivative")
{
    QS s = from_ints({1, -4}, 4);
    QS r = sqrt(s);
    CHECK((r * r) == s);
    CHECK(derivative(from_ints({5, 1, 1, 1}, 3)) == from_ints({1, 2, 3}, 2));
}

TEST_CASE("property: ring laws and division round trip")
{
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + trial % 8;
        QS a = random_series(rng, n, 0);
        QS b = random_series(rng, n, 0);
        QS c = random_series(rng, n, 0);
        CHECK((a * (b + c)) == (a * b + a * c));
        CHECK(((a * b) * c) == (a * (b * c)));
        CHECK((a * b) == (b * a));
        QS unit = b;
        unit.set(0, Rational(1 + trial));
        QS q = exact_divide(a, unit);
        CHECK((q * unit).agrees_with(a));
    }
}

TEST_CASE("property: composition is associative")
{
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 4 + trial % 5;
        QS f = random_series(rng, n, 0);
        QS g = random_series(rng, n, 1);
        QS h = random_series(rng, n, 1);
        QS lhs = compose(compose(f, g), h);
        QS rhs = compose(f, compose(g, h));
        CHECK(lhs.agrees_with(rhs));
        CHECK(lhs.order() >= n);
    }
}
