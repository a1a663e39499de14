#include "doctest.h"

#include <random>

#include "cubicmaps/oracle.hpp"
#include "cubicmaps/statistics.hpp"

using namespace cubicmaps;

namespace {

Rational q(long a, long b)
{
    Rational r(a, b);
    r.canonicalize();
    return r;
}

QSqrt3 qs(long a, long b, long c, long d)
{
    return QSqrt3(q(a, b), q(c, d));
}

template <class R>
R sum_table(const std::vector<std::vector<R>>& t)
{
    R s(0);
    for (const auto& row : t)
        for (const auto& v : row) s += v;
    return s;
}

} // namespace

TEST_CASE("3-connected maps by root-face degree")
{
    const auto m = three_connected_root_degree<Rational>(4);
    CHECK(m[1].zero());
    CHECK(m[2] == Poly<Rational>::monomial(Rational(1), 3));
    CHECK(m[3] == Poly<Rational>({0, 0, 0, 1, 2}, Poly<Rational>::kUnbounded));
    CHECK(m[4] == Poly<Rational>({0, 0, 0, 3, 5, 5}, Poly<Rational>::kUnbounded));
    // u = 1 gives M
    const auto plain = build_three_connected<Rational>(9).M;
    const auto m9 = three_connected_root_degree<Rational>(8);
    for (int n = 0; n <= 8; ++n) CHECK(m9[n].at_one() == plain[n]);
}

TEST_CASE("root-face degree at small sizes")
{
    const auto d = root_degree_distribution<Rational>(1);
    CHECK(d.support == std::vector<long>{1, 2, 4});
    CHECK(d.masses == std::vector<Rational>{q(1, 4), q(1, 4), q(1, 2)});
    const auto cubic = build_cubic<Rational>(7).at("C");
    const auto sys = build_root_degree<Rational>(7);
    for (int n = 1; n <= 7; ++n) {
        CHECK(sys.at("C")[n].at_one() == cubic[n]);
        CHECK(root_degree_distribution<Rational>(n).total() == 1);
    }
}

TEST_CASE("root-face degree agrees with the oracle")
{
    for (int E : {3, 6, 9}) {
        std::vector<MapParameters> ps;
        for (const auto& m : enumerate_maps(E)) ps.push_back(parameters(m));
        const auto oracle = oracle_root_degree_counts(ps);
        const auto d = root_degree_distribution<Rational>(E / 3);
        for (std::size_t i = 0; i < d.support.size(); ++i)
            CHECK(d.masses[i] * static_cast<long>(ps.size()) == oracle.at(static_cast<int>(d.support[i])));
        CHECK(oracle.size() == d.support.size());
    }
}

TEST_CASE("capped root-degree tables aggregate the tail")
{
    const auto full = root_degree_distribution<Rational>(5);
    const auto capped = root_degree_distribution<Rational>(5, 4);
    CHECK(capped.total() == 1);
    CHECK(capped.support.back() == 5);
    Rational above(0);
    for (std::size_t i = 0; i < full.support.size(); ++i)
        if (full.support[i] > 4) above += full.masses[i];
    CHECK(capped.masses.back() == above);
    for (long k = 1; k <= 4; ++k) CHECK(capped.mass_at(k) == full.mass_at(k));
}

TEST_CASE("limit pgf of the root-face degree")
{
    const auto p = limit_root_degree_pgf<QSqrt3>(9);
    const std::vector<QSqrt3> table = {qs(0, 1, 1, 36),  qs(0, 1, 1, 36), qs(0, 1, 1, 36),  qs(-1, 216, 6, 216),
                                       qs(0, 1, 25, 864), qs(0, 1, 1, 36), qs(0, 1, 35, 1296)};
    for (int k = 1; k <= 7; ++k) CHECK(p[k] == table[static_cast<std::size_t>(k - 1)]);
    CHECK(verify_poly_residual(minimal_polynomial("Q"), p));

    const auto f = limit_root_degree_pgf<Real>(100);
    Real partial = 0;
    for (int k = 1; k <= 100; ++k) {
        CHECK(f[k] > 0);
        if (k >= 6) CHECK(f[k] < f[k - 1]);
        partial += f[k];
        CHECK(partial < 1);
    }
    CHECK(partial > 0.99L);
}

TEST_CASE("tail constants of the root-face degree")
{
    const auto t = root_degree_tail(100);
    CHECK(t.q == doctest::Approx(0.90699).epsilon(1e-5));
    CHECK(t.c == doctest::Approx(0.032328).epsilon(1e-3));
    CHECK_THROWS_AS(root_degree_tail(20), std::invalid_argument);
}

TEST_CASE("core schemes sum to the cubic series")
{
    const auto c = reindex_faces_to_edges(build_cubic<Rational>(8).at("C"), 0);
    for (CoreScheme s : {CoreScheme::two_core, CoreScheme::three_core})
        for (int n = 3; n <= 24; n += 3) CHECK(sum_table(core_counts<Rational>(s, n)) == c[n]);
    CHECK_THROWS_AS(core_counts<Rational>(CoreScheme::two_core, 7), std::invalid_argument);
}

TEST_CASE("closed-form schemes equal literal substitution")
{
    for (CoreScheme s : {CoreScheme::two_core, CoreScheme::three_core}) {
        const auto a = core_scheme_series<Rational>(s, 12);
        const auto b = core_scheme_series_direct<Rational>(s, 12);
        for (int n = 0; n <= 12; ++n) CHECK(a.series[n] == b.series[n]);
    }
}

TEST_CASE("remainder of the 3-core scheme")
{
    // C - H(1 + 2D) against the form L + I + P + (D - H)(D - H - S): the latter has the
    // extra H(H + S), which first shows up at 12 edges
    const auto sys = build_cubic<Rational>(6);
    const auto& L = sys.at("L");
    const auto& I = sys.at("I");
    const auto& P = sys.at("P");
    const auto& S = sys.at("S");
    const auto& H = sys.at("H");
    const auto& D = sys.at("D");
    const auto& C = sys.at("C");
    const auto one = Series<Rational>::constant(1);
    const auto ours = (C - H * (one + Series<Rational>::constant(2) * D)).truncate(6);
    const auto other = (L + I + P + (D - H) * (D - H - S)).truncate(6);
    const auto excess = (other - ours).truncate(6);
    CHECK(excess == (H * (H + S)).truncate(6));
    CHECK(excess[3] == 0);
    CHECK(excess[4] == 10);
    CHECK(excess[5] == 315);
    const auto t = core_counts<Rational>(CoreScheme::three_core, 12);
    CHECK(t[0][0] == ours[4]);
}

TEST_CASE("2-core law agrees with the oracle")
{
    for (int E : {3, 6, 9}) {
        std::vector<MapParameters> ps;
        for (const auto& m : enumerate_maps(E)) ps.push_back(parameters(m));
        const auto oracle = oracle_core_counts(ps);
        const auto t = core_counts<Rational>(CoreScheme::two_core, E);
        long seen = 0;
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = 0; b < t[a].size(); ++b) {
                if (is_zero(t[a][b])) continue;
                const auto it = oracle.find({static_cast<int>(a), static_cast<int>(b)});
                REQUIRE(it != oracle.end());
                CHECK(t[a][b] == it->second);
                ++seen;
            }
        CHECK(seen == static_cast<long>(oracle.size()));
    }
}

TEST_CASE("core size tables")
{
    const auto d = core_size_distribution<Rational>(CoreKind::block, 3);
    CHECK(d.total() == 1);
    CHECK(d.unit == SizeUnit::edges);
    // the 3-bond is its own block; the dumbbell has a loop or nothing at the root
    CHECK(d.mass_at(3) == q(1, 4));
    CHECK(d.mass_at(0) == q(1, 4));
    CHECK(d.mass_at(1) == q(1, 2));
    const auto l = largest_component_distribution<Real>(CoreKind::block, 60);
    CHECK_FALSE(l.exact);
    CHECK(l.total() == doctest::Approx(1.0L));
    CHECK(l.support.front() > 30);
}

TEST_CASE("marked systems at small sizes")
{
    const auto e = marked_expectations<Rational>(4);
    CHECK(e[0].isthmuses == q(3, 4));
    CHECK(e[0].cut_vertices == 0);
    CHECK(e[0].loops == q(3, 2));
    CHECK(e[1].isthmuses == q(3, 2));
    CHECK(e[1].cut_vertices == q(5, 4));
    CHECK(e[2].isthmuses == q(15, 7));
    CHECK(e[2].cut_vertices == q(15, 7));
    CHECK(e[3].isthmuses == q(87, 32));
    CHECK(e[3].cut_vertices == q(93, 32));
    const auto d = marked_distribution<Rational>(1, Marking::isthmus);
    CHECK(d.support == std::vector<long>{0, 1});
    CHECK(d.masses == std::vector<Rational>{q(1, 4), q(3, 4)});
}

TEST_CASE("export formats")
{
    const auto d = root_degree_distribution<Rational>(1);
    const std::string csv = to_csv(d);
    CHECK(csv.find("param_value,mass") != std::string::npos);
    CHECK(csv.find("4,1/2") != std::string::npos);
    const std::string json = to_json(d);
    CHECK(json.find("\"schema_version\"") != std::string::npos);
    CHECK(json.find("\"1/4\"") != std::string::npos);
}

// Hand-rolled generators: random sizes and parameters, fixed seed.
TEST_CASE("property: distribution tables are probability laws")
{
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 12; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 8)(rng);
        const int pick = std::uniform_int_distribution<int>(0, 4)(rng);
        DistTable<Rational> d;
        switch (pick) {
        case 0: d = root_degree_distribution<Rational>(n); break;
        case 1: d = core_size_distribution<Rational>(CoreKind::block, 3 * n); break;
        case 2: d = core_size_distribution<Rational>(CoreKind::three_connected, 3 * n); break;
        case 3: d = marked_distribution<Rational>(n, Marking::isthmus); break;
        default: d = marked_distribution<Rational>(n, Marking::cut_vertex); break;
        }
        CAPTURE(n);
        CAPTURE(pick);
        CHECK(d.total() == 1);
        for (std::size_t i = 0; i < d.support.size(); ++i) {
            CHECK(d.masses[i] > 0);
            if (i > 0) CHECK(d.support[i] > d.support[i - 1]);
        }
    }
}

TEST_CASE("property: marked laws have the exact expectations as means")
{
    std::mt19937 rng(7);
    const auto e = marked_expectations<Rational>(9);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = std::uniform_int_distribution<int>(1, 9)(rng);
        const Marking mk = static_cast<Marking>(std::uniform_int_distribution<int>(0, 2)(rng));
        const auto d = marked_distribution<Rational>(n, mk);
        const auto& x = e[static_cast<std::size_t>(n - 1)];
        const Rational want = mk == Marking::isthmus ? x.isthmuses : mk == Marking::cut_vertex ? x.cut_vertices : x.loops;
        CAPTURE(n);
        CHECK(d.mean() == want);
    }
}

TEST_CASE("property: float and exact backends agree")
{
    std::mt19937 rng(99);
    for (int trial = 0; trial < 5; ++trial) {
        const int n = 3 * std::uniform_int_distribution<int>(2, 12)(rng);
        const auto a = core_size_distribution<Rational>(CoreKind::cubic_block, n);
        const auto b = core_size_distribution<Real>(CoreKind::cubic_block, n);
        REQUIRE(a.support == b.support);
        for (std::size_t i = 0; i < a.support.size(); ++i)
            CHECK(b.masses[i] == doctest::Approx(static_cast<double>(rational_to_real(a.masses[i]))).epsilon(1e-12));
    }
}
