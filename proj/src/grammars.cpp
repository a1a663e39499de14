#include "cubicmaps/grammars.hpp"

#include <stdexcept>

namespace cubicmaps {

mpz_class closed_formula_c(unsigned n)
{
    if (n < 1) throw std::invalid_argument("closed formula needs n >= 1");
    mpz_class num, den, f1, f2;
    mpz_2fac_ui(num.get_mpz_t(), 3 * n);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * n + 1);
    mpz_fac_ui(f1.get_mpz_t(), n + 2);
    mpz_2fac_ui(f2.get_mpz_t(), n);
    den = f1 * f2;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("c_n not integral");
    return num / den;
}

mpz_class closed_formula_b(unsigned n)
{
    if (n < 1) throw std::invalid_argument("closed formula needs n >= 1");
    mpz_class num, f1, f2;
    mpz_fac_ui(num.get_mpz_t(), 3 * n);
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), n + 1);
    mpz_fac_ui(f1.get_mpz_t(), n);
    mpz_fac_ui(f2.get_mpz_t(), 2 * n + 2);
    mpz_class den = f1 * f2;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) throw std::logic_error("b_n not integral");
    return num / den;
}

namespace {

template <class R>
Series<R> pick(const SeriesMap<R>& m, const std::string& key)
{
    return m.at(key);
}

template <class R>
std::function<Series<R>(int)> builder(const std::string& name)
{
    if (name == "three-connected") return [](int N) { return build_three_connected<R>(N).M; };
    if (name == "two-connected") return [](int N) { return pick(build_two_connected<R>(N), "B"); };
    if (name == "cubic") return [](int N) { return pick(build_cubic<R>(N), "C"); };
    if (name == "two-connected-simple") return [](int N) { return pick(build_two_connected_simple<R>(N), "B*"); };
    if (name == "simple") return [](int N) { return pick(build_simple<R>(N), "C*"); };
    if (name == "two-connected-triangle-free")
        return [](int N) { return pick(build_triangle_free<R>(N, TriangleFreeVariant::two_connected), "G"); };
    if (name == "triangle-free")
        return [](int N) { return pick(build_triangle_free<R>(N, TriangleFreeVariant::general), "F"); };
    if (name == "two-connected-triangle-free-simple")
        return [](int N) { return pick(build_triangle_free<R>(N, TriangleFreeVariant::two_connected_simple), "G*"); };
    if (name == "triangle-free-simple")
        return [](int N) { return pick(build_triangle_free<R>(N, TriangleFreeVariant::simple), "F*"); };
    throw std::invalid_argument("unknown class " + name);
}

CatalogEntry make(std::string name, std::string symbol, std::string description, std::string oeis,
                  std::vector<long long> table, std::vector<long long> expected)
{
    CatalogEntry e;
    e.exact = builder<Rational>(name);
    e.floating = builder<Real>(name);
    e.name = std::move(name);
    e.symbol = std::move(symbol);
    e.description = std::move(description);
    e.oeis = std::move(oeis);
    e.table = std::move(table);
    e.expected = std::move(expected);
    return e;
}

} // namespace

const std::vector<CatalogEntry>& catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back(make("three-connected", "t", "3-connected cubic maps (M = T - z)", "A000260",
                         {0, 1, 3, 13, 68, 399, 2530, 16965, 118668}, {0, 1, 3, 13, 68, 399, 2530, 16965, 118668}));
        v.push_back(make("two-connected", "b", "2-connected cubic maps", "A000309",
                         {1, 4, 24, 176, 1456, 13056, 124032, 1230592, 12629760},
                         {1, 4, 24, 176, 1456, 13056, 124032, 1230592, 12629760}));
        v.push_back(make("cubic", "c", "all cubic maps", "A002005",
                         {4, 32, 336, 4096, 54912, 786432, 11824384, 184549376, 2966845440},
                         {4, 32, 336, 4096, 54912, 786432, 11824384, 184549376, 2966845440}));
        v.push_back(make("two-connected-simple", "b*", "2-connected simple cubic maps", "A058860",
                         {0, 1, 3, 19, 128, 909, 6737, 51683, 407802}, {0, 1, 3, 19, 128, 909, 6737, 51683, 407802}));
        v.push_back(make("simple", "c*", "simple cubic maps", "A058859", {0, 1, 3, 19, 143, 1089, 8564, 69075, 569469},
                         {0, 1, 3, 19, 143, 1089, 8564, 69075, 569469}));
        // the printed g cell at 9 faces lacks its last digit (it would be smaller than the 8-face value)
        v.push_back(make("two-connected-triangle-free", "g", "2-connected triangle-free cubic maps", "",
                         {1, 3, 12, 64, 432, 3244, 2596, 217806, 1893226},
                         {1, 3, 12, 64, 432, 3244, 25969, 217806, 1893226}));
        v.push_back(make("triangle-free", "f", "triangle-free cubic maps", "",
                         {4, 19, 147, 1432, 16547, 206520, 2707135, 36818912, 515736964},
                         {4, 19, 147, 1432, 16547, 206520, 2707135, 36818912, 515736964}));
        v.push_back(make("two-connected-triangle-free-simple", "g*", "2-connected simple triangle-free cubic maps", "",
                         {0, 0, 0, 1, 3, 12, 59, 325, 1863}, {0, 0, 0, 1, 3, 12, 59, 325, 1863}));
        v.push_back(make("triangle-free-simple", "f*", "simple triangle-free cubic maps", "",
                         {0, 0, 0, 1, 3, 12, 59, 325, 1890}, {0, 0, 0, 1, 3, 12, 59, 325, 1890}));
        return v;
    }();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& key)
{
    for (const auto& e : catalog())
        if (e.name == key || e.symbol == key) return e;
    throw std::invalid_argument("unknown class: " + key);
}

std::vector<SequenceRow> sequence_rows(const CatalogEntry& e, int N)
{
    std::vector<SequenceRow> rows;
    if (N < 1) return rows;
    const Series<Rational> s = e.exact(N);
    for (int n = 1; n <= N; ++n) rows.push_back({e.name, n + 2, s[n].get_str()});
    return rows;
}

} // namespace cubicmaps
