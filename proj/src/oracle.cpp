#include "cubicmaps/oracle.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cubicmaps/grammars.hpp"
#include "cubicmaps/statistics.hpp"

namespace cubicmaps {

int RotationMap::faces() const
{
    std::vector<char> seen(static_cast<std::size_t>(darts()), 0);
    int f = 0;
    for (int d = 0; d < darts(); ++d) {
        if (seen[static_cast<std::size_t>(d)]) continue;
        ++f;
        for (int e = d; !seen[static_cast<std::size_t>(e)]; e = phi(e)) seen[static_cast<std::size_t>(e)] = 1;
    }
    return f;
}

std::string RotationMap::dump() const
{
    std::ostringstream out;
    out << E << " ";
    for (int v = 0; v < vertices(); ++v) out << "(" << 3 * v + 1 << "," << 3 * v + 2 << "," << 3 * v + 3 << ")";
    out << " ";
    for (int d = 0; d < darts(); ++d)
        if (d < alpha[static_cast<std::size_t>(d)]) out << "(" << d + 1 << "," << alpha[static_cast<std::size_t>(d)] + 1 << ")";
    return out.str();
}

bool RotationMap::canonical() const
{
    // relabel vertices in discovery order, each starting at its entry dart
    std::vector<int> label(static_cast<std::size_t>(vertices()), -1);
    std::vector<int> entry(static_cast<std::size_t>(vertices()), -1);
    std::vector<int> order;
    label[0] = 0;
    entry[0] = 0;
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        const int v = order[i];
        for (int k = 0; k < 3; ++k) {
            int d = entry[static_cast<std::size_t>(v)];
            for (int j = 0; j < k; ++j) d = sigma(d);
            const int e = alpha[static_cast<std::size_t>(d)];
            const int w = vertex(e);
            if (label[static_cast<std::size_t>(w)] < 0) {
                label[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
                entry[static_cast<std::size_t>(w)] = e;
                order.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != vertices()) return false;
    auto relabel = [&](int d) {
        const int v = vertex(d);
        int k = 0;
        for (int e = entry[static_cast<std::size_t>(v)]; e != d; e = sigma(e)) ++k;
        return 3 * label[static_cast<std::size_t>(v)] + k;
    };
    for (int d = 0; d < darts(); ++d)
        if (relabel(alpha[static_cast<std::size_t>(d)]) != alpha[static_cast<std::size_t>(relabel(d))]) return false;
    return true;
}

namespace {

class Enumerator {
public:
    explicit Enumerator(int E) : E_(E), V_(2 * E / 3), F_(E / 3 + 2), alpha_(static_cast<std::size_t>(2 * E), -1) {}

    std::vector<RotationMap> run()
    {
        discovered_ = 1;
        extend();
        return std::move(out_);
    }

private:
    // Faces already closed; each face still open needs an unassigned dart, so the final count
    // is at most closed + unassigned.
    bool can_reach_planar() const
    {
        const int n = 2 * E_;
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        int closed = 0, unassigned = 3 * (V_ - discovered_);
        for (int d = 0; d < 3 * discovered_; ++d)
            if (alpha_[static_cast<std::size_t>(d)] < 0) ++unassigned;
        for (int d = 0; d < 3 * discovered_; ++d) {
            if (seen[static_cast<std::size_t>(d)]) continue;
            int e = d;
            bool open = false;
            while (!seen[static_cast<std::size_t>(e)]) {
                seen[static_cast<std::size_t>(e)] = 1;
                const int a = alpha_[static_cast<std::size_t>(e)];
                if (a < 0) {
                    open = true;
                    break;
                }
                e = RotationMap::sigma(a);
            }
            if (!open && e == d) ++closed;
        }
        return closed <= F_ && closed + unassigned >= F_;
    }

    void extend()
    {
        int d = 0;
        while (d < 3 * discovered_ && alpha_[static_cast<std::size_t>(d)] >= 0) ++d;
        if (d == 3 * discovered_) {
            if (discovered_ != V_) return;
            RotationMap m{E_, alpha_};
            if (m.faces() == F_) out_.push_back(std::move(m));
            return;
        }
        if (!can_reach_planar()) return;
        for (int e = d + 1; e < 3 * discovered_; ++e) {
            if (alpha_[static_cast<std::size_t>(e)] >= 0) continue;
            link(d, e);
            extend();
            unlink(d, e);
        }
        if (discovered_ < V_) {
            const int e = 3 * discovered_;
            ++discovered_;
            link(d, e);
            extend();
            unlink(d, e);
            --discovered_;
        }
    }

    void link(int a, int b)
    {
        alpha_[static_cast<std::size_t>(a)] = b;
        alpha_[static_cast<std::size_t>(b)] = a;
    }
    void unlink(int a, int b)
    {
        alpha_[static_cast<std::size_t>(a)] = -1;
        alpha_[static_cast<std::size_t>(b)] = -1;
    }

    int E_, V_, F_;
    int discovered_ = 0;
    std::vector<int> alpha_;
    std::vector<RotationMap> out_;
};

struct Graph {
    int V = 0;
    std::vector<std::pair<int, int>> edges;

    // components among vertices not in `removed_v`, using edges not in `removed_e`
    int components(const std::vector<char>& removed_v, const std::vector<char>& removed_e) const
    {
        std::vector<int> parent(static_cast<std::size_t>(V));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            return x;
        };
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (removed_e[i]) continue;
            const auto [a, b] = edges[i];
            if (removed_v[static_cast<std::size_t>(a)] || removed_v[static_cast<std::size_t>(b)]) continue;
            parent[static_cast<std::size_t>(find(a))] = find(b);
        }
        int c = 0;
        for (int v = 0; v < V; ++v)
            if (!removed_v[static_cast<std::size_t>(v)] && find(v) == v) ++c;
        return c;
    }
};

} // namespace

std::vector<RotationMap> enumerate_maps(int E)
{
    if (E <= 0 || E % 3 != 0 || E > 15) throw std::invalid_argument("enumerate_maps: E must be 3, 6, 9, 12 or 15");
    return Enumerator(E).run();
}

MapParameters parameters(const RotationMap& m)
{
    MapParameters p;
    const int V = m.vertices();
    Graph g;
    g.V = V;
    std::vector<int> edge_of(static_cast<std::size_t>(m.darts()));
    for (int d = 0; d < m.darts(); ++d) {
        const int a = m.alpha[static_cast<std::size_t>(d)];
        if (d < a) {
            edge_of[static_cast<std::size_t>(d)] = edge_of[static_cast<std::size_t>(a)] = static_cast<int>(g.edges.size());
            g.edges.emplace_back(RotationMap::vertex(d), RotationMap::vertex(a));
        }
    }
    const std::size_t ne = g.edges.size();

    // faces
    std::vector<char> seen(static_cast<std::size_t>(m.darts()), 0);
    for (int d = 0; d < m.darts(); ++d) {
        if (seen[static_cast<std::size_t>(d)]) continue;
        int len = 0;
        bool root = false;
        for (int e = d; !seen[static_cast<std::size_t>(e)]; e = m.phi(e)) {
            seen[static_cast<std::size_t>(e)] = 1;
            ++len;
            root |= e == 0;
        }
        p.face_degrees.push_back(len);
        if (root) p.root_face_degree = len;
        if (len == 3) p.has_triangular_face = true;
    }
    std::sort(p.face_degrees.begin(), p.face_degrees.end());
    p.faces = static_cast<int>(p.face_degrees.size());

    // simplicity and graph triangles
    std::set<std::pair<int, int>> adj;
    bool multi = false;
    for (auto [a, b] : g.edges) {
        if (a == b) {
            ++p.loops;
            continue;
        }
        if (!adj.insert({std::min(a, b), std::max(a, b)}).second) multi = true;
    }
    p.simple = p.loops == 0 && !multi;
    auto adjacent = [&](int a, int b) { return adj.count({std::min(a, b), std::max(a, b)}) > 0; };
    for (int a = 0; a < V && !p.has_graph_triangle; ++a)
        for (int b = a + 1; b < V && !p.has_graph_triangle; ++b)
            for (int c = b + 1; c < V; ++c)
                if (adjacent(a, b) && adjacent(b, c) && adjacent(a, c)) {
                    p.has_graph_triangle = true;
                    break;
                }

    // isthmuses: edges whose removal disconnects
    const std::vector<char> none_v(static_cast<std::size_t>(V), 0);
    std::vector<char> bridge(ne, 0);
    for (std::size_t i = 0; i < ne; ++i) {
        if (g.edges[i].first == g.edges[i].second) continue;
        std::vector<char> re(ne, 0);
        re[i] = 1;
        if (g.components(none_v, re) > 1) bridge[i] = 1;
    }
    p.isthmuses = static_cast<int>(std::count(bridge.begin(), bridge.end(), 1));

    // articulation points on the underlying multigraph
    const std::vector<char> none_e(ne, 0);
    for (int v = 0; v < V; ++v) {
        std::vector<char> rv(static_cast<std::size_t>(V), 0);
        rv[static_cast<std::size_t>(v)] = 1;
        if (g.components(rv, none_e) > 1) ++p.cut_vertices;
    }

    // bridgeless components
    std::vector<int> comp(static_cast<std::size_t>(V));
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) {
        return comp[static_cast<std::size_t>(x)] == x ? x : comp[static_cast<std::size_t>(x)] = find(comp[static_cast<std::size_t>(x)]);
    };
    for (std::size_t i = 0; i < ne; ++i)
        if (!bridge[i]) comp[static_cast<std::size_t>(find(g.edges[i].first))] = find(g.edges[i].second);
    std::map<int, int> edges_in, deg2_in;
    std::vector<int> degree(static_cast<std::size_t>(V), 0);
    for (std::size_t i = 0; i < ne; ++i) {
        if (bridge[i]) continue;
        ++edges_in[find(g.edges[i].first)];
        ++degree[static_cast<std::size_t>(g.edges[i].first)];
        ++degree[static_cast<std::size_t>(g.edges[i].second)];
    }
    for (int v = 0; v < V; ++v)
        if (degree[static_cast<std::size_t>(v)] == 2) ++deg2_in[find(v)];
    for (auto [c, t] : edges_in) {
        p.block_sizes.push_back(t);
        p.largest_block = std::max(p.largest_block, t);
        p.largest_cubic_block = std::max(p.largest_cubic_block, t - deg2_in[c]);
    }
    std::sort(p.block_sizes.begin(), p.block_sizes.end());
    const int root_edge = edge_of[0];
    if (!bridge[static_cast<std::size_t>(root_edge)]) {
        const int c = find(g.edges[static_cast<std::size_t>(root_edge)].first);
        p.core_t = edges_in[c];
        p.core_m = deg2_in[c];
    }

    // 3-connected: simple, at least 4 vertices, and no pair of vertices separates
    if (p.simple && V >= 4) {
        p.three_connected = true;
        for (int a = 0; a < V && p.three_connected; ++a)
            for (int b = a + 1; b < V; ++b) {
                std::vector<char> rv(static_cast<std::size_t>(V), 0);
                rv[static_cast<std::size_t>(a)] = rv[static_cast<std::size_t>(b)] = 1;
                if (g.components(rv, none_e) > 1) {
                    p.three_connected = false;
                    break;
                }
            }
    }
    return p;
}

std::string to_string(TrianglePredicate p) { return p == TrianglePredicate::face ? "triangular face" : "graph 3-cycle"; }

std::map<int, long> oracle_root_degree_counts(const std::vector<MapParameters>& ps)
{
    std::map<int, long> out;
    for (const auto& p : ps) ++out[p.root_face_degree];
    return out;
}

std::map<std::pair<int, int>, long> oracle_core_counts(const std::vector<MapParameters>& ps)
{
    std::map<std::pair<int, int>, long> out;
    for (const auto& p : ps) ++out[{p.core_t, p.core_m}];
    return out;
}

bool CrossCheckReport::all_pass() const
{
    return std::all_of(items.begin(), items.end(), [](const CrossCheckItem& i) { return i.pass; });
}

bool CrossCheckReport::equivalence_pass() const
{
    return std::all_of(items.begin(), items.end(), [](const CrossCheckItem& i) { return i.pass || i.triangle; });
}

std::string CrossCheckReport::first_failure() const
{
    for (const auto& i : items)
        if (!i.pass) return i.name + ": " + i.detail;
    return {};
}

std::string CrossCheckReport::to_json() const
{
    nlohmann::json j;
    j["schema_version"] = 1;
    j["edges"] = E;
    j["maps"] = maps;
    j["triangle_predicate"] = triangle_winner;
    j["all_pass"] = all_pass();
    j["equivalence_pass"] = equivalence_pass();
    for (const auto& i : items)
        j["checks"].push_back({{"name", i.name}, {"pass", i.pass}, {"triangle", i.triangle}, {"detail", i.detail}});
    return j.dump(2);
}

namespace {

template <class K>
std::string describe(const std::map<K, long>& a, const std::map<K, Rational>& b)
{
    std::ostringstream out;
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        const Rational other = it == b.end() ? Rational(0) : it->second;
        if (Rational(v) != other) {
            out << "first difference: oracle " << v << " vs series " << other;
            return out.str();
        }
    }
    for (const auto& [k, v] : b)
        if (!a.count(k) && !is_zero(v)) return "series has extra mass " + v.get_str();
    return "equal";
}

template <class K>
bool same(const std::map<K, long>& a, const std::map<K, Rational>& b)
{
    return describe(a, b) == "equal";
}

} // namespace

CrossCheckReport cross_check(int E)
{
    CrossCheckReport r;
    r.E = E;
    const int n = E / 3;
    const auto maps = enumerate_maps(E);
    r.maps = static_cast<int>(maps.size());
    std::vector<MapParameters> ps;
    ps.reserve(maps.size());
    bool canon = true;
    for (const auto& m : maps) {
        canon &= m.canonical();
        ps.push_back(parameters(m));
    }
    r.items.push_back({"canonical labels", canon, canon ? "every map is its own BFS relabelling" : "non-canonical map"});

    auto count_if = [&](auto pred) {
        return static_cast<long>(std::count_if(ps.begin(), ps.end(), pred));
    };
    auto add_count = [&](const std::string& name, long oracle, const Rational& series) {
        std::ostringstream d;
        d << "oracle " << oracle << ", series " << series;
        r.items.push_back({name, Rational(oracle) == series, d.str()});
    };
    const Rational total = catalog_entry("c").exact(n)[n];
    add_count("all cubic maps", r.maps, total);
    add_count("2-connected", count_if([](const MapParameters& p) { return p.isthmuses == 0; }),
              catalog_entry("b").exact(n)[n]);
    add_count("simple", count_if([](const MapParameters& p) { return p.simple; }), catalog_entry("c*").exact(n)[n]);
    add_count("2-connected simple",
              count_if([](const MapParameters& p) { return p.simple && p.isthmuses == 0; }),
              catalog_entry("b*").exact(n)[n]);
    add_count("3-connected (dual triangulations)", count_if([](const MapParameters& p) { return p.three_connected; }),
              catalog_entry("t").exact(n)[n]);

    // triangle-free: the predicate is the one agreeing with the f column at the smallest size
    // where the two differ (9 edges); both give 19 at 6 edges
    const Rational f = catalog_entry("f").exact(n)[n];
    const long by_face = count_if([](const MapParameters& p) { return !p.has_triangular_face; });
    const long by_cycle = count_if([](const MapParameters& p) { return !p.has_graph_triangle; });
    r.triangle_winner = Rational(by_cycle) == f  ? to_string(TrianglePredicate::graph_cycle)
                        : Rational(by_face) == f ? to_string(TrianglePredicate::face)
                                                 : "none";
    auto add_triangle = [&](const std::string& name, long oracle, const Rational& series) {
        add_count(name, oracle, series);
        r.items.back().triangle = true;
    };
    {
        std::ostringstream d;
        d << "triangular face: " << by_face << ", graph 3-cycle: " << by_cycle << ", series " << f;
        r.items.push_back({"triangle-free", Rational(by_cycle) == f, d.str(), true});
    }
    auto tri = [](const MapParameters& p) { return p.has_graph_triangle; };
    add_triangle("triangle-free simple", count_if([&](const MapParameters& p) { return p.simple && !tri(p); }),
                 catalog_entry("f*").exact(n)[n]);
    add_triangle("2-connected triangle-free",
                 count_if([&](const MapParameters& p) { return p.isthmuses == 0 && !tri(p); }),
                 catalog_entry("g").exact(n)[n]);
    add_triangle("2-connected triangle-free simple",
                 count_if([&](const MapParameters& p) { return p.simple && p.isthmuses == 0 && !tri(p); }),
                 catalog_entry("g*").exact(n)[n]);

    // root-face degree
    {
        const auto d = root_degree_distribution<Rational>(n);
        std::map<int, Rational> series;
        for (std::size_t i = 0; i < d.support.size(); ++i) series[static_cast<int>(d.support[i])] = d.masses[i] * total;
        const auto oracle = oracle_root_degree_counts(ps);
        r.items.push_back({"root-face degree law", same(oracle, series), describe(oracle, series)});
    }
    // 2-core (t, m)
    {
        const auto table = core_counts<Rational>(CoreScheme::two_core, E);
        std::map<std::pair<int, int>, Rational> series;
        for (std::size_t t = 0; t < table.size(); ++t)
            for (std::size_t m = 0; m < table[t].size(); ++m)
                if (!is_zero(table[t][m])) series[{static_cast<int>(t), static_cast<int>(m)}] = table[t][m];
        const auto oracle = oracle_core_counts(ps);
        r.items.push_back({"2-core (t, m) law", same(oracle, series), describe(oracle, series)});
    }
    // isthmuses, cut vertices and loops: whole laws and expectations
    for (Marking mk : {Marking::isthmus, Marking::cut_vertex, Marking::loop}) {
        const auto d = marked_distribution<Rational>(n, mk);
        std::map<int, Rational> series;
        for (std::size_t i = 0; i < d.support.size(); ++i) series[static_cast<int>(d.support[i])] = d.masses[i] * total;
        std::map<int, long> oracle;
        long sum = 0;
        for (const auto& p : ps) {
            const int k = mk == Marking::isthmus      ? p.isthmuses
                          : mk == Marking::cut_vertex ? p.cut_vertices
                                                      : p.loops;
            ++oracle[k];
            sum += k;
        }
        r.items.push_back({to_string(mk) + " law", same(oracle, series), describe(oracle, series)});
        const auto ex = marked_expectations<Rational>(n).back();
        const Rational e = mk == Marking::isthmus      ? ex.isthmuses
                           : mk == Marking::cut_vertex ? ex.cut_vertices
                                                       : ex.loops;
        Rational mean(sum, r.maps);
        mean.canonicalize();
        std::ostringstream det;
        det << "oracle " << mean << ", series " << e;
        r.items.push_back({"E[" + to_string(mk) + "]", mean == e, det.str()});
    }
    return r;
}

} // namespace cubicmaps
