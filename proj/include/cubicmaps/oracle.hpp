#pragma once

#include <map>
#include <string>
#include <vector>

#include "cubicmaps/scalar.hpp"

namespace cubicmaps {

/// Rooted cubic map as a rotation system on darts 0..2E-1 (dumps use 1-based labels).
/// Vertex v owns darts 3v, 3v+1, 3v+2 and sigma rotates them in that order; the root is dart 0.
struct RotationMap {
    int E = 0;
    std::vector<int> alpha;  // edge involution, fixed-point free

    int darts() const { return 2 * E; }
    int vertices() const { return 2 * E / 3; }
    static int sigma(int d) { return d % 3 == 2 ? d - 2 : d + 1; }
    static int vertex(int d) { return d / 3; }
    /// Face permutation sigma o alpha.
    int phi(int d) const { return sigma(alpha[static_cast<std::size_t>(d)]); }
    int faces() const;
    /// `E sigma-cycles alpha-pairs`, 1-based.
    std::string dump() const;
    /// True iff relabelling by breadth-first search from the root gives back this map.
    bool canonical() const;
};

/// All rooted planar cubic maps with E edges (E a multiple of 3, at most 15), in canonical order.
std::vector<RotationMap> enumerate_maps(int E);

struct MapParameters {
    int faces = 0;
    int root_face_degree = 0;
    std::vector<int> face_degrees;  // sorted
    bool simple = false;
    bool has_graph_triangle = false;  // three distinct pairwise adjacent vertices
    bool has_triangular_face = false;
    int isthmuses = 0;
    int cut_vertices = 0;
    int loops = 0;
    std::vector<int> block_sizes;  // edges of each bridgeless component with at least one edge
    int largest_block = 0;
    int largest_cubic_block = 0;   // edges minus degree-2 vertices
    int core_t = 0, core_m = 0;    // root 2-core; (0,0) when the root edge is an isthmus
    bool three_connected = false;  // the whole map
};

MapParameters parameters(const RotationMap& m);

/// Which triangle notion is exported as "triangle-free".
enum class TrianglePredicate { graph_cycle, face };
std::string to_string(TrianglePredicate p);

struct CrossCheckItem {
    std::string name;
    bool pass = false;
    std::string detail;
    bool triangle = false;  // triangle-free classes, outside the equivalence criterion
};

struct CrossCheckReport {
    int E = 0;
    int maps = 0;
    std::vector<CrossCheckItem> items;
    /// The predicate whose count matches the triangle-free column ("none" if neither does).
    std::string triangle_winner;
    bool all_pass() const;
    /// Everything except the triangle-free items.
    bool equivalence_pass() const;
    std::string first_failure() const;
    std::string to_json() const;
};

/// Compare the oracle at E edges with grammar counts and statistics-module laws.
CrossCheckReport cross_check(int E);

/// Oracle laws used by the cross check (counts, not probabilities).
std::map<int, long> oracle_root_degree_counts(const std::vector<MapParameters>& ps);
std::map<std::pair<int, int>, long> oracle_core_counts(const std::vector<MapParameters>& ps);

} // namespace cubicmaps
