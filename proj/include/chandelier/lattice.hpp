#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "chandelier/errors.hpp"

namespace chandelier {

// Order-3 triangular chandelier lattice, built once to a fixed depth.
//
// Vertices are flat ids in breadth-first order: level m occupies
// [offset(m), offset(m)+3^m) with offset(m) = (3^m-1)/2, so parent, sibling
// and grandparent relations are index arithmetic.  Three pair classes:
//   NN    parent-child edges,
//   SLNN  sibling-triangle edges (children of a common parent),
//   PNNN  grandparent-grandchild pairs.
class TclLattice {
public:
    static constexpr int kMaxDepth = 12;

    using Edge = std::pair<int, int>;

    explicit TclLattice(int depth) : depth_(depth) {
        if (depth < 0) throw parameter_error("lattice depth must be >= 0");
        if (depth > kMaxDepth) throw capacity_error("lattice depth exceeds cap");
        for (int m = 1; m <= depth; ++m) {
            for (int p = offset(m - 1); p < offset(m); ++p) {
                const auto kids = children_of(p);
                for (int k : kids) nn_edges_.emplace_back(p, k);
                slnn_edges_.emplace_back(kids[0], kids[1]);
                slnn_edges_.emplace_back(kids[0], kids[2]);
                slnn_edges_.emplace_back(kids[1], kids[2]);
            }
        }
        for (int m = 0; m + 2 <= depth; ++m) {
            for (int g = offset(m); g < offset(m + 1); ++g) {
                for (int k : children_of(g))
                    for (int gk : children_of(k)) pnnn_pairs_.emplace_back(g, gk);
            }
        }
    }

    int depth() const { return depth_; }
    int vertex_count() const { return offset(depth_ + 1); }

    static int offset(int level) { return (pow3(level) - 1) / 2; }
    static int pow3(int m) {
        int r = 1;
        for (int i = 0; i < m; ++i) r *= 3;
        return r;
    }

    int level_of(int v) const {
        int m = 0;
        while (offset(m + 1) <= v) ++m;
        return m;
    }
    int index_in_level(int v) const { return v - offset(level_of(v)); }

    int parent_of(int v) const {
        const int m = level_of(v);
        if (m == 0) throw parameter_error("root has no parent");
        return offset(m - 1) + index_in_level(v) / 3;
    }

    std::array<int, 3> children_of(int v) const {
        const int m = level_of(v);
        if (m >= depth_) throw parameter_error("vertex has no successors at this depth");
        const int base = offset(m + 1) + 3 * index_in_level(v);
        return {base, base + 1, base + 2};
    }

    const std::vector<Edge>& nn_edges() const { return nn_edges_; }
    const std::vector<Edge>& slnn_edges() const { return slnn_edges_; }
    const std::vector<Edge>& pnnn_pairs() const { return pnnn_pairs_; }

private:
    int depth_;
    std::vector<Edge> nn_edges_;
    std::vector<Edge> slnn_edges_;
    std::vector<Edge> pnnn_pairs_;
};

inline TclLattice build(int depth) { return TclLattice(depth); }

// W_m, the sphere of radius m.
inline std::vector<int> sphere(const TclLattice& lat, int m) {
    if (m < 0 || m > lat.depth()) throw parameter_error("sphere radius out of range");
    std::vector<int> w;
    w.reserve(TclLattice::pow3(m));
    for (int v = TclLattice::offset(m); v < TclLattice::offset(m + 1); ++v) w.push_back(v);
    return w;
}

// A vertex together with its three direct prolonged successors.
struct UnitSemiBall {
    int center;
    std::array<int, 3> children;  // ascending path index
};

inline std::vector<UnitSemiBall> semi_balls(const TclLattice& lat, int m) {
    if (m < 0 || m > lat.depth() - 1) throw parameter_error("semi-ball level out of range");
    std::vector<UnitSemiBall> balls;
    balls.reserve(TclLattice::pow3(m));
    for (int v : sphere(lat, m)) balls.push_back({v, lat.children_of(v)});
    return balls;
}

// Plain-text export, one line per pair: "type u v".
inline void write_edge_list(const TclLattice& lat, std::ostream& os) {
    for (auto [u, v] : lat.nn_edges()) os << "NN " << u << ' ' << v << '\n';
    for (auto [u, v] : lat.slnn_edges()) os << "SLNN " << u << ' ' << v << '\n';
    for (auto [u, v] : lat.pnnn_pairs()) os << "PNNN " << u << ' ' << v << '\n';
}

}  // namespace chandelier
