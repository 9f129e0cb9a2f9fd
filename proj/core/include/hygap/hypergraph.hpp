#pragma once

#include "hygap/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hygap {

using Edge = std::vector<int>;  // sorted, r pairwise-distinct vertex ids

/// Finite r-uniform hypergraph in canonical storage: every edge sorted
/// ascending, edge list sorted lexicographically and duplicate-free.
/// Vertex ids are dense 0-based integers; names live only in the label.
/// Immutable after construction; all operations on it are pure.
class Hypergraph {
public:
    /// Validates and canonicalizes. Throws std::invalid_argument on: edge of
    /// wrong size, repeated vertex within an edge, vertex id out of range,
    /// duplicate edge (after sorting), r < 2, n < 0.
    Hypergraph(int r, int n, std::vector<Edge> edges, std::string name = "");

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::string& name() const { return name_; }

    bool has_edge(const Edge& sorted_edge) const;
    /// Number of edges containing vertex v.
    int degree(int v) const;
    /// Vertices of positive degree, ascending.
    std::vector<int> support() const;

    Hypergraph with_name(std::string name) const;

    bool operator==(const Hypergraph& other) const {
        return r_ == other.r_ && n_ == other.n_ && edges_ == other.edges_ &&
               name_ == other.name_;
    }

private:
    int r_;
    int n_;
    std::vector<Edge> edges_;
    std::string name_;
};

/// Exact density hom_count / base^exponent with a log-space view.
class DensityValue {
public:
    DensityValue(Rat hom_count, Int base, int exponent);

    const Rat& hom_count() const { return count_; }
    const Int& base() const { return base_; }
    int exponent() const { return exponent_; }

    Rat exact() const;
    bool positive() const { return count_ > 0; }
    /// ln(count) - exponent*ln(base); only defined for positive counts.
    /// Computed at 50 digits then rounded, so the double agrees with the
    /// exact rational to well within 1e-12 relative error.
    double log_value() const;
    Real50 log_value_hp() const;

private:
    Rat count_;
    Int base_;
    int exponent_;
};

/// m_r(F) together with the balanced flag and one maximizing edge subset.
struct DensityProfile {
    Rat m_r;
    bool balanced = false;
    std::vector<int> witness_edges;  // indices into F.edges()
};

// --- parsing / serialization -------------------------------------------------

/// Text format: optional '#' comment lines ("# name: X" restores the label),
/// header "r n m", then m lines of r space-separated vertex ids.
Hypergraph parse_hypergraph(const std::string& text);

/// Canonical order; emits "# name: ..." when the label is nonempty.
std::string serialize_hypergraph(const Hypergraph& h);

// --- structural operations ---------------------------------------------------

/// |{h in E(H) : X subseteq h}| for a k-set X, k <= r.
int k_set_degree(const Hypergraph& h, const std::vector<int>& x);

/// Partition of V(F) into r (possibly empty) parts with every edge meeting
/// each part exactly once, or nullopt. Exhaustive backtracking search.
std::optional<std::vector<std::vector<int>>> is_r_partite(const Hypergraph& f);

/// max over edge subsets with more than r supported vertices of
/// (e(F')-1)/(v(F')-r); the subgraph vertex set is the non-isolated support.
/// Throws std::invalid_argument when no subgraph qualifies (v(F) <= r).
DensityProfile r_density(const Hypergraph& f);

inline constexpr int kDefaultIsoCap = 12;

/// All automorphisms as permutation vectors (image of vertex i at slot i).
std::vector<std::vector<int>> automorphisms(const Hypergraph& f, int cap = kDefaultIsoCap);

Int automorphism_count(const Hypergraph& f, int cap = kDefaultIsoCap);

/// Relabels to the canonical form: the vertex numbering minimizing the edge
/// sequence sorted by (max vertex, then lex), found by branch-and-bound over
/// permutations. Name is preserved.
Hypergraph canonical_form(const Hypergraph& h, int cap = kDefaultIsoCap);

bool are_isomorphic(const Hypergraph& f1, const Hypergraph& f2, int cap = kDefaultIsoCap);

}  // namespace hygap
