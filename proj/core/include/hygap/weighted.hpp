#pragma once

#include "hygap/hypergraph.hpp"
#include "hygap/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace hygap {

/// Sorted r-multiset of vertex ids (repeats allowed).
using MultisetKey = std::vector<int>;

inline bool is_degenerate(const MultisetKey& key) {
    for (size_t i = 1; i < key.size(); ++i)
        if (key[i] == key[i - 1]) return true;
    return false;
}

/// Nonnegative weights on r-multisets of vertices: the finite stand-in for
/// graphons and for shadow constructions. Unlisted proper r-sets fall back to
/// default_proper, unlisted degenerate multisets to default_degenerate.
class WeightedHypergraph {
public:
    WeightedHypergraph(int r, int n, std::map<MultisetKey, Rat> weights,
                       Rat default_proper = Rat(0), Rat default_degenerate = Rat(0),
                       std::string name = "");

    int uniformity() const { return r_; }
    int vertex_count() const { return n_; }
    const std::string& name() const { return name_; }
    const std::map<MultisetKey, Rat>& stored_weights() const { return weights_; }
    const Rat& default_proper() const { return default_proper_; }
    const Rat& default_degenerate() const { return default_degenerate_; }

    /// Weight of a sorted multiset key, applying defaults.
    const Rat& weight(const MultisetKey& sorted_key) const;
    /// True when every weight off the stored support is zero.
    bool finite_support() const { return default_proper_ == 0 && default_degenerate_ == 0; }

    /// Indicator weighting of H: edges get weight 1, everything else 0.
    static WeightedHypergraph indicator_of(const Hypergraph& h);

    bool operator==(const WeightedHypergraph& other) const {
        return r_ == other.r_ && n_ == other.n_ && weights_ == other.weights_ &&
               default_proper_ == other.default_proper_ &&
               default_degenerate_ == other.default_degenerate_;
    }

private:
    int r_;
    int n_;
    std::map<MultisetKey, Rat> weights_;
    Rat default_proper_;
    Rat default_degenerate_;
    std::string name_;
};

/// Text format: optional '#' comments; header "w r n m d_proper d_degenerate"
/// (defaults as rationals "a/b"); then m lines "v1 ... vr weight".
WeightedHypergraph parse_weighted_hypergraph(const std::string& text);
std::string serialize_weighted_hypergraph(const WeightedHypergraph& w);

}  // namespace hygap
