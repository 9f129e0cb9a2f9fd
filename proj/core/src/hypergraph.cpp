#include "hygap/hypergraph.hpp"

#include "hygap/errors.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hygap {

Hypergraph::Hypergraph(int r, int n, std::vector<Edge> edges, std::string name)
    : r_(r), n_(n), edges_(std::move(edges)), name_(std::move(name)) {
    if (r_ < 2) throw std::invalid_argument("hypergraph: uniformity must be >= 2");
    if (n_ < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    for (auto& e : edges_) {
        if (static_cast<int>(e.size()) != r_)
            throw std::invalid_argument("hypergraph: edge size differs from uniformity");
        std::sort(e.begin(), e.end());
        for (int i = 0; i < r_; ++i) {
            if (e[i] < 0 || e[i] >= n_)
                throw std::invalid_argument("hypergraph: vertex id out of range");
            if (i > 0 && e[i] == e[i - 1])
                throw std::invalid_argument("hypergraph: repeated vertex within an edge");
        }
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("hypergraph: duplicate edge");
}

bool Hypergraph::has_edge(const Edge& sorted_edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_edge);
}

int Hypergraph::degree(int v) const {
    int d = 0;
    for (const auto& e : edges_)
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

std::vector<int> Hypergraph::support() const {
    std::vector<char> seen(n_, 0);
    for (const auto& e : edges_)
        for (int v : e) seen[v] = 1;
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

Hypergraph Hypergraph::with_name(std::string name) const {
    Hypergraph copy = *this;
    copy.name_ = std::move(name);
    return copy;
}

// --- DensityValue -------------------------------------------------------------

DensityValue::DensityValue(Rat hom_count, Int base, int exponent)
    : count_(std::move(hom_count)), base_(std::move(base)), exponent_(exponent) {
    if (count_ < 0) throw std::invalid_argument("density: negative count");
    if (base_ <= 0 && count_ > 0)
        throw std::invalid_argument("density: positive count over empty vertex set");
}

Rat DensityValue::exact() const {
    if (count_ == 0) return Rat(0);
    return count_ / Rat(int_pow(base_, static_cast<unsigned>(exponent_)));
}

Real50 DensityValue::log_value_hp() const {
    if (count_ <= 0) throw std::domain_error("log of zero density");
    using boost::multiprecision::log;
    return log_rational(count_) - Real50(exponent_) * log(Real50(base_));
}

double DensityValue::log_value() const { return static_cast<double>(log_value_hp()); }

// --- parsing / serialization ---------------------------------------------------

Hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    int r = -1, n = -1, m = -1;
    std::vector<Edge> edges;
    int seen_edges = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            const std::string key = "# name:";
            if (line.compare(0, key.size(), key) == 0) {
                auto v = line.substr(key.size());
                auto b = v.find_first_not_of(" \t");
                if (b != std::string::npos) name = v.substr(b);
            }
            continue;
        }
        std::istringstream fields(line);
        if (r < 0) {
            if (!(fields >> r >> n >> m))
                throw std::invalid_argument("hypergraph parse: malformed header");
            if (m < 0) throw std::invalid_argument("hypergraph parse: negative edge count");
            continue;
        }
        if (seen_edges >= m)
            throw std::invalid_argument("hypergraph parse: more edge lines than declared");
        Edge e;
        int v;
        while (fields >> v) e.push_back(v);
        if (static_cast<int>(e.size()) != r)
            throw std::invalid_argument("hypergraph parse: edge line with wrong arity");
        edges.push_back(std::move(e));
        ++seen_edges;
    }
    if (r < 0) throw std::invalid_argument("hypergraph parse: missing header");
    if (seen_edges != m)
        throw std::invalid_argument("hypergraph parse: fewer edge lines than declared");
    return Hypergraph(r, n, std::move(edges), std::move(name));
}

std::string serialize_hypergraph(const Hypergraph& h) {
    std::ostringstream out;
    if (!h.name().empty()) out << "# name: " << h.name() << "\n";
    out << h.uniformity() << " " << h.vertex_count() << " " << h.edge_count() << "\n";
    for (const auto& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << "\n";
    }
    return out.str();
}

// --- k_set_degree ---------------------------------------------------------------

int k_set_degree(const Hypergraph& h, const std::vector<int>& x) {
    if (static_cast<int>(x.size()) > h.uniformity())
        throw std::invalid_argument("k_set_degree: |X| exceeds uniformity");
    std::vector<int> sorted = x;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("k_set_degree: repeated vertex in X");
    for (int v : sorted)
        if (v < 0 || v >= h.vertex_count())
            throw std::invalid_argument("k_set_degree: vertex id out of range");
    int count = 0;
    for (const auto& e : h.edges())
        if (std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) ++count;
    return count;
}

// --- is_r_partite -----------------------------------------------------------------

namespace {

struct PartiteSearch {
    const Hypergraph& f;
    int r;
    std::vector<std::vector<int>> edges_of;  // vertex -> incident edge indices
    std::vector<int> color;

    explicit PartiteSearch(const Hypergraph& f_) : f(f_), r(f_.uniformity()) {
        edges_of.resize(f.vertex_count());
        for (int ei = 0; ei < f.edge_count(); ++ei)
            for (int v : f.edges()[ei]) edges_of[v].push_back(ei);
        color.assign(f.vertex_count(), -1);
    }

    bool feasible(int v, int c) const {
        for (int ei : edges_of[v])
            for (int u : f.edges()[ei])
                if (u != v && color[u] == c) return false;
        return true;
    }

    bool assign(int v) {
        if (v == f.vertex_count()) return true;
        // Canonical color introduction order breaks the S_r symmetry.
        int used = 0;
        for (int u = 0; u < v; ++u) used = std::max(used, color[u] + 1);
        const int limit = std::min(r, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (!feasible(v, c)) continue;
            color[v] = c;
            if (assign(v + 1)) return true;
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<std::vector<int>>> is_r_partite(const Hypergraph& f) {
    PartiteSearch search(f);
    if (!search.assign(0)) return std::nullopt;
    std::vector<std::vector<int>> parts(f.uniformity());
    for (int v = 0; v < f.vertex_count(); ++v) parts[search.color[v]].push_back(v);
    return parts;
}

// --- r_density ---------------------------------------------------------------------

DensityProfile r_density(const Hypergraph& f) {
    const int m = f.edge_count();
    const int r = f.uniformity();
    if (f.vertex_count() <= r)
        throw std::invalid_argument("r_density: needs v(F) > r");
    if (m > 25) throw BudgetExceeded("r_density: too many edges for subset enumeration", 1u << 25);

    bool found = false;
    DensityProfile best;
    std::vector<char> mark(f.vertex_count());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::fill(mark.begin(), mark.end(), 0);
        int edges_in = 0;
        for (int i = 0; i < m; ++i) {
            if (!(mask >> i & 1u)) continue;
            ++edges_in;
            for (int v : f.edges()[i]) mark[v] = 1;
        }
        const int supp = static_cast<int>(std::count(mark.begin(), mark.end(), 1));
        if (supp <= r) continue;
        Rat ratio(edges_in - 1, supp - r);
        if (!found || ratio > best.m_r) {
            found = true;
            best.m_r = ratio;
            best.witness_edges.clear();
            for (int i = 0; i < m; ++i)
                if (mask >> i & 1u) best.witness_edges.push_back(i);
        }
    }
    if (!found)
        throw std::invalid_argument("r_density: no subgraph with more than r supported vertices");
    // Balanced iff the full edge set itself attains the maximum.
    const int full_supp = static_cast<int>(f.support().size());
    best.balanced = full_supp > r && Rat(m - 1, full_supp - r) == best.m_r;
    return best;
}

// --- automorphisms --------------------------------------------------------------------

namespace {

struct AutSearch {
    const Hypergraph& f;
    int n;
    std::vector<int> deg;
    std::vector<std::vector<int>> edges_by_max;  // edges whose max vertex is v
    std::vector<int> image;
    std::vector<char> used;
    std::vector<std::vector<int>>* out;

    explicit AutSearch(const Hypergraph& f_) : f(f_), n(f_.vertex_count()) {
        deg.resize(n);
        for (int v = 0; v < n; ++v) deg[v] = f.degree(v);
        edges_by_max.resize(n);
        for (int ei = 0; ei < f.edge_count(); ++ei)
            edges_by_max[f.edges()[ei].back()].push_back(ei);
        image.assign(n, -1);
        used.assign(n, 0);
    }

    void run(int v) {
        if (v == n) {
            out->push_back(image);
            return;
        }
        Edge mapped;
        for (int w = 0; w < n; ++w) {
            if (used[w] || deg[w] != deg[v]) continue;
            image[v] = w;
            used[w] = 1;
            bool ok = true;
            for (int ei : edges_by_max[v]) {
                mapped.clear();
                for (int u : f.edges()[ei]) mapped.push_back(image[u]);
                std::sort(mapped.begin(), mapped.end());
                if (!f.has_edge(mapped)) {
                    ok = false;
                    break;
                }
            }
            if (ok) run(v + 1);
            used[w] = 0;
            image[v] = -1;
        }
    }
};

}  // namespace

std::vector<std::vector<int>> automorphisms(const Hypergraph& f, int cap) {
    if (f.vertex_count() > cap)
        throw BudgetExceeded("automorphisms: vertex count above isomorphism cap",
                             static_cast<std::uint64_t>(cap));
    std::vector<std::vector<int>> result;
    AutSearch search(f);
    search.out = &result;
    search.run(0);
    return result;
}

Int automorphism_count(const Hypergraph& f, int cap) {
    return Int(automorphisms(f, cap).size());
}

// --- canonical form ----------------------------------------------------------------------
//
// Canonical labeling minimizes the sequence of relabeled edges ordered by
// (max vertex, then lex). Edges complete append-only as labels are assigned
// (a completed edge's max label is the label just placed), so the completed
// prefix is a true prefix of the final sequence and prefix comparison against
// the incumbent is a sound bound.

namespace {

struct CanonSearch {
    const Hypergraph& h;
    int n;
    std::vector<std::vector<int>> edges_of;
    std::vector<int> new_label;            // old vertex -> new label
    std::vector<int> unlabeled_count;      // per edge
    std::vector<Edge> sequence;            // completed edges, (max,lex) order
    std::vector<Edge> best;
    bool have_best = false;

    explicit CanonSearch(const Hypergraph& h_) : h(h_), n(h_.vertex_count()) {
        edges_of.resize(n);
        for (int ei = 0; ei < h.edge_count(); ++ei)
            for (int v : h.edges()[ei]) edges_of[v].push_back(ei);
        new_label.assign(n, -1);
        unlabeled_count.resize(h.edge_count());
        for (int ei = 0; ei < h.edge_count(); ++ei)
            unlabeled_count[ei] = h.uniformity();
    }

    // <0 candidate prefix smaller, 0 equal so far, >0 larger (prunable).
    int compare_prefix() const {
        if (!have_best) return -1;
        for (size_t i = 0; i < sequence.size(); ++i) {
            if (sequence[i] < best[i]) return -1;
            if (sequence[i] > best[i]) return 1;
        }
        return 0;
    }

    void run(int label) {
        if (label == n) {
            if (!have_best || sequence < best) {
                best = sequence;
                have_best = true;
            }
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (new_label[w] != -1) continue;
            new_label[w] = label;
            std::vector<Edge> completed;
            for (int ei : edges_of[w]) {
                if (--unlabeled_count[ei] == 0) {
                    Edge mapped;
                    for (int u : h.edges()[ei]) mapped.push_back(new_label[u]);
                    std::sort(mapped.begin(), mapped.end());
                    completed.push_back(std::move(mapped));
                }
            }
            std::sort(completed.begin(), completed.end());
            const size_t old_len = sequence.size();
            for (auto& e : completed) sequence.push_back(std::move(e));
            if (compare_prefix() <= 0) run(label + 1);
            sequence.resize(old_len);
            for (int ei : edges_of[w]) ++unlabeled_count[ei];
            new_label[w] = -1;
        }
    }
};

}  // namespace

Hypergraph canonical_form(const Hypergraph& h, int cap) {
    if (h.vertex_count() > cap)
        throw BudgetExceeded("canonical_form: vertex count above isomorphism cap",
                             static_cast<std::uint64_t>(cap));
    CanonSearch search(h);
    search.run(0);
    return Hypergraph(h.uniformity(), h.vertex_count(), search.best, h.name());
}

bool are_isomorphic(const Hypergraph& f1, const Hypergraph& f2, int cap) {
    if (f1.uniformity() != f2.uniformity()) return false;
    if (f1.vertex_count() != f2.vertex_count()) return false;
    if (f1.edge_count() != f2.edge_count()) return false;
    std::vector<int> d1, d2;
    for (int v = 0; v < f1.vertex_count(); ++v) {
        d1.push_back(f1.degree(v));
        d2.push_back(f2.degree(v));
    }
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return false;
    return canonical_form(f1, cap).edges() == canonical_form(f2, cap).edges();
}

}  // namespace hygap
