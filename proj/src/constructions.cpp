#include "cubicbase/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace cubicbase {

namespace {

void check_px_params(int r, int s) {
    if (r < 3) throw error("px: r must be at least 3");
    if (s < 1 || s > r - 1) throw error("px: s must satisfy 1 <= s <= r-1");
    if (r > 24) throw error("px: r too large");
}

int px_vertex(int r, int s, int x, int word) {
    (void)r;
    return x * (1 << s) + word;
}

int reverse_word(int w, int s) {
    int out = 0;
    for (int i = 0; i < s; ++i) out |= ((w >> i) & 1) << (s - 1 - i);
    return out;
}

int mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

Digraph px_digraph(int r, int s) {
    check_px_params(r, s);
    const int n = r << s;
    std::vector<std::pair<int, int>> arcs;
    const int mask = (1 << s) - 1;
    for (int x = 0; x < r; ++x)
        for (int w = 0; w <= mask; ++w) {
            // (x; k0 k1..k_{s-1}) -> (x+1; k1..k_{s-1} d)
            const int tail = (w << 1) & mask;
            for (int d = 0; d <= 1; ++d)
                arcs.emplace_back(px_vertex(r, s, x, w),
                                  px_vertex(r, s, mod(x + 1, r), tail | d));
        }
    return Digraph::from_arcs(n, arcs);
}

Graph px_graph(int r, int s) { return px_digraph(r, s).underlying(); }

PXGenerators px_generators(int r, int s) {
    check_px_params(r, s);
    const int n = r << s;
    const int words = 1 << s;

    PXGenerators out{{}, Perm(n), Perm(n)};
    for (int i = 0; i < r; ++i) {
        std::vector<int> im(n);
        for (int x = 0; x < r; ++x)
            for (int w = 0; w < words; ++w) {
                const int j = mod(i - x, r);
                // vertex (x; k) occupies columns x..x+s-1; letter j of k sits
                // in column x+j
                const int w2 = j < s ? (w ^ (1 << (s - 1 - j))) : w;
                im[px_vertex(r, s, x, w)] = px_vertex(r, s, x, w2);
            }
        out.tau.push_back(Perm::from_images(im));
    }

    std::vector<int> rho_im(n), sigma_im(n);
    for (int x = 0; x < r; ++x)
        for (int w = 0; w < words; ++w) {
            const int v = px_vertex(r, s, x, w);
            rho_im[v] = px_vertex(r, s, mod(x + 1, r), w);
            sigma_im[v] = px_vertex(r, s, mod(-x - s + 1, r), reverse_word(w, s));
        }
    out.rho = Perm::from_images(rho_im);
    out.sigma = Perm::from_images(sigma_im);
    return out;
}

PermGroup px_group_K(int r, int s) {
    return PermGroup::from_generators(px_generators(r, s).tau);
}

PermGroup px_group_Hplus(int r, int s) {
    PXGenerators g = px_generators(r, s);
    std::vector<Perm> gens = g.tau;
    gens.push_back(g.rho);
    return PermGroup::from_generators(gens);
}

PermGroup px_group_H(int r, int s) {
    PXGenerators g = px_generators(r, s);
    std::vector<Perm> gens = g.tau;
    gens.push_back(g.rho);
    gens.push_back(g.sigma);
    return PermGroup::from_generators(gens);
}

CycleDecomposition canonical_px_decomposition(int r, int s) {
    check_px_params(r, s);
    CycleDecomposition dec;
    const int half = 1 << (s - 1);
    for (int x = 0; x < r; ++x)
        for (int h = 0; h < half; ++h) {
            const int x1 = mod(x + 1, r);
            // 4-cycle (x;0h) (x+1;h0) (x;1h) (x+1;h1)
            dec.cycles.push_back({px_vertex(r, s, x, h),
                                  px_vertex(r, s, x1, h << 1),
                                  px_vertex(r, s, x, half + h),
                                  px_vertex(r, s, x1, (h << 1) | 1)});
        }
    return dec;
}

namespace {

// incidence numbering: vertex alpha with its two cycles (by cycle index
// ascending) becomes 2*alpha and 2*alpha + 1
struct SplitIndex {
    std::vector<std::array<int, 2>> cycles_of;  // per vertex, sorted

    SplitIndex(const Graph& delta, const CycleDecomposition& c) {
        const int n = delta.num_vertices();
        if (!delta.is_regular(4)) throw error("split: graph must be 4-valent");
        std::vector<std::vector<int>> incid(n);
        std::set<std::pair<int, int>> covered;
        for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
            const auto& cyc = c.cycles[ci];
            if (cyc.size() < 3) throw error("split: cycle too short");
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                const int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
                if (!delta.adjacent(u, v)) throw error("split: cycle uses a non-edge");
                if (!covered.insert(std::minmax(u, v)).second)
                    throw error("split: edge covered twice");
                incid[u].push_back(static_cast<int>(ci));
            }
        }
        if (static_cast<int>(covered.size()) != delta.num_edges())
            throw error("split: cycles do not cover the edge set");
        cycles_of.resize(n);
        for (int v = 0; v < n; ++v) {
            auto& iv = incid[v];
            std::sort(iv.begin(), iv.end());
            iv.erase(std::unique(iv.begin(), iv.end()), iv.end());
            if (iv.size() != 2) throw error("split: vertex not on exactly two cycles");
            cycles_of[v] = {iv[0], iv[1]};
        }
    }

    int id(int vertex, int cycle) const {
        if (cycles_of[vertex][0] == cycle) return 2 * vertex;
        if (cycles_of[vertex][1] == cycle) return 2 * vertex + 1;
        throw error("split: vertex not on cycle");
    }
};

}  // namespace

Graph split(const Graph& delta, const CycleDecomposition& c) {
    SplitIndex idx(delta, c);
    const int n = delta.num_vertices();
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(2 * v, 2 * v + 1);
    for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
        const auto& cyc = c.cycles[ci];
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const int u = cyc[i], v = cyc[(i + 1) % cyc.size()];
            edges.emplace_back(idx.id(u, static_cast<int>(ci)),
                               idx.id(v, static_cast<int>(ci)));
        }
    }
    Graph out = Graph::from_edges(2 * n, edges);
    if (!out.is_regular(3)) throw error("split: result not cubic");
    return out;
}

Perm lift_to_split(const Graph& delta, const CycleDecomposition& c, const Perm& g) {
    SplitIndex idx(delta, c);
    // map each cycle to its image cycle
    std::map<std::set<int>, int> cycle_by_set;
    for (std::size_t ci = 0; ci < c.cycles.size(); ++ci)
        cycle_by_set[std::set<int>(c.cycles[ci].begin(), c.cycles[ci].end())] =
            static_cast<int>(ci);
    std::vector<int> cycle_image(c.cycles.size());
    for (std::size_t ci = 0; ci < c.cycles.size(); ++ci) {
        std::set<int> img;
        for (int v : c.cycles[ci]) img.insert(g[v]);
        auto it = cycle_by_set.find(img);
        if (it == cycle_by_set.end())
            throw error("lift_to_split: permutation does not preserve the decomposition");
        cycle_image[ci] = it->second;
    }
    std::vector<int> im(2 * delta.num_vertices());
    for (int v = 0; v < delta.num_vertices(); ++v)
        for (int k = 0; k < 2; ++k) {
            const int ci = idx.cycles_of[v][k];
            im[idx.id(v, ci)] = idx.id(g[v], cycle_image[ci]);
        }
    return Perm::from_images(im);
}

Graph spx_graph(int r, int s) {
    return split(px_graph(r, s), canonical_px_decomposition(r, s));
}

PermGroup spx_group_H(int r, int s) {
    Graph delta = px_graph(r, s);
    CycleDecomposition dec = canonical_px_decomposition(r, s);
    PXGenerators g = px_generators(r, s);
    std::vector<Perm> lifted;
    for (const Perm& t : g.tau) lifted.push_back(lift_to_split(delta, dec, t));
    lifted.push_back(lift_to_split(delta, dec, g.rho));
    lifted.push_back(lift_to_split(delta, dec, g.sigma));
    return PermGroup::from_generators(lifted);
}

MergeResult merge(const Graph& gamma, const PermGroup& g) {
    const int n = gamma.num_vertices();
    if (!gamma.is_regular(3)) throw error("merge: graph must be cubic");
    if (!is_connected(gamma)) throw error("merge: graph must be connected");
    if (g.degree() != n) throw error("merge: group degree mismatch");
    for (const Perm& p : g.generators())
        for (auto [u, v] : gamma.edges())
            if (!gamma.adjacent(p[u], p[v]))
                throw error("merge: group does not preserve adjacency");
    if (!g.is_transitive()) throw error("merge: group must be vertex-transitive");

    // arc-transitive groups admit no invariant matching
    {
        std::set<std::pair<int, int>> orbit;
        std::vector<std::pair<int, int>> frontier;
        auto e0 = gamma.edges().front();
        orbit.insert(e0);
        frontier.push_back(e0);
        while (!frontier.empty()) {
            auto [u, v] = frontier.back();
            frontier.pop_back();
            for (const Perm& p : g.generators()) {
                std::pair<int, int> img{p[u], p[v]};
                if (orbit.insert(img).second) frontier.push_back(img);
            }
        }
        if (static_cast<int>(orbit.size()) == 2 * gamma.num_edges())
            throw error("merge: group is arc-transitive");
    }

    auto elems = g.elements();
    std::vector<int> partner(n, -1);
    for (int v = 0; v < n; ++v) {
        std::vector<int> fixed = gamma.neighbours(v);
        bool stab_trivial = true;
        for (const Perm& e : elems) {
            if (e[v] != v || e.is_identity()) continue;
            stab_trivial = false;
            std::vector<int> keep;
            for (int nb : fixed)
                if (e[nb] == nb) keep.push_back(nb);
            fixed = std::move(keep);
        }
        if (stab_trivial || fixed.size() != 1)
            throw error("merge: stabiliser does not fix exactly one neighbour");
        partner[v] = fixed.front();
    }
    for (int v = 0; v < n; ++v)
        if (partner[partner[v]] != v) throw error("merge: matching not involutive");

    std::vector<std::pair<int, int>> matching;
    std::vector<int> cell(n, -1);
    for (int v = 0; v < n; ++v)
        if (v < partner[v]) {
            cell[v] = cell[partner[v]] = static_cast<int>(matching.size());
            matching.emplace_back(v, partner[v]);
        }

    std::vector<std::pair<int, int>> edges;
    int raw_count = 0;
    for (auto [u, v] : gamma.edges()) {
        if (cell[u] == cell[v]) continue;  // a matching edge, contracted
        edges.emplace_back(cell[u], cell[v]);
        ++raw_count;
    }
    Graph merged = Graph::from_edges(static_cast<int>(matching.size()), edges);
    const bool degenerate = merged.num_edges() != raw_count || !merged.is_regular(4);
    return MergeResult{std::move(merged), degenerate, std::move(matching)};
}

Graph circular_ladder(int n) {
    if (n < 3) throw error("circular_ladder: n must be at least 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        const int j = mod(i + 1, n);
        edges.emplace_back(2 * i, 2 * i + 1);      // rung
        edges.emplace_back(2 * i, 2 * j);          // outer rim
        edges.emplace_back(2 * i + 1, 2 * j + 1);  // inner rim
    }
    return Graph::from_edges(2 * n, edges);
}

Graph moebius_ladder(int n) {
    if (n < 2) throw error("moebius_ladder: n must be at least 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 2 * n; ++i) {
        edges.emplace_back(i, mod(i + 1, 2 * n));
        edges.emplace_back(i, mod(i + n, 2 * n));
    }
    return Graph::from_edges(2 * n, edges);
}

namespace {

Graph lcf(int n, const std::vector<int>& code) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, mod(i + 1, n));
        edges.emplace_back(i, mod(i + code[i % code.size()], n));
    }
    Graph g = Graph::from_edges(n, edges);
    if (!g.is_regular(3) || !is_connected(g)) throw error("lcf: invalid code");
    return g;
}

Graph kneser_5_2() {
    std::vector<std::pair<int, int>> sets;
    for (int a = 0; a < 5; ++a)
        for (int b = a + 1; b < 5; ++b) sets.emplace_back(a, b);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            auto [a, b] = sets[i];
            auto [c, d] = sets[j];
            if (a != c && a != d && b != c && b != d)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    return Graph::from_edges(10, edges);
}

}  // namespace

const std::vector<std::string>& table1_names() {
    static const std::vector<std::string> names{
        "K4", "K3_3", "Cube", "Petersen", "Heawood",
        "Pappus", "Desargues", "TutteCoxeter", "Foster"};
    return names;
}

Graph table1_graph(const std::string& name) {
    Graph g = [&] {
        if (name == "K4")
            return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        if (name == "K3_3") {
            std::vector<std::pair<int, int>> e;
            for (int a = 0; a < 3; ++a)
                for (int b = 3; b < 6; ++b) e.emplace_back(a, b);
            return Graph::from_edges(6, e);
        }
        if (name == "Cube") {
            std::vector<std::pair<int, int>> e;
            for (int v = 0; v < 8; ++v)
                for (int bit = 0; bit < 3; ++bit)
                    if (v < (v ^ (1 << bit))) e.emplace_back(v, v ^ (1 << bit));
            return Graph::from_edges(8, e);
        }
        if (name == "Petersen") return kneser_5_2();
        if (name == "Heawood") return lcf(14, {5, -5});
        if (name == "Pappus") return lcf(18, {5, 7, -7, 7, -7, -5});
        if (name == "Desargues") return lcf(20, {5, -5, 9, -9});
        if (name == "TutteCoxeter") return lcf(30, {-13, -9, 7, -7, 9, 13});
        if (name == "Foster") return lcf(90, {17, -9, 37, -37, 9, -17});
        throw error("table1_graph: unknown name " + name);
    }();
    static const std::map<std::string, int> sizes{
        {"K4", 4},       {"K3_3", 6},      {"Cube", 8},
        {"Petersen", 10}, {"Heawood", 14}, {"Pappus", 18},
        {"Desargues", 20}, {"TutteCoxeter", 30}, {"Foster", 90}};
    if (g.num_vertices() != sizes.at(name) || !g.is_regular(3) || !is_connected(g))
        throw error("table1_graph: construction failed validation");
    return g;
}

}  // namespace cubicbase
