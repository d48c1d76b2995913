#include "cubicbase/canon.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <unordered_set>

namespace cubicbase {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
}

// Ordered partition of the vertex set, nauty-style: lab lists vertices by
// position, ptn[i] == 1 iff positions i and i+1 are in the same cell.
struct Part {
    std::vector<int> lab;
    std::vector<int> pos;
    std::vector<int> ptn;
    int num_cells = 1;

    explicit Part(int n) : lab(n), pos(n), ptn(n, 1) {
        for (int i = 0; i < n; ++i) lab[i] = pos[i] = i;
        ptn[n - 1] = 0;
    }

    int cell_end(int start) const {
        int e = start;
        while (ptn[e] == 1) ++e;
        return e;
    }

    bool discrete() const { return num_cells == static_cast<int>(lab.size()); }

    // Makes vertex v a singleton cell at the front of its cell; returns the
    // new singleton's start position.
    int individualize(int v) {
        int s = pos[v];
        while (s > 0 && ptn[s - 1] == 1) --s;
        std::swap(lab[s], lab[pos[v]]);
        pos[lab[pos[v]]] = pos[v];
        pos[v] = s;
        lab[s] = v;
        ptn[s] = 0;
        ++num_cells;
        return s;
    }
};

// Equitable refinement. Splits cells by neighbour counts into the popped
// cells until stable; returns a label-invariant trace hash.
std::uint64_t refine(const Graph& g, Part& p, std::deque<int> queue) {
    const int n = g.num_vertices();
    std::vector<char> queued(n, 0);
    for (int s : queue) queued[s] = 1;
    std::vector<int> cnt(n, 0), touched;
    std::uint64_t h = 0;

    while (!queue.empty() && !p.discrete()) {
        const int w_start = queue.front();
        queue.pop_front();
        queued[w_start] = 0;
        const int w_end = p.cell_end(w_start);
        h = mix(h, (static_cast<std::uint64_t>(w_start) << 20) | (w_end - w_start));

        touched.clear();
        for (int i = w_start; i <= w_end; ++i)
            for (int u : g.neighbours(p.lab[i])) {
                if (cnt[u] == 0) touched.push_back(u);
                ++cnt[u];
            }

        // visit each cell that contains a touched vertex
        std::vector<int> starts;
        for (int u : touched) {
            int s = p.pos[u];
            while (s > 0 && p.ptn[s - 1] == 1) --s;
            starts.push_back(s);
        }
        std::sort(starts.begin(), starts.end());
        starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

        for (int s : starts) {
            const int e = p.cell_end(s);
            if (e == s) continue;
            int lo = cnt[p.lab[s]], hi = lo;
            for (int i = s + 1; i <= e; ++i) {
                lo = std::min(lo, cnt[p.lab[i]]);
                hi = std::max(hi, cnt[p.lab[i]]);
            }
            if (lo == hi) continue;

            // stable bucket sort of the cell by count, ascending
            std::vector<std::vector<int>> buckets(hi - lo + 1);
            for (int i = s; i <= e; ++i) buckets[cnt[p.lab[i]] - lo].push_back(p.lab[i]);
            int write = s;
            for (std::size_t b = 0; b < buckets.size(); ++b) {
                if (buckets[b].empty()) continue;
                const int frag_start = write;
                for (int v : buckets[b]) {
                    p.lab[write] = v;
                    p.pos[v] = write;
                    ++write;
                }
                p.ptn[write - 1] = 0;
                if (frag_start != s) ++p.num_cells;
                h = mix(h, (static_cast<std::uint64_t>(s) << 32) |
                               (static_cast<std::uint64_t>(b + lo) << 16) |
                               static_cast<std::uint64_t>(buckets[b].size()));
                if (!queued[frag_start]) {
                    queued[frag_start] = 1;
                    queue.push_back(frag_start);
                }
            }
        }

        for (int u : touched) cnt[u] = 0;
    }

    for (int i = 0; i < n; ++i) h = mix(h, static_cast<std::uint64_t>(p.ptn[i]));
    return h;
}

struct Leaf {
    std::vector<std::uint64_t> path;
    std::vector<int> pos;                     // vertex -> canonical position
    std::vector<int> lab;                     // position -> vertex
    std::vector<std::pair<int, int>> edges;   // relabelled, sorted
};

std::vector<std::pair<int, int>> relabelled_edges(const Graph& g, const std::vector<int>& pos) {
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
        auto [a, b] = std::minmax(pos[u], pos[v]);
        es.emplace_back(a, b);
    }
    std::sort(es.begin(), es.end());
    return es;
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.num_vertices()) {}

    void run() {
        Part root(n_);
        std::vector<std::uint64_t> path;
        std::vector<int> prefix;
        recurse(root, {0}, path, prefix, 0, 0);
    }

    std::vector<Perm> automorphisms() const {
        std::vector<Perm> out;
        std::set<std::vector<int>> seen;
        for (const auto& im : autos_)
            if (seen.insert(im).second) out.push_back(Perm::from_images(im));
        return out;
    }

    Perm best_labelling() const { return Perm::from_images(best_.pos); }

private:
    // cmp_first: 0 while the invariant path equals the first leaf's prefix.
    // cmp_best: 0 equal to best prefix, 1 strictly better at some level,
    // 2 strictly worse.
    void recurse(Part p, std::deque<int> queue, std::vector<std::uint64_t>& path,
                 std::vector<int>& prefix, int cmp_first, int cmp_best) {
        const std::uint64_t inv = refine(g_, p, std::move(queue));
        const std::size_t depth = path.size();
        path.push_back(inv);

        if (have_first_) {
            if (cmp_first == 0 &&
                (depth >= first_.path.size() || inv != first_.path[depth]))
                cmp_first = 1;
            if (cmp_best == 0) {
                if (depth >= best_.path.size() || inv > best_.path[depth]) cmp_best = 2;
                else if (inv < best_.path[depth]) cmp_best = 1;
            }
            if (cmp_first != 0 && cmp_best == 2) {
                path.pop_back();
                return;
            }
        }

        if (p.discrete()) {
            handle_leaf(p, path, cmp_first);
            path.pop_back();
            return;
        }

        // target: smallest non-singleton cell, earliest position
        int target = -1, target_size = n_ + 1;
        for (int s = 0; s < n_;) {
            const int e = p.cell_end(s);
            const int size = e - s + 1;
            if (size > 1 && size < target_size) {
                target = s;
                target_size = size;
            }
            s = e + 1;
        }

        std::vector<int> candidates(p.lab.begin() + target,
                                    p.lab.begin() + target + target_size);
        std::sort(candidates.begin(), candidates.end());

        std::vector<int> tried;
        for (int v : candidates) {
            if (pruned_by_orbit(v, tried, prefix)) continue;
            tried.push_back(v);
            Part child = p;
            const int s = child.individualize(v);
            prefix.push_back(v);
            recurse(std::move(child), {s}, path, prefix, cmp_first, cmp_best);
            prefix.pop_back();
        }
        path.pop_back();
    }

    bool pruned_by_orbit(int v, const std::vector<int>& tried,
                         const std::vector<int>& prefix) {
        if (tried.empty()) return false;
        // union-find over automorphisms fixing the individualized prefix
        std::vector<int> uf(n_);
        for (int i = 0; i < n_; ++i) uf[i] = i;
        auto find = [&](int x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        for (const auto& im : autos_) {
            bool fixes = true;
            for (int q : prefix)
                if (im[q] != q) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                int a = find(x), b = find(im[x]);
                if (a != b) uf[a] = b;
            }
        }
        const int rv = find(v);
        for (int u : tried)
            if (find(u) == rv) return true;
        return false;
    }

    void handle_leaf(const Part& p, const std::vector<std::uint64_t>& path, int cmp_first) {
        Leaf leaf{path, p.pos, p.lab, relabelled_edges(g_, p.pos)};
        if (!have_first_) {
            first_ = leaf;
            best_ = std::move(leaf);
            have_first_ = true;
            return;
        }
        if (cmp_first == 0 && leaf.path == first_.path && leaf.edges == first_.edges)
            record_automorphism(leaf, first_);
        if (std::pair(leaf.path, leaf.edges) < std::pair(best_.path, best_.edges)) {
            best_ = std::move(leaf);
        } else if (leaf.path == best_.path && leaf.edges == best_.edges) {
            record_automorphism(leaf, best_);
        }
    }

    void record_automorphism(const Leaf& a, const Leaf& b) {
        // both leaves relabel g to the same graph, so b^-1 after a fixes g
        std::vector<int> im(n_);
        for (int v = 0; v < n_; ++v) im[v] = b.lab[a.pos[v]];
        bool id = true;
        for (int v = 0; v < n_ && id; ++v) id = im[v] == v;
        if (!id) autos_.push_back(std::move(im));
    }

    const Graph& g_;
    int n_;
    std::vector<std::vector<int>> autos_;
    bool have_first_ = false;
    Leaf first_, best_;
};

Search run_search(const Graph& g, int cap) {
    if (g.num_vertices() < 1) throw error("canon: graph must have at least one vertex");
    if (g.num_vertices() > cap) throw error("canon: vertex count exceeds cap");
    Search s(g);
    s.run();
    return s;
}

}  // namespace

PermGroup automorphism_group(const Graph& g, int cap) {
    Search s = run_search(g, cap);
    auto gens = s.automorphisms();
    if (gens.empty()) return PermGroup::trivial(g.num_vertices());
    PermGroup aut = PermGroup::from_generators(gens);
    // every generator must preserve adjacency
    for (const Perm& a : aut.generators())
        for (auto [u, v] : g.edges())
            if (!g.adjacent(a[u], a[v])) throw error("canon: non-automorphism generator");
    return aut;
}

Perm canonical_labelling(const Graph& g, int cap) {
    return run_search(g, cap).best_labelling();
}

Graph canonical_form(const Graph& g, int cap) {
    return g.relabelled(canonical_labelling(g, cap));
}

bool isomorphic(const Graph& a, const Graph& b, int cap) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return false;
    return canonical_form(a, cap) == canonical_form(b, cap);
}

std::optional<Perm> isomorphism(const Graph& a, const Graph& b, int cap) {
    if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
        return std::nullopt;
    Perm ca = canonical_labelling(a, cap);
    Perm cb = canonical_labelling(b, cap);
    if (a.relabelled(ca) != b.relabelled(cb)) return std::nullopt;
    Perm w = ca * cb.inverse();
    for (auto [u, v] : a.edges())
        if (!b.adjacent(w[u], w[v])) throw error("canon: isomorphism witness invalid");
    return w;
}

bool is_vertex_transitive(const Graph& g, const PermGroup& aut) {
    return aut.is_transitive();
}

namespace {

// single orbit check for a set of items under an action
template <typename Item, typename Act>
bool single_orbit(const std::vector<Item>& items, const std::vector<Perm>& gens, Act act) {
    if (items.size() <= 1) return true;
    std::set<Item> seen{items[0]};
    std::vector<Item> frontier{items[0]};
    while (!frontier.empty()) {
        Item cur = frontier.back();
        frontier.pop_back();
        for (const Perm& p : gens) {
            Item nxt = act(cur, p);
            if (seen.insert(nxt).second) frontier.push_back(nxt);
        }
    }
    return seen.size() == items.size();
}

std::vector<std::vector<int>> all_s_arcs(const Graph& g, int s) {
    std::vector<std::vector<int>> out;
    std::vector<int> walk;
    auto extend = [&](auto&& self, int last, int prev, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(walk);
            return;
        }
        for (int nb : g.neighbours(last)) {
            if (nb == prev) continue;
            walk.push_back(nb);
            self(self, nb, last, remaining - 1);
            walk.pop_back();
        }
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        walk = {v};
        extend(extend, v, -1, s);
    }
    return out;
}

}  // namespace

bool is_edge_transitive(const Graph& g, const PermGroup& aut) {
    auto edges = g.edges();
    return single_orbit(edges, aut.generators(), [](std::pair<int, int> e, const Perm& p) {
        int a = p[e.first], b = p[e.second];
        if (a > b) std::swap(a, b);
        return std::pair(a, b);
    });
}

bool is_arc_transitive(const Graph& g, const PermGroup& aut) {
    std::vector<std::pair<int, int>> arcs;
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return single_orbit(arcs, aut.generators(), [](std::pair<int, int> a, const Perm& p) {
        return std::pair(p[a.first], p[a.second]);
    });
}

int max_s_arc_transitivity(const Graph& g, const PermGroup& aut) {
    int best = 0;
    for (int s = 1; s <= 6; ++s) {
        auto arcs = all_s_arcs(g, s);
        if (arcs.empty()) break;
        bool ok = single_orbit(arcs, aut.generators(),
                               [](const std::vector<int>& a, const Perm& p) {
                                   std::vector<int> b(a.size());
                                   for (std::size_t i = 0; i < a.size(); ++i) b[i] = p[a[i]];
                                   return b;
                               });
        if (!ok) break;
        best = s;
    }
    return best;
}

bool is_vertex_transitive(const Graph& g) { return is_vertex_transitive(g, automorphism_group(g)); }
bool is_edge_transitive(const Graph& g) { return is_edge_transitive(g, automorphism_group(g)); }
bool is_arc_transitive(const Graph& g) { return is_arc_transitive(g, automorphism_group(g)); }
int max_s_arc_transitivity(const Graph& g) {
    return max_s_arc_transitivity(g, automorphism_group(g));
}

}  // namespace cubicbase
