#include "cubicbase/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"

namespace cubicbase {

int Colouring::num_colours() const {
    int m = 0;
    for (int c : colours) m = std::max(m, c + 1);
    return m;
}

namespace {

// orbit representatives of the group generated by gens, in point order
std::vector<int> orbit_reps(const std::vector<Perm>& gens, int degree) {
    std::vector<char> seen(degree, 0);
    std::vector<int> reps;
    for (int v = 0; v < degree; ++v) {
        if (seen[v]) continue;
        reps.push_back(v);
        std::vector<int> frontier{v};
        seen[v] = 1;
        while (!frontier.empty()) {
            int u = frontier.back();
            frontier.pop_back();
            for (const Perm& g : gens) {
                if (!seen[g[u]]) {
                    seen[g[u]] = 1;
                    frontier.push_back(g[u]);
                }
            }
        }
    }
    return reps;
}

bool base_dfs(const PermGroup& s, int remaining, std::vector<int>& tuple) {
    if (s.is_trivial()) return true;
    if (remaining == 0) return false;
    // a stabiliser shrinks at most by the largest orbit length per point
    BigInt bound = 1;
    for (int i = 0; i < remaining; ++i) bound *= s.degree();
    if (s.order() > bound) return false;

    for (int v : orbit_reps(s.generators(), s.degree())) {
        bool moved = false;
        for (const Perm& g : s.generators()) moved |= g[v] != v;
        if (!moved) continue;
        tuple.push_back(v);
        if (base_dfs(s.point_stabiliser(v), remaining - 1, tuple)) return true;
        tuple.pop_back();
    }
    return false;
}

}  // namespace

BaseSizeResult base_size(const PermGroup& g, int degree_cap, const BigInt& order_cap) {
    if (g.degree() > degree_cap) throw error("base_size: degree cap exceeded");
    if (g.order() > order_cap) throw error("base_size: order cap exceeded");
    if (g.is_trivial()) return {0, {}};

    for (int k = 1; k <= g.degree(); ++k) {
        std::vector<int> tuple;
        if (g.is_transitive()) {
            // first point free by transitivity
            tuple.push_back(0);
            if (base_dfs(g.point_stabiliser(0), k - 1, tuple)) return {k, tuple};
        } else {
            if (base_dfs(g, k, tuple)) return {k, tuple};
        }
    }
    throw error("base_size: no base found");
}

BaseLe2Result has_base_le2(const PermGroup& g) {
    if (!g.is_transitive()) throw error("has_base_le2: group must be transitive");
    if (g.is_trivial()) return {true, {}};
    PermGroup s = g.point_stabiliser(0);
    if (s.is_trivial()) return {true, {0}};
    auto elems = s.elements();
    std::vector<char> fixed_by_some(g.degree(), 0);
    for (const Perm& e : elems) {
        if (e.is_identity()) continue;
        for (int v = 0; v < g.degree(); ++v)
            if (e[v] == v) fixed_by_some[v] = 1;
    }
    for (int b = 1; b < g.degree(); ++b)
        if (!fixed_by_some[b]) return {true, {0, b}};
    return {false, {}};
}

std::optional<std::pair<int, int>> is_split_px(const Graph& gamma) {
    const int n = gamma.num_vertices();
    if (n < 12 || !gamma.is_regular(3) || !is_connected(gamma)) return std::nullopt;
    for (int r = 3; 4 * r <= n; ++r)
        for (int s = 1; s <= r - 1; ++s) {
            long size = 2L * r * (1L << s);
            if (size > n) break;
            if (size != n) continue;
            if (isomorphic(gamma, spx_graph(r, s))) return std::pair{r, s};
        }
    return std::nullopt;
}

ClassificationReport classify(const Graph& gamma) {
    if (!gamma.is_regular(3)) throw error("classify: graph must be cubic");
    if (!is_connected(gamma)) throw error("classify: graph must be connected");
    PermGroup aut = automorphism_group(gamma);
    if (!aut.is_transitive()) throw error("classify: graph must be vertex-transitive");

    ClassificationReport rep;
    rep.aut_order = aut.order();

    BaseLe2Result b2 = has_base_le2(aut);
    if (b2.holds) {
        rep.verdict = Verdict::BaseSizeAtMost2;
        rep.base_witness = b2.witness;
        rep.base_size = static_cast<int>(b2.witness.size());
        return rep;
    }

    for (const std::string& name : table1_names()) {
        Graph t = table1_graph(name);
        if (t.num_vertices() != gamma.num_vertices()) continue;
        if (isomorphic(gamma, t)) {
            rep.verdict = Verdict::Exceptional;
            rep.exceptional_name = name;
            rep.base_size = base_size(aut).size;
            return rep;
        }
    }

    if (auto rs = is_split_px(gamma)) {
        rep.verdict = Verdict::SplitPX;
        rep.r = rs->first;
        rep.s = rs->second;
        rep.base_size = base_size(aut).size;
        return rep;
    }

    throw error("classify: no verdict applies; input outside the classification");
}

std::optional<std::vector<int>> min_asymmetric_set(const PermGroup& g, std::size_t cap) {
    const int n = g.degree();
    auto elems = g.elements(cap);
    std::vector<Perm> nontrivial;
    for (const Perm& e : elems)
        if (!e.is_identity()) nontrivial.push_back(e);
    if (nontrivial.empty()) return std::vector<int>{};

    std::vector<char> in_set(n, 0);
    std::vector<int> chosen;
    auto asymmetric = [&]() {
        for (const Perm& e : nontrivial) {
            bool preserves = true;
            for (int v : chosen)
                if (!in_set[e[v]]) {
                    preserves = false;
                    break;
                }
            if (preserves) return false;
        }
        return true;
    };
    // subsets by size ascending, lexicographic; complements are equivalent so
    // half the domain suffices
    auto scan = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0) return asymmetric();
        for (int v = next; v <= n - remaining; ++v) {
            in_set[v] = 1;
            chosen.push_back(v);
            if (self(self, v + 1, remaining - 1)) return true;
            chosen.pop_back();
            in_set[v] = 0;
        }
        return false;
    };
    for (int size = 1; 2 * size <= n; ++size)
        if (scan(scan, 0, size)) return chosen;
    return std::nullopt;
}

namespace {

bool is_2_group_gens(const PermGroup& p) {
    BigInt o = p.order();
    while (o % 2 == 0) o /= 2;
    return o == 1;
}

std::optional<Perm> central_involution(const PermGroup& p) {
    auto elems = p.elements();
    for (const Perm& z : elems) {
        if (z.is_identity() || z.order() != 2) continue;
        bool central = true;
        for (const Perm& g : p.generators())
            if (conjugated(z, g) != z) {
                central = false;
                break;
            }
        if (central) return z;
    }
    return std::nullopt;
}

bool set_is_asymmetric(const PermGroup& p, const std::vector<int>& x) {
    std::vector<char> in(p.degree(), 0);
    for (int v : x) in[v] = 1;
    for (const Perm& e : p.elements()) {
        if (e.is_identity()) continue;
        bool preserves = true;
        for (int v : x)
            if (!in[e[v]]) {
                preserves = false;
                break;
            }
        if (preserves) return false;
    }
    return true;
}

// exhaustive search restricted to |X| < n/2 when n > 8
std::optional<std::vector<int>> small_degree_asymmetric_set(const PermGroup& p) {
    const int n = p.degree();
    auto elems = p.elements();
    std::vector<Perm> nontrivial;
    for (const Perm& e : elems)
        if (!e.is_identity()) nontrivial.push_back(e);

    std::vector<char> in_set(n, 0);
    std::vector<int> chosen;
    auto ok = [&]() {
        for (const Perm& e : nontrivial) {
            bool preserves = true;
            for (int v : chosen)
                if (!in_set[e[v]]) {
                    preserves = false;
                    break;
                }
            if (preserves) return false;
        }
        return true;
    };
    auto scan = [&](auto&& self, int next, int remaining) -> bool {
        if (remaining == 0) return ok();
        for (int v = next; v <= n - remaining; ++v) {
            in_set[v] = 1;
            chosen.push_back(v);
            if (self(self, v + 1, remaining - 1)) return true;
            chosen.pop_back();
            in_set[v] = 0;
        }
        return false;
    };
    const int max_size = n > 8 ? (n - 1) / 2 : n - 1;
    for (int size = 1; size <= max_size; ++size)
        if (scan(scan, 0, size)) return chosen;
    return std::nullopt;
}

}  // namespace

std::vector<int> asymmetric_set(const PermGroup& p) {
    const int n = p.degree();
    if (!p.is_transitive()) throw error("asymmetric_set: group must be transitive");
    if (!is_2_group_gens(p)) throw error("asymmetric_set: group must be a 2-group");
    if (nilpotency_class(p) > 2)
        throw error("asymmetric_set: nilpotency class exceeds 2");
    if (n == 4 && p.order() == 8)
        throw error("asymmetric_set: the dihedral degree-4 action has no asymmetric set");

    if (n <= 16) {
        auto x = small_degree_asymmetric_set(p);
        if (!x) throw error("asymmetric_set: exhaustive search failed");
        return *x;
    }

    // recursion along the blocks of a central involution
    auto z = central_involution(p);
    if (!z) throw error("asymmetric_set: no central involution");
    std::vector<int> block_of(n, -1);
    std::vector<std::pair<int, int>> blocks;
    for (int v = 0; v < n; ++v) {
        if (block_of[v] >= 0) continue;
        const int w = (*z)[v];
        if (w == v) throw error("asymmetric_set: central involution fixes a point");
        block_of[v] = block_of[w] = static_cast<int>(blocks.size());
        blocks.emplace_back(v, w);
    }
    const int m = static_cast<int>(blocks.size());
    std::vector<Perm> block_gens;
    for (const Perm& g : p.generators()) {
        std::vector<int> im(m);
        for (int b = 0; b < m; ++b) im[b] = block_of[g[blocks[b].first]];
        block_gens.push_back(Perm::from_images(im));
    }
    PermGroup q = PermGroup::from_generators(block_gens);
    std::vector<int> xq = asymmetric_set(q);

    std::vector<char> in_xq(m, 0);
    for (int b : xq) in_xq[b] = 1;
    std::vector<int> x;
    for (int b = 0; b < m; ++b)
        if (!in_xq[b]) x.push_back(blocks[b].first);

    if (!set_is_asymmetric(p, x))
        throw error("asymmetric_set: recursion produced an invalid set");
    if (n > 8 && 2 * static_cast<int>(x.size()) >= n)
        throw error("asymmetric_set: recursion produced an oversized set");
    return x;
}

namespace {

bool colouring_asymmetric(const PermGroup& p, const std::vector<int>& col) {
    for (const Perm& e : p.elements()) {
        if (e.is_identity()) continue;
        bool fixes = true;
        for (int v = 0; v < p.degree() && fixes; ++v) fixes = col[e[v]] == col[v];
        if (fixes) return false;
    }
    return true;
}

bool colourings_equivalent(const PermGroup& p, const std::vector<int>& a,
                           const std::vector<int>& b) {
    for (const Perm& e : p.elements()) {
        bool maps = true;
        // e maps colouring a to b when a(v) == b(v^e) for all v
        for (int v = 0; v < p.degree() && maps; ++v) maps = a[v] == b[e[v]];
        if (maps) return true;
    }
    return false;
}

std::vector<std::vector<int>> three_colourings_rec(const PermGroup& p);

std::vector<std::vector<int>> three_colourings_transitive(const PermGroup& p) {
    const int n = p.degree();
    if (n == 2) return {{0, 1}, {0, 2}, {1, 2}};

    auto z = central_involution(p);
    if (!z) throw error("asymmetric_3colourings: no central involution");
    std::vector<int> block_of(n, -1);
    std::vector<std::pair<int, int>> blocks;
    for (int v = 0; v < n; ++v) {
        if (block_of[v] >= 0) continue;
        const int w = (*z)[v];
        if (w == v) throw error("asymmetric_3colourings: central involution fixes a point");
        block_of[v] = block_of[w] = static_cast<int>(blocks.size());
        blocks.emplace_back(std::minmax(v, w));
    }
    const int m = static_cast<int>(blocks.size());
    std::vector<Perm> block_gens;
    for (const Perm& g : p.generators()) {
        std::vector<int> im(m);
        for (int b = 0; b < m; ++b) im[b] = block_of[g[blocks[b].first]];
        block_gens.push_back(Perm::from_images(im));
    }
    auto block_cols = three_colourings_rec(PermGroup::from_generators(block_gens));

    // the three asymmetric pair colourings serve as the colour alphabet:
    // block colour c becomes the ordered pair of point colours
    static const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::vector<int>> out;
    for (const auto& bc : block_cols) {
        std::vector<int> col(n);
        for (int b = 0; b < m; ++b) {
            col[blocks[b].first] = pairs[bc[b]][0];
            col[blocks[b].second] = pairs[bc[b]][1];
        }
        out.push_back(std::move(col));
    }
    return out;
}

std::vector<std::vector<int>> three_colourings_rec(const PermGroup& p) {
    const int n = p.degree();
    auto orbs = p.orbits();
    if (orbs.size() == 1 && n >= 2 && !p.is_trivial())
        return three_colourings_transitive(p);

    // intransitive (or trivial): solve each orbit, vary the first orbit's
    // choice to obtain three inequivalent combinations
    std::vector<std::vector<std::vector<int>>> per_orbit;
    for (const auto& orb : orbs) {
        if (orb.size() == 1) {
            per_orbit.push_back({{0}, {1}, {2}});
            continue;
        }
        std::vector<Perm> restricted;
        std::map<int, int> index;
        for (std::size_t i = 0; i < orb.size(); ++i) index[orb[i]] = static_cast<int>(i);
        std::set<std::vector<int>> seen;
        for (const Perm& g : p.generators()) {
            std::vector<int> im(orb.size());
            for (std::size_t i = 0; i < orb.size(); ++i) im[i] = index.at(g[orb[i]]);
            if (seen.insert(im).second) restricted.push_back(Perm::from_images(im));
        }
        per_orbit.push_back(three_colourings_rec(PermGroup::from_generators(restricted)));
    }

    std::vector<std::vector<int>> out;
    for (int variant = 0; variant < 3; ++variant) {
        std::vector<int> col(n);
        for (std::size_t oi = 0; oi < orbs.size(); ++oi) {
            const auto& choice = per_orbit[oi][oi == 0 ? variant : 0];
            for (std::size_t i = 0; i < orbs[oi].size(); ++i)
                col[orbs[oi][i]] = choice[i];
        }
        out.push_back(std::move(col));
    }
    return out;
}

}  // namespace

std::vector<Colouring> asymmetric_3colourings(const PermGroup& p) {
    if (p.degree() < 2) throw error("asymmetric_3colourings: domain too small");
    if (!is_2_group_gens(p)) throw error("asymmetric_3colourings: group must be a 2-group");

    auto cols = three_colourings_rec(p);
    if (cols.size() != 3) throw error("asymmetric_3colourings: recursion failed");
    for (const auto& c : cols)
        if (!colouring_asymmetric(p, c))
            throw error("asymmetric_3colourings: produced a symmetric colouring");
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (colourings_equivalent(p, cols[i], cols[j]))
                throw error("asymmetric_3colourings: produced equivalent colourings");

    std::vector<Colouring> out;
    for (auto& c : cols) out.push_back(Colouring{std::move(c)});
    return out;
}

StarWitness star_check(const PermGroup& g, const PermGroup& t_group,
                       const PermGroup& p, std::size_t cap) {
    if (g.order() > BigInt(cap)) throw error("star_check: enumeration cap exceeded");
    for (const Perm& x : p.generators())
        if (!g.contains(x)) throw error("star_check: P not a subgroup of G");
    for (const Perm& x : t_group.generators())
        if (!g.contains(x)) throw error("star_check: T not a subgroup of G");

    auto p_elems = p.elements();
    auto trivial_meet = [&](const Perm& t) {
        const Perm tinv = t.inverse();
        for (const Perm& x : p_elems) {
            if (x.is_identity()) continue;
            // x in P^t iff x^(t^-1) in P
            if (p.contains(conjugated(x, tinv))) return false;
        }
        return true;
    };

    StarWitness w{{}, false, false};
    for (const Perm& t : t_group.elements(cap)) {
        if (!trivial_meet(t)) continue;
        w.any_witness = true;
        bool distinct = true;
        for (const Perm& prev : w.t)
            if (!double_cosets_distinct(p, prev, t)) {
                distinct = false;
                break;
            }
        if (distinct) w.t.push_back(t);
        if (w.t.size() >= 3) break;
    }
    w.satisfied = w.t.size() >= 3;
    return w;
}

int distinguishing_number(const Graph& gamma) {
    PermGroup aut = automorphism_group(gamma);
    if (aut.is_trivial()) return 1;
    if (min_asymmetric_set(aut)) return 2;
    const int n = gamma.num_vertices();
    // small-domain fallback for graphs needing three or more colours
    for (int k = 3; k <= n; ++k) {
        double total = 1;
        for (int i = 0; i < n; ++i) total *= k;
        if (total > 2e7) throw error("distinguishing_number: search space too large");
        std::vector<int> col(n, 0);
        auto scan = [&](auto&& self, int v) -> bool {
            if (v == n) return colouring_asymmetric(aut, col);
            for (int c = 0; c < k; ++c) {
                col[v] = c;
                if (self(self, v + 1)) return true;
            }
            col[v] = 0;
            return false;
        };
        if (scan(scan, 0)) return k;
    }
    throw error("distinguishing_number: no asymmetric colouring found");
}

std::optional<int> distinguishing_cost(const Graph& gamma) {
    PermGroup aut = automorphism_group(gamma);
    if (aut.is_trivial()) return std::nullopt;  // number 1, cost undefined
    auto x = min_asymmetric_set(aut);
    if (!x) return std::nullopt;  // number exceeds 2
    return static_cast<int>(std::max<std::size_t>(x->size(), 1));
}

StabiliserStructure stabiliser_structure_report(const Graph& gamma) {
    PermGroup aut = automorphism_group(gamma);
    if (!aut.is_transitive())
        throw error("stabiliser_structure_report: graph must be vertex-transitive");
    PermGroup stab = aut.point_stabiliser(0);

    StabiliserStructure rep{};
    rep.arc_transitive = is_arc_transitive(gamma, aut);
    rep.stabiliser_order = stab.order();
    rep.exponent = stab.is_trivial() ? 1 : exponent(stab);
    rep.divides_48 = BigInt(48) % rep.stabiliser_order == 0;
    rep.is_2_group = is_2_group_gens(stab);
    if (rep.arc_transitive) {
        // the stabiliser need not be nilpotent here, so the class is not taken
        rep.nilpotency_class = 0;
        rep.pass = rep.divides_48;
    } else {
        rep.nilpotency_class = rep.is_2_group ? nilpotency_class(stab) : 0;
        rep.pass = rep.is_2_group && rep.nilpotency_class <= 2 && rep.exponent <= 4;
    }
    return rep;
}

}  // namespace cubicbase
