#include "cubicbase/groupops.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace cubicbase {

Rational fixed_point_ratio(const PermGroup& g, const Perm& x) {
    if (!g.contains(x)) throw error("fixed_point_ratio: element not in group");
    return Rational(x.num_fixed_points(), g.degree());
}

namespace {

// conjugacy class of x under g, BFS over generator conjugation
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x, std::size_t cap) {
    std::set<Perm> seen{x};
    std::vector<Perm> frontier{x};
    while (!frontier.empty()) {
        Perm cur = frontier.back();
        frontier.pop_back();
        for (const Perm& s : g.generators()) {
            Perm c = conjugated(cur, s);
            if (seen.insert(c).second) {
                if (seen.size() > cap) throw error("conjugacy class cap exceeded");
                frontier.push_back(c);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

bool fpr_identity_holds(const PermGroup& g, const Perm& x, std::size_t class_cap) {
    if (!g.is_transitive()) throw error("fpr identity: group must be transitive");
    if (!g.contains(x)) throw error("fpr identity: element not in group");
    auto cls = conjugacy_class(g, x, class_cap);
    std::size_t fixing_alpha = 0;
    for (const Perm& c : cls)
        if (c[0] == 0) ++fixing_alpha;
    // |Fix(x)|/n == |x^G meet G_alpha| / |x^G|, compared exactly
    return Rational(x.num_fixed_points(), g.degree()) ==
           Rational(fixing_alpha, cls.size());
}

int regular_orbit_count(const PermGroup& p) {
    int count = 0;
    for (const auto& orb : p.orbits())
        if (BigInt(orb.size()) == p.order()) ++count;
    return count;
}

BlockSystem block_system(const PermGroup& g, int a, int b) {
    if (!g.is_transitive()) throw error("block_system: group must be transitive");
    const int n = g.degree();
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
        throw error("block_system: bad seed pair");

    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };

    std::vector<int> queue;
    uf[find(b)] = find(a);
    queue.push_back(b);
    while (!queue.empty()) {
        const int c = queue.back();
        queue.pop_back();
        const int r = find(c);
        for (const Perm& p : g.generators()) {
            int x = find(p[c]), y = find(p[r]);
            if (x != y) {
                uf[x] = y;
                queue.push_back(x);
            }
        }
    }

    std::map<int, std::vector<int>> by_root;
    for (int v = 0; v < n; ++v) by_root[find(v)].push_back(v);

    std::vector<std::vector<int>> blocks;
    std::vector<int> block_of(n);
    for (auto& [root, cell] : by_root) {
        for (int v : cell) block_of[v] = static_cast<int>(blocks.size());
        blocks.push_back(cell);
    }
    const std::size_t size = blocks.front().size();
    for (const auto& cell : blocks)
        if (cell.size() != size) throw error("block_system: unequal blocks");

    const int m = static_cast<int>(blocks.size());
    std::vector<Perm> action;
    for (const Perm& p : g.generators()) {
        std::vector<int> im(m);
        for (int i = 0; i < m; ++i) im[i] = block_of[p[blocks[i][0]]];
        action.push_back(Perm::from_images(im));
    }
    PermGroup block_action =
        m == 1 ? PermGroup::trivial(1) : PermGroup::from_generators(action);
    return BlockSystem{std::move(blocks), std::move(block_action)};
}

PermGroup coset_action(const PermGroup& g, const PermGroup& h, std::size_t cap) {
    if (g.degree() != h.degree()) throw error("coset_action: degree mismatch");
    for (const Perm& x : h.generators())
        if (!g.contains(x)) throw error("coset_action: H is not a subgroup of G");

    auto h_elems = h.elements(cap);
    auto coset_key = [&](const Perm& x) {
        std::vector<int> best = (h_elems.front() * x).images();
        for (const Perm& e : h_elems) {
            std::vector<int> cand = (e * x).images();
            if (cand < best) best = std::move(cand);
        }
        return best;
    };

    std::map<std::vector<int>, int> index;
    std::vector<Perm> reps{Perm(g.degree())};
    index[coset_key(reps[0])] = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const Perm& s : g.generators()) {
            Perm next = reps[i] * s;
            auto key = coset_key(next);
            if (!index.count(key)) {
                if (reps.size() >= cap) throw error("coset_action: coset cap exceeded");
                index[key] = static_cast<int>(reps.size());
                reps.push_back(std::move(next));
            }
        }
    }

    const int m = static_cast<int>(reps.size());
    if (m == 1) return PermGroup::trivial(1);
    std::vector<Perm> action;
    for (const Perm& s : g.generators()) {
        std::vector<int> im(m);
        for (int i = 0; i < m; ++i) im[i] = index.at(coset_key(reps[i] * s));
        action.push_back(Perm::from_images(im));
    }
    return PermGroup::from_generators(action);
}

namespace {

std::uint64_t odd_part(std::uint64_t v) {
    while (v % 2 == 0) v /= 2;
    return v;
}

bool normalises(const Perm& y, const PermGroup& p) {
    for (const Perm& x : p.generators())
        if (!p.contains(conjugated(x, y))) return false;
    return true;
}

}  // namespace

PermGroup sylow2(const PermGroup& g, std::size_t cap) {
    if (g.order() > BigInt(cap)) throw error("sylow2: order cap exceeded");
    BigInt two_part = 1;
    {
        BigInt rest = g.order();
        while (rest % 2 == 0) {
            rest /= 2;
            two_part *= 2;
        }
    }
    if (two_part == 1) return PermGroup::trivial(g.degree());

    auto elems = g.elements(cap);
    std::sort(elems.begin(), elems.end());

    PermGroup p = PermGroup::trivial(g.degree());
    for (const Perm& y : elems) {
        if (y.order() % 2 != 0) continue;
        const std::uint64_t odd = odd_part(y.order());
        Perm acc(g.degree());
        for (std::uint64_t i = 0; i < odd; ++i) acc = acc * y;
        p = PermGroup::from_generators({acc});
        break;
    }
    if (p.is_trivial()) throw error("sylow2: internal: no 2-element found");

    while (p.order() < two_part) {
        bool extended = false;
        for (const Perm& y : elems) {
            if (p.contains(y) || !normalises(y, p)) continue;
            const std::uint64_t odd = odd_part(y.order());
            Perm z(g.degree());
            for (std::uint64_t i = 0; i < odd; ++i) z = z * y;
            if (z.is_identity() || p.contains(z)) continue;
            std::vector<Perm> gens = p.generators();
            gens.push_back(z);
            p = PermGroup::from_generators(gens);
            extended = true;
            break;
        }
        if (!extended) throw error("sylow2: internal: climb stalled");
    }
    return p;
}

int nilpotency_class(const PermGroup& p, std::size_t cap) {
    if (p.is_trivial()) return 0;
    auto whole = p.elements(cap);
    std::vector<Perm> layer = whole;
    int cls = 0;
    while (true) {
        ++cls;
        // next term of the lower central series: <[x, g] : x in layer, g in P>
        std::vector<Perm> comms;
        for (const Perm& x : layer)
            for (const Perm& g : whole) {
                Perm c = commutator(x, g);
                if (!c.is_identity()) comms.push_back(c);
            }
        if (comms.empty()) return cls;
        layer = PermGroup::from_generators(comms).elements(cap);
        if (cls > 64) throw error("nilpotency_class: series does not terminate");
    }
}

std::uint64_t exponent(const PermGroup& p, std::size_t cap) {
    std::uint64_t e = 1;
    for (const Perm& x : p.elements(cap)) e = std::lcm(e, x.order());
    return e;
}

PermGroup conjugate(const PermGroup& p, const Perm& t) {
    if (p.degree() != t.degree()) throw error("conjugate: degree mismatch");
    std::vector<Perm> gens;
    for (const Perm& x : p.generators()) gens.push_back(conjugated(x, t));
    if (gens.empty()) return PermGroup::trivial(p.degree());
    return PermGroup::from_generators(gens);
}

bool intersection_trivial(const PermGroup& p, const PermGroup& q, std::size_t cap) {
    const PermGroup& small = p.order() <= q.order() ? p : q;
    const PermGroup& large = p.order() <= q.order() ? q : p;
    for (const Perm& x : small.elements(cap))
        if (!x.is_identity() && large.contains(x)) return false;
    return true;
}

bool double_cosets_distinct(const PermGroup& p, const Perm& t1, const Perm& t2,
                            std::size_t cap) {
    for (const Perm& a : p.elements(cap)) {
        Perm w = a * t1;
        if (p.contains(w.inverse() * t2)) return false;
    }
    return true;
}

}  // namespace cubicbase
