#include "cubicbase/permgroup.hpp"

#include <algorithm>

namespace cubicbase {

namespace {

// True iff u*g == v as permutations, checked without materializing u*g.
bool product_equals(const Perm& u, const Perm& g, const Perm& v) {
    const int n = u.degree();
    for (int i = 0; i < n; ++i)
        if (g[u[i]] != v[i]) return false;
    return true;
}

}  // namespace

std::string Perm::cycle_string() const {
    std::vector<char> seen(img_.size(), 0);
    std::string out;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i] || img_[i] == i) {
            seen[i] = 1;
            continue;
        }
        out += '(';
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            if (j != i) out += ' ';
            out += std::to_string(j);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

PermGroup PermGroup::trivial(int degree) {
    if (degree < 1) throw error("PermGroup: degree must be at least 1");
    PermGroup g;
    g.degree_ = degree;
    g.order_ = 1;
    return g;
}

namespace {

struct ChainBuilder {
    int n;
    std::vector<ChainLevel> levels;
    std::vector<char> dirty;
    std::vector<int> hint;
    std::vector<char> in_base;

    explicit ChainBuilder(int degree, std::vector<int> base_hint)
        : n(degree), hint(std::move(base_hint)), in_base(degree, 0) {}

    int choose_base_point(const std::vector<Perm>& movers) {
        auto moved = [&](int p) {
            for (const Perm& h : movers)
                if (h[p] != p) return true;
            return false;
        };
        for (int p : hint)
            if (!in_base[p] && moved(p)) return p;
        for (int p = 0; p < n; ++p)
            if (!in_base[p] && moved(p)) return p;
        throw error("PermGroup: internal: no moved point for new base");
    }

    void add_level(const std::vector<Perm>& movers) {
        ChainLevel lvl;
        lvl.base_point = choose_base_point(movers);
        in_base[lvl.base_point] = 1;
        levels.push_back(std::move(lvl));
        dirty.push_back(1);
    }

    void recompute_orbit(std::size_t k) {
        ChainLevel& lvl = levels[k];
        lvl.orbit.clear();
        lvl.orbit_pos.assign(n, -1);
        lvl.transversal.clear();
        lvl.orbit.push_back(lvl.base_point);
        lvl.orbit_pos[lvl.base_point] = 0;
        lvl.transversal.push_back(Perm(n));
        for (std::size_t idx = 0; idx < lvl.orbit.size(); ++idx) {
            const int p = lvl.orbit[idx];
            for (const Perm& g : lvl.gens) {
                const int q = g[p];
                if (lvl.orbit_pos[q] < 0) {
                    lvl.orbit_pos[q] = static_cast<int>(lvl.orbit.size());
                    lvl.orbit.push_back(q);
                    lvl.transversal.push_back(lvl.transversal[idx] * g);
                }
            }
        }
    }

    void ensure_orbit(std::size_t k) {
        if (dirty[k]) {
            recompute_orbit(k);
            dirty[k] = 0;
        }
    }

    // Strips g through levels [from, end); returns residue and stop level.
    std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) {
        for (std::size_t j = from; j < levels.size(); ++j) {
            if (g.is_identity()) return {std::move(g), j};
            ensure_orbit(j);
            const int q = g[levels[j].base_point];
            const int pos = levels[j].orbit_pos[q];
            if (pos < 0) return {std::move(g), j};
            g = g * levels[j].transversal[pos].inverse();
        }
        return {std::move(g), levels.size()};
    }

    // Adds residue h (nontrivial, fixing base points of levels < i+1) at
    // levels i+1..j. Creates a new level when j == levels.size().
    void add_generator(const Perm& h, std::size_t i, std::size_t j) {
        if (j == levels.size()) add_level({h});
        for (std::size_t k = i + 1; k <= j; ++k) {
            levels[k].gens.push_back(h);
            dirty[k] = 1;
        }
    }

    void build(const std::vector<Perm>& gens) {
        std::vector<Perm> nontrivial;
        for (const Perm& g : gens)
            if (!g.is_identity()) nontrivial.push_back(g);
        if (nontrivial.empty()) return;
        add_level(nontrivial);
        levels[0].gens = nontrivial;
        dirty[0] = 1;

        std::ptrdiff_t i = 0;
        while (i >= 0) {
            const std::size_t li = static_cast<std::size_t>(i);
            ensure_orbit(li);
            bool restarted = false;
            const std::size_t orbit_size = levels[li].orbit.size();
            for (std::size_t idx = 0; idx < orbit_size && !restarted; ++idx) {
                const std::size_t gen_count = levels[li].gens.size();
                for (std::size_t gi = 0; gi < gen_count; ++gi) {
                    // levels may be re-indexed below, so look up fresh each time
                    const Perm g = levels[li].gens[gi];
                    const Perm& u = levels[li].transversal[idx];
                    const int q = g[levels[li].orbit[idx]];
                    const Perm& v = levels[li].transversal[levels[li].orbit_pos[q]];
                    if (product_equals(u, g, v)) continue;
                    Perm s = u * g * v.inverse();
                    auto [h, j] = strip(std::move(s), li + 1);
                    if (h.is_identity()) continue;
                    add_generator(h, li, j);
                    i = static_cast<std::ptrdiff_t>(j);
                    restarted = true;
                    break;
                }
            }
            if (!restarted) --i;
        }
    }
};

}  // namespace

PermGroup PermGroup::from_generators(std::vector<Perm> gens,
                                     std::vector<int> base_hint) {
    if (gens.empty()) throw error("PermGroup: empty generator list");
    const int n = gens.front().degree();
    for (const Perm& g : gens)
        if (g.degree() != n) throw error("PermGroup: generator degree mismatch");
    for (int p : base_hint)
        if (p < 0 || p >= n) throw error("PermGroup: base hint point out of range");

    ChainBuilder b(n, std::move(base_hint));
    b.build(gens);

    PermGroup g;
    g.degree_ = n;
    g.gens_ = std::move(gens);
    g.chain_ = std::move(b.levels);
    g.order_ = 1;
    for (const ChainLevel& lvl : g.chain_) g.order_ *= lvl.orbit.size();
    return g;
}

std::size_t PermGroup::order_as_size_t() const {
    if (order_ > BigInt(SIZE_MAX)) throw error("PermGroup: order too large");
    return static_cast<std::size_t>(order_);
}

Perm PermGroup::sift(const Perm& g) const {
    if (g.degree() != degree_) throw error("PermGroup: degree mismatch in sift");
    Perm r = g;
    for (const ChainLevel& lvl : chain_) {
        if (r.is_identity()) break;
        const int q = r[lvl.base_point];
        const int pos = lvl.orbit_pos[q];
        if (pos < 0) return r;
        r = r * lvl.transversal[pos].inverse();
    }
    return r;
}

bool PermGroup::contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).is_identity();
}

std::vector<int> PermGroup::base() const {
    std::vector<int> b;
    for (const ChainLevel& lvl : chain_) b.push_back(lvl.base_point);
    return b;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
    std::vector<int> owner(degree_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < degree_; ++s) {
        if (owner[s] >= 0) continue;
        std::vector<int> orb{s};
        owner[s] = static_cast<int>(out.size());
        for (std::size_t i = 0; i < orb.size(); ++i)
            for (const Perm& g : gens_) {
                const int q = g[orb[i]];
                if (owner[q] < 0) {
                    owner[q] = owner[s];
                    orb.push_back(q);
                }
            }
        out.push_back(std::move(orb));
    }
    return out;
}

std::vector<int> PermGroup::orbit_of(int point) const {
    std::vector<char> seen(degree_, 0);
    std::vector<int> orb{point};
    seen[point] = 1;
    for (std::size_t i = 0; i < orb.size(); ++i)
        for (const Perm& g : gens_) {
            const int q = g[orb[i]];
            if (!seen[q]) {
                seen[q] = 1;
                orb.push_back(q);
            }
        }
    return orb;
}

bool PermGroup::is_transitive() const {
    return static_cast<int>(orbit_of(0).size()) == degree_;
}

bool PermGroup::is_semiregular() const {
    for (const auto& orb : orbits())
        if (BigInt(orb.size()) != order_) return false;
    return true;
}

PermGroup PermGroup::point_stabiliser(int point) const {
    if (point < 0 || point >= degree_) throw error("point_stabiliser: out of range");
    if (is_trivial()) return *this;
    bool moved = false;
    for (const Perm& g : gens_) moved |= g[point] != point;
    if (!moved) return *this;
    PermGroup rebased = from_generators(gens_, {point});
    if (rebased.chain_.size() < 2 || rebased.chain_[1].gens.empty())
        return trivial(degree_);
    return from_generators(rebased.chain_[1].gens);
}

PermGroup PermGroup::pointwise_stabiliser(std::span<const int> points) const {
    PermGroup g = *this;
    for (int p : points) g = g.point_stabiliser(p);
    return g;
}

PermGroup PermGroup::setwise_stabiliser(const std::vector<int>& set) const {
    if (set.empty()) throw error("setwise_stabiliser: empty set");
    std::vector<char> in_set(degree_, 0);
    for (int p : set) {
        if (p < 0 || p >= degree_) throw error("setwise_stabiliser: out of range");
        in_set[p] = 1;
    }
    if (is_trivial()) return *this;

    // Rebuild with base points inside the set first, so membership of base
    // point images prunes the coset search early.
    PermGroup g = from_generators(gens_, set);
    const auto& chain = g.chain_;
    std::vector<Perm> found;

    // Chain DFS over coset representatives: element = t_{L-1} * ... * t_0 with
    // t_k from level k's transversal; choosing t_0 first pins base_0's image.
    std::vector<const ChainLevel*> lv;
    for (const auto& l : chain) lv.push_back(&l);
    auto rec = [&](auto&& self, std::size_t k, const Perm& sk) -> void {
        // invariant: elements below are h * sk with h fixing base_0..base_{k-1}
        if (k == lv.size()) {
            bool ok = true;
            for (int p = 0; p < degree_ && ok; ++p)
                if (in_set[p] != in_set[sk[p]]) ok = false;
            if (ok && !sk.is_identity()) found.push_back(sk);
            return;
        }
        const ChainLevel& l = *lv[k];
        for (std::size_t idx = 0; idx < l.orbit.size(); ++idx) {
            const int image = sk[l.orbit[idx]];
            if (in_set[l.base_point] != in_set[image]) continue;
            self(self, k + 1, l.transversal[idx] * sk);
        }
    };
    rec(rec, 0, Perm(degree_));

    if (found.empty()) return trivial(degree_);
    return from_generators(found);
}

std::vector<Perm> PermGroup::elements(std::size_t cap) const {
    if (order_ > BigInt(cap)) throw error("PermGroup: element enumeration cap exceeded");
    std::vector<Perm> result{Perm(degree_)};
    for (std::size_t k = chain_.size(); k-- > 0;) {
        const ChainLevel& lvl = chain_[k];
        std::vector<Perm> next;
        next.reserve(result.size() * lvl.transversal.size());
        for (const Perm& h : result)
            for (const Perm& t : lvl.transversal) next.push_back(h * t);
        result = std::move(next);
    }
    return result;
}

}  // namespace cubicbase
