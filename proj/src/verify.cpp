#include "cubicbase/verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cubicbase/analysis.hpp"
#include "cubicbase/canon.hpp"
#include "cubicbase/constructions.hpp"
#include "cubicbase/groupops.hpp"

namespace cubicbase {

bool SuiteResult::pass() const {
    for (const Check& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

template <typename T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

void add(SuiteResult& r, const std::string& name, const std::string& expected,
         const std::string& computed) {
    r.checks.push_back({name, expected, computed, expected == computed});
}

void add_bool(SuiteResult& r, const std::string& name, bool expected, bool computed) {
    add(r, name, expected ? "true" : "false", computed ? "true" : "false");
}

// ---------------------------------------------------------------- table1

struct Table1Row {
    const char* name;
    int vertices;
    long aut_order;
    long stab_order;
    int base;
};

constexpr Table1Row kTable1[] = {
    {"K4", 4, 24, 6, 3},           {"K3_3", 6, 72, 12, 4},
    {"Cube", 8, 48, 6, 3},         {"Petersen", 10, 120, 12, 3},
    {"Heawood", 14, 336, 24, 3},   {"Pappus", 18, 216, 12, 3},
    {"Desargues", 20, 240, 12, 3}, {"TutteCoxeter", 30, 1440, 48, 3},
    {"Foster", 90, 4320, 48, 3},
};

SuiteResult suite_table1() {
    SuiteResult r{"table1", {}};
    for (const Table1Row& row : kTable1) {
        Graph g = table1_graph(row.name);
        PermGroup aut = automorphism_group(g);
        add(r, std::string(row.name) + " vertices", str(row.vertices),
            str(g.num_vertices()));
        add(r, std::string(row.name) + " aut order", str(row.aut_order),
            str(aut.order()));
        add(r, std::string(row.name) + " stabiliser order", str(row.stab_order),
            str(aut.point_stabiliser(0).order()));
        add(r, std::string(row.name) + " base size", str(row.base),
            str(base_size(aut).size));
    }
    return r;
}

// ------------------------------------------------------ px / spx sweeps

BigInt px_expected_aut_order(int r, int s) {
    BigInt h = (BigInt(1) << r) * (2 * r);
    if (r != 4) return h;
    // the three r = 4 exceptions sit above H with index 9, 3, 2
    const int index[] = {9, 3, 2};
    return h * index[s - 1];
}

SuiteResult suite_px_sweep() {
    SuiteResult r{"px-sweep", {}};
    for (int rr = 3; rr <= 8; ++rr)
        for (int s = 1; s <= rr - 1; ++s) {
            const std::string tag = "C(" + str(rr) + "," + str(s) + ")";
            Graph g = px_graph(rr, s);
            PermGroup aut = automorphism_group(g);
            add(r, tag + " aut order", str(px_expected_aut_order(rr, s)),
                str(aut.order()));
            add_bool(r, tag + " aut base<=2", 2 * s > rr, has_base_le2(aut).holds);
            PermGroup k = px_group_K(rr, s);
            add_bool(r, tag + " K base>=3", 2 * s < rr, base_size(k).size >= 3);
        }
    return r;
}

SuiteResult suite_spx_sweep() {
    SuiteResult r{"spx-sweep", {}};
    for (int rr = 3; rr <= 8; ++rr)
        for (int s = 1; s <= rr - 1; ++s) {
            const std::string tag = "sC(" + str(rr) + "," + str(s) + ")";
            Graph g = spx_graph(rr, s);
            PermGroup aut = automorphism_group(g);
            if (rr != 4)
                add(r, tag + " aut order", str((BigInt(1) << rr) * (2 * rr)),
                    str(aut.order()));
            add_bool(r, tag + " base>=3", 2 * s < rr, !has_base_le2(aut).holds);
        }
    return r;
}

SuiteResult suite_splitmerge() {
    SuiteResult r{"splitmerge", {}};
    for (int rr = 3; rr <= 8; ++rr)
        for (int s = 1; s <= rr - 1; ++s) {
            const std::string tag =
                "merge(split(C(" + str(rr) + "," + str(s) + ")))";
            Graph gamma = spx_graph(rr, s);
            PermGroup h = spx_group_H(rr, s);
            std::string computed;
            try {
                MergeResult m = merge(gamma, h);
                if (m.degenerate)
                    computed = "degenerate";
                else
                    computed = isomorphic(m.graph, px_graph(rr, s))
                                   ? "isomorphic"
                                   : "not isomorphic";
            } catch (const error& e) {
                computed = std::string("error: ") + e.what();
            }
            add(r, tag, "isomorphic", computed);
        }
    return r;
}

// ---------------------------------------------------------------- star

PermGroup sym_group(int n) {
    if (n == 1) return PermGroup::trivial(1);
    std::vector<int> cyc(n);
    for (int i = 0; i < n; ++i) cyc[i] = i;
    return PermGroup::from_generators(
        {Perm::from_cycles(n, {{0, 1}}), Perm::from_cycles(n, {cyc})});
}

PermGroup alt_group(int n) {
    std::vector<int> cyc;
    if (n % 2 == 1)
        for (int i = 0; i < n; ++i) cyc.push_back(i);
    else
        for (int i = 1; i < n; ++i) cyc.push_back(i);
    return PermGroup::from_generators(
        {Perm::from_cycles(n, {{0, 1, 2}}), Perm::from_cycles(n, {cyc})});
}

// PGL(2,7) and PSL(2,7) on the projective line, points 0..6 = GF(7), 7 = inf
Perm moebius_map(int mul, bool invert, int add) {
    std::vector<int> img(8);
    auto inv7 = [](int x) {
        for (int y = 1; y < 7; ++y)
            if (x * y % 7 == 1) return y;
        return 0;
    };
    for (int x = 0; x <= 7; ++x) {
        int y;
        if (invert) {
            if (x == 7)
                y = 0;
            else if (x == 0)
                y = 7;
            else
                y = inv7(x);
        } else {
            y = x;
        }
        if (y != 7) y = (mul * y + add) % 7;
        img[x] = y;
    }
    return Perm::from_images(img);
}

SuiteResult suite_star() {
    SuiteResult r{"star", {}};

    auto run_pair = [&](const std::string& tag, const PermGroup& g,
                        const PermGroup& t, const PermGroup& p,
                        bool expect_satisfied) {
        StarWitness w = star_check(g, t, p);
        add_bool(r, tag + " satisfied", expect_satisfied, w.satisfied);
        if (!expect_satisfied)
            add_bool(r, tag + " trivial-intersection witness", true, w.any_witness);
    };

    {
        PermGroup g = sym_group(5), t = alt_group(5);
        PermGroup p = sylow2(g);
        add(r, "Sym(5) Sylow-2 order", "8", str(p.order()));
        run_pair("Sym(5)/Alt(5)", g, t, p, false);
    }
    {
        PermGroup g = PermGroup::from_generators(
            {moebius_map(1, false, 1), moebius_map(3, false, 0),
             moebius_map(1, true, 0)});
        PermGroup t = PermGroup::from_generators(
            {moebius_map(1, false, 1), moebius_map(2, false, 0),
             moebius_map(6, true, 0)});
        add(r, "PGL(2,7) order", "336", str(g.order()));
        add(r, "PSL(2,7) order", "168", str(t.order()));
        PermGroup p = sylow2(t);
        add(r, "PSL(2,7) Sylow-2 order", "8", str(p.order()));
        run_pair("PGL(2,7)/PSL(2,7)", g, t, p, false);
    }
    {
        PermGroup g = sym_group(6), t = alt_group(6);
        add(r, "Alt(6) order", "360", str(t.order()));
        PermGroup p = sylow2(g);
        add(r, "Sym(6) Sylow-2 order", "16", str(p.order()));
        run_pair("Sym(6)/Alt(6)", g, t, p, false);
    }
    {
        PermGroup g = sym_group(8), t = alt_group(8);
        PermGroup p = PermGroup::from_generators(
            {Perm::from_cycles(8, {{0, 6}, {2, 4}}),
             Perm::from_cycles(8, {{0, 1, 6, 5}, {2, 7}, {3, 4}}),
             Perm::from_cycles(8, {{0, 1}, {2, 4}, {3, 7}, {5, 6}}),
             Perm::from_cycles(8, {{0, 1, 6, 5}, {2, 3, 4, 7}})});
        add(r, "Sym(8) subgroup P order", "64", str(p.order()));
        run_pair("Sym(8)/Alt(8)", g, t, p, false);
    }
    {
        PermGroup g = alt_group(5);
        PermGroup p = PermGroup::from_generators(
            {Perm::from_cycles(5, {{0, 1}, {2, 3}}),
             Perm::from_cycles(5, {{0, 2}, {1, 3}})});
        add(r, "V4 order", "4", str(p.order()));
        run_pair("Alt(5)/V4", g, g, p, true);
    }
    return r;
}

// ----------------------------------------------------------- colourings

// right-regular action of an abstract group presented as a permutation group
PermGroup regular_action(const PermGroup& g) {
    auto elems = g.elements();
    std::sort(elems.begin(), elems.end());
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        index[elems[i]] = static_cast<int>(i);
    const int m = static_cast<int>(elems.size());
    std::vector<Perm> gens;
    for (const Perm& s : g.generators()) {
        std::vector<int> im(m);
        for (int i = 0; i < m; ++i) im[i] = index.at(elems[i] * s);
        gens.push_back(Perm::from_images(im));
    }
    return PermGroup::from_generators(gens);
}

// regular abelian group of the given cyclic type, on prod(type) points
PermGroup abelian_regular(const std::vector<int>& type) {
    int n = 1;
    for (int t : type) n *= t;
    std::vector<Perm> gens;
    int block = n;
    for (std::size_t d = 0; d < type.size(); ++d) {
        block /= type[d];
        std::vector<int> im(n);
        for (int i = 0; i < n; ++i) {
            int digit = (i / block) % type[d];
            im[i] = i + ((digit + 1) % type[d] - digit) * block;
        }
        gens.push_back(Perm::from_images(im));
    }
    return PermGroup::from_generators(gens);
}

PermGroup dihedral_action(int n) {
    std::vector<int> cyc(n), refl(n);
    for (int i = 0; i < n; ++i) {
        cyc[i] = (i + 1) % n;
        refl[i] = (n - i) % n;
    }
    return PermGroup::from_generators(
        {Perm::from_images(cyc), Perm::from_images(refl)});
}

// base wr C2 in its imprimitive action on two copies of the base domain
PermGroup wreath_top2(const PermGroup& base) {
    const int d = base.degree();
    std::vector<Perm> gens;
    for (const Perm& g : base.generators()) {
        std::vector<int> a(2 * d), b(2 * d);
        for (int i = 0; i < 2 * d; ++i) a[i] = b[i] = i;
        for (int i = 0; i < d; ++i) {
            a[i] = g[i];
            b[d + i] = d + g[i];
        }
        gens.push_back(Perm::from_images(a));
        gens.push_back(Perm::from_images(b));
    }
    std::vector<int> swap(2 * d);
    for (int i = 0; i < d; ++i) {
        swap[i] = d + i;
        swap[d + i] = i;
    }
    gens.push_back(Perm::from_images(swap));
    return PermGroup::from_generators(gens);
}

// direct product acting on the disjoint union of the domains
PermGroup direct_sum(const std::vector<PermGroup>& parts) {
    int n = 0;
    for (const PermGroup& p : parts) n += p.degree();
    std::vector<Perm> gens;
    int off = 0;
    for (const PermGroup& p : parts) {
        for (const Perm& g : p.generators()) {
            std::vector<int> im(n);
            for (int i = 0; i < n; ++i) im[i] = i;
            for (int i = 0; i < p.degree(); ++i) im[off + i] = off + g[i];
            gens.push_back(Perm::from_images(im));
        }
        off += p.degree();
    }
    return PermGroup::from_generators(gens);
}

// direct product acting on the product of the domains (regular x regular
// stays regular)
PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
    const int da = a.degree(), db = b.degree(), n = da * db;
    std::vector<Perm> gens;
    for (const Perm& g : a.generators()) {
        std::vector<int> im(n);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) im[i * db + j] = g[i] * db + j;
        gens.push_back(Perm::from_images(im));
    }
    for (const Perm& g : b.generators()) {
        std::vector<int> im(n);
        for (int i = 0; i < da; ++i)
            for (int j = 0; j < db; ++j) im[i * db + j] = i * db + g[j];
        gens.push_back(Perm::from_images(im));
    }
    return PermGroup::from_generators(gens);
}

PermGroup quaternion_regular() {
    // elements ordered 1, i, -1, -i, j, k, -j, -k; right multiplication
    return PermGroup::from_generators(
        {Perm::from_images({1, 2, 3, 0, 7, 4, 5, 6}),
         Perm::from_images({4, 5, 6, 7, 2, 3, 0, 1})});
}

PermGroup modular16_regular() {
    // <a,b | a^8 = b^2 = 1, bab = a^5>, elements a^i b^j at index i + 8j
    std::vector<int> ma(16), mb(16);
    for (int i = 0; i < 8; ++i) {
        ma[i] = (i + 1) % 8;
        ma[8 + i] = 8 + (i + 5) % 8;
        mb[i] = 8 + i;
        mb[8 + i] = i;
    }
    return PermGroup::from_generators(
        {Perm::from_images(ma), Perm::from_images(mb)});
}

PermGroup c4_semi_c4_regular() {
    // <a,b | a^4 = b^4 = 1, b^-1 a b = a^-1>, elements a^i b^j at i + 4j
    std::vector<int> ma(16), mb(16);
    for (int j = 0; j < 4; ++j)
        for (int i = 0; i < 4; ++i) {
            const int delta = j % 2 == 0 ? 1 : 3;
            ma[i + 4 * j] = (i + delta) % 4 + 4 * j;
            mb[i + 4 * j] = i + 4 * ((j + 1) % 4);
        }
    return PermGroup::from_generators(
        {Perm::from_images(ma), Perm::from_images(mb)});
}

struct CorpusGroup {
    std::string name;
    PermGroup group;
};

std::vector<CorpusGroup> colouring_corpus() {
    std::vector<CorpusGroup> c;
    auto put = [&](const std::string& n, PermGroup g) {
        c.push_back({n, std::move(g)});
    };

    const std::vector<std::vector<int>> abelian_types = {
        {2},       {4},       {2, 2},       {8},           {4, 2},
        {2, 2, 2}, {16},      {8, 2},       {4, 4},        {4, 2, 2},
        {2, 2, 2, 2}};
    for (const auto& t : abelian_types) {
        std::string n = "C" + str(t[0]);
        for (std::size_t i = 1; i < t.size(); ++i) n += "xC" + str(t[i]);
        put(n + " regular", abelian_regular(t));
    }

    put("D8 regular", regular_action(dihedral_action(4)));
    put("Q8 regular", quaternion_regular());
    put("M4(2) regular", modular16_regular());
    put("C4:C4 regular", c4_semi_c4_regular());
    put("D8xC2 regular",
        direct_product(regular_action(dihedral_action(4)), abelian_regular({2})));
    put("Q8xC2 regular", direct_product(quaternion_regular(), abelian_regular({2})));

    put("D8 deg4", dihedral_action(4));
    put("D16 deg8", dihedral_action(8));
    put("D32 deg16", dihedral_action(16));

    PermGroup w1 = wreath_top2(abelian_regular({2}));
    PermGroup w2 = wreath_top2(w1);
    put("C2wrC2 deg4", w1);
    put("C2wrC2wrC2 deg8", w2);
    put("C2wrC2wrC2wrC2 deg16", wreath_top2(w2));
    put("C4wrC2 deg8", wreath_top2(abelian_regular({4})));
    put("V4wrC2 deg8", wreath_top2(abelian_regular({2, 2})));
    put("C8wrC2 deg16", wreath_top2(abelian_regular({8})));
    put("C4xC2wrC2 deg16", wreath_top2(abelian_regular({4, 2})));
    put("C2^3wrC2 deg16", wreath_top2(abelian_regular({2, 2, 2})));
    put("Q8wrC2 deg16", wreath_top2(quaternion_regular()));
    put("D8deg4wrC2 deg8", wreath_top2(dihedral_action(4)));
    put("D16deg8wrC2 deg16", wreath_top2(dihedral_action(8)));

    PermGroup c2 = abelian_regular({2}), c4 = abelian_regular({4});
    PermGroup v4 = abelian_regular({2, 2}), c8 = abelian_regular({8});
    PermGroup d8n = dihedral_action(4), q8 = quaternion_regular();
    put("C2+C2", direct_sum({c2, c2}));
    put("C2+C4", direct_sum({c2, c4}));
    put("C2+V4", direct_sum({c2, v4}));
    put("C4+C4", direct_sum({c4, c4}));
    put("C4+V4", direct_sum({c4, v4}));
    put("V4+V4", direct_sum({v4, v4}));
    put("C2+C8", direct_sum({c2, c8}));
    put("C4+C8", direct_sum({c4, c8}));
    put("C8+C8", direct_sum({c8, c8}));
    put("C2+D8deg4", direct_sum({c2, d8n}));
    put("C4+D8deg4", direct_sum({c4, d8n}));
    put("D8deg4+D8deg4", direct_sum({d8n, d8n}));
    put("C2+Q8", direct_sum({c2, q8}));
    put("C4+C2wrC2", direct_sum({c4, w1}));
    put("C2+C4+C8", direct_sum({c2, c4, c8}));
    put("C2+C2+C2+C2", direct_sum({c2, c2, c2, c2}));
    put("D8deg4+Q8", direct_sum({d8n, q8}));
    put("C8+D16deg8", direct_sum({c8, dihedral_action(8)}));
    put("C2+D16deg8", direct_sum({c2, dihedral_action(8)}));
    put("C2+C2wrC2wrC2", direct_sum({c2, w2}));

    return c;
}

bool set_trivially_stabilised(const PermGroup& p, const std::vector<int>& x) {
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

bool colouring_fixed_only_by_identity(const PermGroup& p, const std::vector<int>& col) {
    for (const Perm& e : p.elements()) {
        if (e.is_identity()) continue;
        bool fixes = true;
        for (int v = 0; v < p.degree() && fixes; ++v) fixes = col[e[v]] == col[v];
        if (fixes) return false;
    }
    return true;
}

bool colourings_related(const PermGroup& p, const std::vector<int>& a,
                        const std::vector<int>& b) {
    for (const Perm& e : p.elements()) {
        bool maps = true;
        for (int v = 0; v < p.degree() && maps; ++v) maps = a[v] == b[e[v]];
        if (maps) return true;
    }
    return false;
}

SuiteResult suite_colourings() {
    SuiteResult r{"colourings", {}};
    auto corpus = colouring_corpus();
    add_bool(r, "corpus size >= 50", true, corpus.size() >= 50);

    for (const CorpusGroup& cg : corpus) {
        const PermGroup& p = cg.group;

        std::string col_result;
        try {
            auto cols = asymmetric_3colourings(p);
            bool ok = cols.size() == 3;
            for (const auto& c : cols)
                ok = ok && c.num_colours() <= 3 &&
                     colouring_fixed_only_by_identity(p, c.colours);
            for (int i = 0; i < 3 && ok; ++i)
                for (int j = i + 1; j < 3 && ok; ++j)
                    ok = !colourings_related(p, cols[i].colours, cols[j].colours);
            col_result = ok ? "3 valid colourings" : "invalid colourings";
        } catch (const error& e) {
            col_result = std::string("error: ") + e.what();
        }
        add(r, cg.name + " 3-colourings", "3 valid colourings", col_result);

        const bool exception_case = p.degree() == 4 && p.order() == 8;
        const bool admissible = p.is_transitive() && p.order() <= 4096 &&
                                !exception_case && nilpotency_class(p) <= 2;
        if (exception_case) {
            std::string got;
            try {
                asymmetric_set(p);
                got = "no error";
            } catch (const error&) {
                got = "documented error";
            }
            add(r, cg.name + " asymmetric set", "documented error", got);
        } else if (admissible) {
            std::string got;
            try {
                auto x = asymmetric_set(p);
                bool ok = set_trivially_stabilised(p, x);
                if (p.degree() > 8)
                    ok = ok && 2 * static_cast<int>(x.size()) < p.degree();
                got = ok ? "valid set" : "invalid set";
            } catch (const error& e) {
                got = std::string("error: ") + e.what();
            }
            add(r, cg.name + " asymmetric set", "valid set", got);
        }
    }
    return r;
}

// ---------------------------------------------------------- corollaries

struct CorpusGraph {
    std::string name;
    Graph graph;
    bool split_px;
};

std::vector<CorpusGraph> graph_corpus(bool include_big_spx) {
    std::vector<CorpusGraph> c;
    for (const Table1Row& row : kTable1)
        c.push_back({row.name, table1_graph(row.name), false});
    for (int n = 3; n <= 10; ++n)
        c.push_back({"circular_ladder(" + str(n) + ")", circular_ladder(n), false});
    for (int n = 2; n <= 10; ++n)
        c.push_back({"moebius_ladder(" + str(n) + ")", moebius_ladder(n), false});
    const int rmax = include_big_spx ? 8 : 6;
    for (int rr = 3; rr <= rmax; ++rr)
        for (int s = 1; s <= rr - 1; ++s) {
            if (2 * rr * (1 << s) > 512) continue;
            c.push_back(
                {"sC(" + str(rr) + "," + str(s) + ")", spx_graph(rr, s), true});
        }
    return c;
}

bool group_abelian(const PermGroup& g) {
    const auto& gens = g.generators();
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
    return true;
}

SuiteResult suite_corollaries() {
    SuiteResult r{"corollaries", {}};
    auto corpus = graph_corpus(false);

    for (const CorpusGraph& cg : corpus) {
        PermGroup aut = automorphism_group(cg.graph);
        const int n = cg.graph.num_vertices();

        if (!cg.split_px)
            add_bool(r, cg.name + " |Aut| <= 2n^2", true,
                     aut.order() <= BigInt(2) * n * n);

        bool abelian_pair = false;
        for (int b = 1; b < n && !abelian_pair; ++b) {
            const int pts[2] = {0, b};
            abelian_pair = group_abelian(aut.pointwise_stabiliser(pts));
        }
        add_bool(r, cg.name + " abelian two-point stabiliser", true, abelian_pair);

        if (!cg.split_px) {
            // two of the exceptional graphs beat the general cost bound;
            // their exact costs are frozen from exhaustive search
            std::size_t bound = 3;
            if (cg.name == "Heawood") bound = 5;
            if (cg.name == "TutteCoxeter") bound = 4;
            auto x = min_asymmetric_set(aut);
            if (x && !x->empty())
                add(r, cg.name + " distinguishing cost", "<= " + str(bound),
                    x->size() <= bound ? "<= " + str(bound) : str(x->size()));
        }
    }

    {
        Graph prism = circular_ladder(3);
        add(r, "prism distinguishing number", "2", str(distinguishing_number(prism)));
        auto cost = distinguishing_cost(prism);
        add(r, "prism distinguishing cost", "3", cost ? str(*cost) : "none");
    }
    {
        auto cost = distinguishing_cost(spx_graph(6, 1));
        add_bool(r, "sC(6,1) distinguishing cost > 3", true, cost && *cost > 3);
    }
    return r;
}

// ------------------------------------------------------------------ fpr

SuiteResult suite_fpr(std::uint64_t seed) {
    SuiteResult r{"fpr", {}};
    // group generation is deterministic; the external seed only shuffles the
    // element sample, so pass/fail cannot depend on it
    std::mt19937_64 gen_rng(0x9e3779b97f4a7c15ull);
    std::mt19937_64 sample_rng(seed);

    int built = 0;
    while (built < 20) {
        const int d = 5 + static_cast<int>(gen_rng() % 26);
        std::vector<Perm> gens;
        for (int k = 0; k < 2; ++k) {
            std::vector<int> im(d);
            for (int i = 0; i < d; ++i) im[i] = i;
            std::shuffle(im.begin(), im.end(), gen_rng);
            gens.push_back(Perm::from_images(std::move(im)));
        }
        PermGroup g = PermGroup::from_generators(gens);
        if (!g.is_transitive()) continue;
        ++built;

        std::vector<Perm> sample = g.generators();
        if (g.order() <= 20000) {
            sample = g.elements();
        } else {
            Perm w(d);
            for (int k = 0; k < 30; ++k) {
                w = w * gens[sample_rng() % gens.size()];
                sample.push_back(w);
            }
        }

        int tested = 0, passed = 0;
        for (const Perm& x : sample) {
            if (x.is_identity()) continue;
            try {
                ++tested;
                if (fpr_identity_holds(g, x, 5000)) ++passed;
            } catch (const error&) {
                --tested;  // class larger than the cap, out of scope
            }
        }
        add(r, "group " + str(built) + " deg " + str(d) + " fpr identity",
            str(tested) + " pass", str(passed) + " pass");
    }
    return r;
}

// -------------------------------------------------------------- closure

SuiteResult suite_closure(std::uint64_t seed) {
    SuiteResult r{"closure", {}};
    std::mt19937_64 rng(seed);

    auto corpus = graph_corpus(true);
    const std::map<std::string, std::string> known_exceptional = {
        {"circular_ladder(4)", "Cube"},
        {"moebius_ladder(2)", "K4"},
        {"moebius_ladder(3)", "K3_3"},
    };

    for (const CorpusGraph& cg : corpus) {
        std::string expected, computed;
        bool is_t1 = false;
        for (const Table1Row& row : kTable1) is_t1 |= cg.name == row.name;
        if (is_t1)
            expected = "Exceptional(" + cg.name + ")";
        else if (known_exceptional.count(cg.name))
            expected = "Exceptional(" + known_exceptional.at(cg.name) + ")";
        else if (cg.split_px) {
            int rr = 0, s = 0;
            std::sscanf(cg.name.c_str(), "sC(%d,%d)", &rr, &s);
            expected = 2 * s < rr ? "SplitPX(" + str(rr) + "," + str(s) + ")"
                                  : "base<=2";
        } else {
            expected = "base<=2";
        }

        try {
            ClassificationReport rep = classify(cg.graph);
            switch (rep.verdict) {
                case Verdict::Exceptional:
                    computed = "Exceptional(" + rep.exceptional_name + ")";
                    break;
                case Verdict::SplitPX:
                    computed = "SplitPX(" + str(rep.r) + "," + str(rep.s) + ")";
                    break;
                case Verdict::BaseSizeAtMost2: {
                    PermGroup aut = automorphism_group(cg.graph);
                    bool ok = rep.base_witness.size() <= 2 &&
                              aut.pointwise_stabiliser(rep.base_witness).is_trivial();
                    computed = ok ? "base<=2" : "base<=2 with bad witness";
                    break;
                }
            }
        } catch (const error& e) {
            computed = std::string("error: ") + e.what();
        }
        add(r, cg.name + " verdict", expected, computed);

        // verdicts survive relabelling
        if (cg.graph.num_vertices() <= 100) {
            std::vector<int> im(cg.graph.num_vertices());
            for (std::size_t i = 0; i < im.size(); ++i) im[i] = static_cast<int>(i);
            std::shuffle(im.begin(), im.end(), rng);
            ClassificationReport rep =
                classify(cg.graph.relabelled(Perm::from_images(im)));
            std::string shuffled;
            switch (rep.verdict) {
                case Verdict::Exceptional:
                    shuffled = "Exceptional(" + rep.exceptional_name + ")";
                    break;
                case Verdict::SplitPX:
                    shuffled = "SplitPX(" + str(rep.r) + "," + str(rep.s) + ")";
                    break;
                case Verdict::BaseSizeAtMost2:
                    shuffled = "base<=2";
                    break;
            }
            add(r, cg.name + " verdict after relabelling", expected, shuffled);
        }
    }
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "table1", "px-sweep",   "spx-sweep",   "splitmerge", "star",
        "colourings", "corollaries", "fpr", "closure", "all"};
    return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed) {
    if (name == "table1") return suite_table1();
    if (name == "px-sweep") return suite_px_sweep();
    if (name == "spx-sweep") return suite_spx_sweep();
    if (name == "splitmerge") return suite_splitmerge();
    if (name == "star") return suite_star();
    if (name == "colourings") return suite_colourings();
    if (name == "corollaries") return suite_corollaries();
    if (name == "fpr") return suite_fpr(seed);
    if (name == "closure") return suite_closure(seed);
    if (name == "all") {
        SuiteResult all{"all", {}};
        for (const char* s : {"table1", "px-sweep", "spx-sweep", "splitmerge",
                              "star", "colourings", "corollaries"}) {
            SuiteResult sub = run_suite(s, seed);
            for (Check& c : sub.checks) {
                c.name = sub.suite + ": " + c.name;
                all.checks.push_back(std::move(c));
            }
        }
        return all;
    }
    throw error("unknown suite: " + name);
}

}  // namespace cubicbase
