#pragma once

#include <optional>
#include <string>

#include "cubicbase/graph.hpp"
#include "cubicbase/groupops.hpp"
#include "cubicbase/permgroup.hpp"

namespace cubicbase {

struct BaseSizeResult {
    int size;
    std::vector<int> witness;
};

// Exact minimal base size, iterative deepening with orbit-representative
// pruning. Throws when degree or order exceed the caps.
BaseSizeResult base_size(const PermGroup& g, int degree_cap = 4200,
                         const BigInt& order_cap = BigInt(10000000));

struct BaseLe2Result {
    bool holds;
    std::vector<int> witness;  // empty, one, or two points when holds
};

// Fixes the first point by transitivity and scans the second.
BaseLe2Result has_base_le2(const PermGroup& g);

enum class Verdict { Exceptional, SplitPX, BaseSizeAtMost2 };

struct ClassificationReport {
    Verdict verdict;
    std::string exceptional_name;    // Exceptional only
    int r = 0, s = 0;                // SplitPX only
    std::vector<int> base_witness;   // BaseSizeAtMost2 only
    int base_size = 0;
    BigInt aut_order;
};

// The trichotomy decision for a connected cubic vertex-transitive graph.
ClassificationReport classify(const Graph& gamma);

// Recognises split Praeger-Xu graphs by trying every factorization
// |V| = 2r*2^s and testing isomorphism, r then s ascending.
std::optional<std::pair<int, int>> is_split_px(const Graph& gamma);

struct Colouring {
    std::vector<int> colours;
    int num_colours() const;
};

int distinguishing_number(const Graph& gamma);
// Minimum colour class size among asymmetric 2-colourings; empty when the
// distinguishing number is not 2.
std::optional<int> distinguishing_cost(const Graph& gamma);

// Smallest subset of the domain with trivial setwise stabiliser, sizes
// ascending; empty result when none exists.
std::optional<std::vector<int>> min_asymmetric_set(const PermGroup& g,
                                                   std::size_t cap = 1u << 22);

// A subset with trivial setwise stabiliser for a transitive 2-group of class
// at most 2, with |X| < degree/2 when degree > 8. Throws on the dihedral
// degree-4 exception and on hypothesis violations.
std::vector<int> asymmetric_set(const PermGroup& p);

// Three pairwise inequivalent colourings with at most 3 colours, each
// preserved only by the identity, for an arbitrary permutation 2-group.
std::vector<Colouring> asymmetric_3colourings(const PermGroup& p);

struct StarWitness {
    std::vector<Perm> t;
    bool satisfied;       // found 3 with pairwise distinct double cosets
    bool any_witness;     // found at least one t with trivial intersection
};

// Scans t in T for P meet P^t = 1 and greedily collects double-coset
// distinct representatives.
StarWitness star_check(const PermGroup& g, const PermGroup& t_group,
                       const PermGroup& p, std::size_t cap = 50000);

struct StabiliserStructure {
    bool arc_transitive;
    BigInt stabiliser_order;
    bool divides_48;       // arc-transitive case
    bool is_2_group;       // non-arc-transitive case
    int nilpotency_class;  // non-arc-transitive case
    std::uint64_t exponent;
    bool pass;
};

StabiliserStructure stabiliser_structure_report(const Graph& gamma);

}  // namespace cubicbase
