#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>

#include "cubicbase/permgroup.hpp"

namespace cubicbase {

using Rational = boost::multiprecision::cpp_rational;

// |Fix(x)| / degree, exact.
Rational fixed_point_ratio(const PermGroup& g, const Perm& x);

// Checks |Fix(x)|/|Omega| == |x^G meet G_alpha| / |x^G| by enumerating the
// conjugacy class of x. Throws if the class exceeds class_cap.
bool fpr_identity_holds(const PermGroup& g, const Perm& x, std::size_t class_cap = 5000);

// Number of orbits whose length equals |P|.
int regular_orbit_count(const PermGroup& p);

struct BlockSystem {
    std::vector<std::vector<int>> blocks;
    PermGroup block_action;
};

// Minimal block system whose block containing a also contains b, for a
// transitive group. Blocks of size degree mean the trivial one-block system.
BlockSystem block_system(const PermGroup& g, int a, int b);

// Faithless warning-free coset action of G on the right cosets of H.
PermGroup coset_action(const PermGroup& g, const PermGroup& h,
                       std::size_t cap = 1u << 20);

// Sylow 2-subgroup by normaliser climbing; requires |G| <= cap.
PermGroup sylow2(const PermGroup& g, std::size_t cap = 1000000);

// Lower-central-series length; 0 for the trivial group, 1 for abelian.
int nilpotency_class(const PermGroup& p, std::size_t cap = 1u << 16);
// Least common multiple of element orders.
std::uint64_t exponent(const PermGroup& p, std::size_t cap = 1u << 16);

// P^t = t^-1 P t.
PermGroup conjugate(const PermGroup& p, const Perm& t);

bool intersection_trivial(const PermGroup& p, const PermGroup& q,
                          std::size_t cap = 1u << 16);

// True iff t2 is not in the double coset P t1 P.
bool double_cosets_distinct(const PermGroup& p, const Perm& t1, const Perm& t2,
                            std::size_t cap = 1u << 16);

}  // namespace cubicbase
