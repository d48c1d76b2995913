#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <span>
#include <vector>

#include "cubicbase/perm.hpp"

namespace cubicbase {

using BigInt = boost::multiprecision::cpp_int;

// One level of a stabiliser chain: the generators fixing all earlier base
// points, the orbit of this level's base point under them, and a transversal.
struct ChainLevel {
    int base_point = -1;
    std::vector<Perm> gens;
    std::vector<int> orbit;               // discovery (BFS) order
    std::vector<int> orbit_pos;           // point -> index into orbit, or -1
    std::vector<Perm> transversal;        // transversal[i] maps base_point to orbit[i]
};

// A finite permutation group given by generators, backed by a base and strong
// generating set built with a deterministic Schreier-Sims. Immutable after
// construction.
class PermGroup {
public:
    // base_hint: preferred initial base points, in order.
    static PermGroup from_generators(std::vector<Perm> gens,
                                     std::vector<int> base_hint = {});
    static PermGroup trivial(int degree);

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    const BigInt& order() const { return order_; }
    bool is_trivial() const { return order_ == 1; }
    std::size_t order_as_size_t() const;

    bool contains(const Perm& g) const;

    std::vector<int> base() const;
    const std::vector<ChainLevel>& chain() const { return chain_; }

    std::vector<std::vector<int>> orbits() const;
    std::vector<int> orbit_of(int point) const;
    bool is_transitive() const;
    bool is_semiregular() const;

    PermGroup point_stabiliser(int point) const;
    PermGroup pointwise_stabiliser(std::span<const int> points) const;
    PermGroup setwise_stabiliser(const std::vector<int>& set) const;

    // All group elements in a deterministic order. Throws if order > cap.
    std::vector<Perm> elements(std::size_t cap = 1u << 22) const;

    // Sifts g through the chain; returns the residual (identity iff g in G).
    Perm sift(const Perm& g) const;

private:
    PermGroup() = default;

    int degree_ = 0;
    std::vector<Perm> gens_;
    std::vector<ChainLevel> chain_;
    BigInt order_ = 1;
};

}  // namespace cubicbase
