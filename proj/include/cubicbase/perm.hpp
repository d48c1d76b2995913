#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cubicbase {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A permutation of {0..n-1}. We use the right-action convention throughout:
// points are written alpha^g, products compose left to right, so
// alpha^(gh) = (alpha^g)^h, and conjugation is x^g = g^-1 x g.
class Perm {
public:
    Perm() = default;

    explicit Perm(int n) : img_(n) {
        if (n < 1) throw error("Perm: degree must be at least 1");
        std::iota(img_.begin(), img_.end(), 0);
    }

    static Perm from_images(std::vector<int> images) {
        if (images.empty()) throw error("Perm: degree must be at least 1");
        std::vector<char> seen(images.size(), 0);
        for (int v : images) {
            if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
                throw error("Perm: images are not a bijection");
            seen[v] = 1;
        }
        Perm p;
        p.img_ = std::move(images);
        return p;
    }

    // Builds a permutation from disjoint cycles, e.g. {{0,1},{2,3,4}}.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        for (const auto& c : cycles) {
            for (std::size_t i = 0; i < c.size(); ++i) {
                int from = c[i], to = c[(i + 1) % c.size()];
                if (from < 0 || from >= n || img[from] != from)
                    throw error("Perm: bad cycle notation");
                img[from] = to;
            }
        }
        return from_images(std::move(img));
    }

    int degree() const { return static_cast<int>(img_.size()); }

    // Image of a point under the permutation.
    int operator[](int point) const { return img_[point]; }

    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < degree(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    // (*this) followed by other:  i^(pq) = (i^p)^q.
    Perm operator*(const Perm& other) const {
        if (degree() != other.degree()) throw error("Perm: degree mismatch");
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < degree(); ++i) r.img_[i] = other.img_[img_[i]];
        return r;
    }

    Perm inverse() const {
        Perm r;
        r.img_.resize(img_.size());
        for (int i = 0; i < degree(); ++i) r.img_[img_[i]] = i;
        return r;
    }

    bool operator==(const Perm& other) const { return img_ == other.img_; }
    bool operator!=(const Perm& other) const { return img_ != other.img_; }
    bool operator<(const Perm& other) const { return img_ < other.img_; }

    std::uint64_t order() const {
        std::vector<char> seen(img_.size(), 0);
        std::uint64_t ord = 1;
        for (int i = 0; i < degree(); ++i) {
            if (seen[i]) continue;
            std::uint64_t len = 0;
            for (int j = i; !seen[j]; j = img_[j]) {
                seen[j] = 1;
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::vector<int> fixed_points() const {
        std::vector<int> fix;
        for (int i = 0; i < degree(); ++i)
            if (img_[i] == i) fix.push_back(i);
        return fix;
    }

    int num_fixed_points() const {
        int c = 0;
        for (int i = 0; i < degree(); ++i)
            if (img_[i] == i) ++c;
        return c;
    }

    std::string cycle_string() const;

private:
    std::vector<int> img_;
};

// x^g = g^-1 x g.
inline Perm conjugated(const Perm& x, const Perm& g) { return g.inverse() * x * g; }

// [x,g] = x^-1 x^g.
inline Perm commutator(const Perm& x, const Perm& g) {
    return x.inverse() * g.inverse() * x * g;
}

struct PermHash {
    std::size_t operator()(const Perm& p) const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v : p.images()) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace cubicbase
