#include "cubicbase/graph6.hpp"

#include <algorithm>

namespace cubicbase {

namespace {

class BitWriter {
public:
    void put(int bit) {
        cur_ = (cur_ << 1) | (bit & 1);
        if (++nbits_ == 6) flush_chunk();
    }

    void put_bits(unsigned value, int width) {
        for (int i = width - 1; i >= 0; --i) put((value >> i) & 1);
    }

    // pads the final chunk with the given bit
    std::string finish(int pad_bit) {
        while (nbits_ != 0) put(pad_bit);
        return out_;
    }

    int pending_bits() const { return nbits_; }

private:
    void flush_chunk() {
        out_ += static_cast<char>(cur_ + 63);
        cur_ = 0;
        nbits_ = 0;
    }

    std::string out_;
    unsigned cur_ = 0;
    int nbits_ = 0;
};

class BitReader {
public:
    BitReader(const std::string& s, std::size_t start) : s_(s), pos_(start) {}

    // -1 on exhaustion
    int get() {
        if (nbits_ == 0) {
            if (pos_ >= s_.size()) return -1;
            const char c = s_[pos_++];
            if (c < 63 || c > 126) throw error("graph6: byte out of range");
            cur_ = static_cast<unsigned>(c - 63);
            nbits_ = 6;
        }
        --nbits_;
        return (cur_ >> nbits_) & 1;
    }

    // -1 when not enough bits remain
    long get_bits(int width) {
        long v = 0;
        for (int i = 0; i < width; ++i) {
            int b = get();
            if (b < 0) return -1;
            v = (v << 1) | b;
        }
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_;
    unsigned cur_ = 0;
    int nbits_ = 0;
};

std::string encode_n(int n) {
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else if (n <= 258047) {
        out += 126;
        for (int shift = 12; shift >= 0; shift -= 6)
            out += static_cast<char>(((n >> shift) & 63) + 63);
    } else {
        out += 126;
        out += 126;
        for (int shift = 30; shift >= 0; shift -= 6)
            out += static_cast<char>(((static_cast<long>(n) >> shift) & 63) + 63);
    }
    return out;
}

int decode_n(const std::string& s, std::size_t& pos) {
    auto byte = [&](std::size_t i) -> int {
        if (i >= s.size()) throw error("graph6: truncated size field");
        const char c = s[i];
        if (c < 63 || c > 126) throw error("graph6: byte out of range");
        return c - 63;
    };
    if (byte(pos) != 63) return byte(pos++);
    ++pos;
    if (byte(pos) != 63) {
        int n = 0;
        for (int i = 0; i < 3; ++i) n = (n << 6) | byte(pos++);
        return n;
    }
    ++pos;
    long n = 0;
    for (int i = 0; i < 6; ++i) n = (n << 6) | byte(pos++);
    if (n > 1000000) throw error("graph6: size too large");
    return static_cast<int>(n);
}

int word_size(int n) {
    int k = 1;
    while ((1 << k) < n - 1 + 1) ++k;  // bits needed to represent n-1
    return k;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

std::string to_graph6(const Graph& g) {
    const int n = g.num_vertices();
    std::string out = encode_n(n);
    BitWriter bw;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bw.put(g.adjacent(u, v) ? 1 : 0);
    out += bw.finish(0);
    return out;
}

std::string to_sparse6(const Graph& g) {
    const int n = g.num_vertices();
    std::string out = ":";
    out += encode_n(n);
    if (n == 0) return out;
    const int k = word_size(n);

    auto es = g.edges();
    // order by larger endpoint, then smaller
    std::sort(es.begin(), es.end(), [](auto a, auto b) {
        return std::pair(a.second, a.first) < std::pair(b.second, b.first);
    });

    BitWriter bw;
    int v = 0;
    for (auto [u, w] : es) {
        if (w == v) {
            bw.put(0);
            bw.put_bits(static_cast<unsigned>(u), k);
        } else if (w == v + 1) {
            v = w;
            bw.put(1);
            bw.put_bits(static_cast<unsigned>(u), k);
        } else {
            v = w;
            bw.put(1);
            bw.put_bits(static_cast<unsigned>(w), k);
            bw.put(0);
            bw.put_bits(static_cast<unsigned>(u), k);
        }
    }

    // Pad with 1s; when n is a power of two and more than k bits of padding
    // are needed, lead with a single 0 so the padding cannot be read as an
    // extra edge.
    const int pending = bw.pending_bits();
    const int pad = pending == 0 ? 0 : 6 - pending;
    if (pad > 0 && k < 6 && is_power_of_two(n) && pad > k) bw.put(0);
    out += bw.finish(1);
    return out;
}

Graph from_graph6_line(const std::string& raw) {
    std::string line = raw;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line = line.substr(10);
    else if (line.rfind(">>sparse6<<", 0) == 0) line = line.substr(11);
    if (line.empty()) throw error("graph6: empty line");

    if (line[0] == ':') {
        std::size_t pos = 1;
        const int n = decode_n(line, pos);
        if (n == 0) return Graph::from_edges(0, {});
        const int k = word_size(n);
        BitReader br(line, pos);
        std::vector<std::pair<int, int>> edges;
        int v = 0;
        while (true) {
            const int b = br.get();
            if (b < 0) break;
            const long x = br.get_bits(k);
            if (x < 0) break;
            if (b == 1) ++v;
            if (v >= n) break;
            if (x > v) {
                v = static_cast<int>(x);
            } else if (x < v) {
                edges.emplace_back(static_cast<int>(x), v);
            } else {
                // x == v would be a loop; treat as padding end
                break;
            }
        }
        return Graph::from_edges(n, edges);
    }

    std::size_t pos = 0;
    const int n = decode_n(line, pos);
    BitReader br(line, pos);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            const int b = br.get();
            if (b < 0) throw error("graph6: truncated adjacency bits");
            if (b) edges.emplace_back(u, v);
        }
    return Graph::from_edges(n, edges);
}

}  // namespace cubicbase
