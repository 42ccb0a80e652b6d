#ifndef HPLANAR_VERTEX_SET_HPP
#define HPLANAR_VERTEX_SET_HPP

#include <cassert>
#include <cstdint>
#include <functional>
#include <vector>

namespace hplanar {

// Subset of a dense 0-based vertex index space, stored as a bitset.
// Universe size is fixed at construction; set operations require equal
// universes.
class VertexSet {
public:
    VertexSet() : n_(0) {}
    explicit VertexSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }
    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.add(v);
        return s;
    }

    int universe() const { return n_; }
    bool contains(int v) const {
        assert(v >= 0 && v < n_);
        return (w_[v >> 6] >> (v & 63)) & 1;
    }
    void add(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] |= uint64_t(1) << (v & 63);
    }
    void remove(int v) {
        assert(v >= 0 && v < n_);
        w_[v >> 6] &= ~(uint64_t(1) << (v & 63));
    }

    int count() const {
        int c = 0;
        for (uint64_t w : w_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    // First member, or -1.
    int first() const {
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return int(i * 64 + __builtin_ctzll(w_[i]));
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (size_t i = 0; i < w_.size(); ++i) {
            uint64_t w = w_[i];
            while (w) {
                int b = __builtin_ctzll(w);
                f(int(i * 64 + b));
                w &= w - 1;
            }
        }
    }

    VertexSet operator|(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    VertexSet operator&(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator-(const VertexSet& o) const { return zip(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    VertexSet complement() const {
        VertexSet r = *this;
        for (auto& w : r.w_) w = ~w;
        r.trim();
        return r;
    }

    bool intersects(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }
    bool subset_of(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = 0; i < w_.size(); ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

    // Total order used for deterministic tie-breaking: value of the bitset
    // read as a little-endian integer (so {0,1,2,3} precedes {0,1,2,4}).
    bool operator<(const VertexSet& o) const {
        assert(n_ == o.n_);
        for (size_t i = w_.size(); i-- > 0;)
            if (w_[i] != o.w_[i]) return w_[i] < o.w_[i];
        return false;
    }

    size_t hash() const {
        size_t h = std::hash<int>()(n_);
        for (uint64_t w : w_) h = h * 0x9e3779b97f4a7c15ULL + std::hash<uint64_t>()(w);
        return h;
    }

private:
    template <typename Op>
    VertexSet zip(const VertexSet& o, Op op) const {
        assert(n_ == o.n_);
        VertexSet r(n_);
        for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = op(w_[i], o.w_[i]);
        return r;
    }
    void trim() {
        if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (uint64_t(1) << (n_ % 64)) - 1;
    }

    int n_;
    std::vector<uint64_t> w_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const { return s.hash(); }
};

// Calls f(subset) for every subset of the given elements (2^k calls, k <= 62).
template <typename F>
void for_each_subset(int universe, const std::vector<int>& elems, F&& f) {
    assert(elems.size() <= 62);
    uint64_t top = uint64_t(1) << elems.size();
    for (uint64_t mask = 0; mask < top; ++mask) {
        VertexSet s(universe);
        for (size_t i = 0; i < elems.size(); ++i)
            if ((mask >> i) & 1) s.add(elems[i]);
        f(s);
    }
}

// Calls f for every subset of the given elements of size exactly k, in
// lexicographic order of the index combination.
template <typename F>
void for_each_subset_of_size(int universe, const std::vector<int>& elems, int k, F&& f) {
    int m = int(elems.size());
    if (k > m) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        VertexSet s(universe);
        for (int i : idx) s.add(elems[i]);
        if (f(s)) return;  // f returns true to stop early
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace hplanar

#endif
