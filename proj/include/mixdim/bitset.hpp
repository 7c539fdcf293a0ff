#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mixdim {

// Fixed-capacity vertex subset. 128 bits covers every instance the exact
// solver accepts; graphs themselves are not capacity-limited.
class VertexSet {
public:
    static constexpr int kCapacity = 128;

    VertexSet() = default;

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.insert(v);
        return s;
    }

    void insert(int v) { w_[word(v)] |= bit(v); }
    void erase(int v) { w_[word(v)] &= ~bit(v); }
    bool contains(int v) const { return (w_[word(v)] & bit(v)) != 0; }

    int size() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return w_[0] == 0 && w_[1] == 0; }

    bool intersects(const VertexSet& o) const {
        return (w_[0] & o.w_[0]) != 0 || (w_[1] & o.w_[1]) != 0;
    }
    bool is_subset_of(const VertexSet& o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }

    VertexSet& operator|=(const VertexSet& o) {
        w_[0] |= o.w_[0];
        w_[1] |= o.w_[1];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        w_[0] &= o.w_[0];
        w_[1] &= o.w_[1];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }

    VertexSet minus(const VertexSet& o) const {
        VertexSet s;
        s.w_[0] = w_[0] & ~o.w_[0];
        s.w_[1] = w_[1] & ~o.w_[1];
        return s;
    }

    // First member, or -1 when empty.
    int first() const {
        if (w_[0] != 0) return std::countr_zero(w_[0]);
        if (w_[1] != 0) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    // First member strictly greater than v, or -1.
    int next(int v) const {
        int i = v + 1;
        if (i >= kCapacity) return -1;
        if (i < 64) {
            std::uint64_t rest = w_[0] >> i;
            if (rest != 0) return i + std::countr_zero(rest);
            i = 64;
        }
        std::uint64_t rest = w_[1] >> (i - 64);
        if (rest != 0) return i + std::countr_zero(rest);
        return -1;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
        return out;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    std::uint64_t hash() const {
        std::uint64_t h = w_[0] * 0x9e3779b97f4a7c15ull;
        h ^= w_[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }

private:
    static int word(int v) { return v >> 6; }
    static std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }

    std::array<std::uint64_t, 2> w_{};
};

}  // namespace mixdim
