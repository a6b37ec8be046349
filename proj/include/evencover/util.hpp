#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace evencover {

using Vertex = uint32_t;
using VertexSet = std::vector<Vertex>;  // sorted, distinct
using EdgeIndex = int32_t;

inline void check(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Thin mt19937_64 wrapper. Bounded draws use rejection sampling so that the
// stream is reproducible independently of any distribution implementation.
class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t next() { return eng_(); }

    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound = 0");
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    bool coin() { return (eng_() >> 63) != 0; }

  private:
    std::mt19937_64 eng_;
};

// Exact binomial coefficient; saturates at UINT64_MAX on overflow.
inline uint64_t binom(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (unsigned __int128)UINT64_MAX) return UINT64_MAX;
    }
    return (uint64_t)r;
}

inline double log2_binom(uint64_t n, uint64_t k) {
    if (k > n) return -HUGE_VAL;
    return (std::lgamma((double)n + 1) - std::lgamma((double)k + 1) -
            std::lgamma((double)(n - k) + 1)) /
           std::log(2.0);
}

// Lexicographic successor of an r-combination of [0,n); false when exhausted.
inline bool next_combination(std::vector<uint32_t>& c, uint32_t n) {
    if (c.empty()) return false;
    const size_t r = c.size();
    size_t i = r;
    while (i > 0) {
        --i;
        if (c[i] < n - (uint32_t)(r - i)) {
            ++c[i];
            for (size_t j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline std::vector<uint32_t> first_combination(uint32_t r) {
    std::vector<uint32_t> c(r);
    for (uint32_t i = 0; i < r; ++i) c[i] = i;
    return c;
}

// Colexicographic rank of a sorted subset; inverse below.
inline uint64_t colex_rank(const std::vector<uint32_t>& s) {
    uint64_t r = 0;
    for (size_t i = 0; i < s.size(); ++i) r += binom(s[i], (uint64_t)i + 1);
    return r;
}

inline std::vector<uint32_t> colex_unrank(uint64_t rank, uint32_t l, uint32_t ground) {
    std::vector<uint32_t> s(l);
    uint32_t v = ground;
    for (uint32_t i = l; i > 0; --i) {
        uint32_t x = v;
        do {
            --x;
        } while (binom(x, i) > rank);
        s[i - 1] = x;
        rank -= binom(x, i);
        v = x;
    }
    return s;
}

struct VecHash {
    size_t operator()(const std::vector<uint32_t>& v) const {
        uint64_t h = 1469598103934665603ULL;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return (size_t)h;
    }
};

// Sorted-vector set helpers.
inline bool sorted_contains(const VertexSet& hay, const VertexSet& needle) {
    return std::includes(hay.begin(), hay.end(), needle.begin(), needle.end());
}

inline size_t intersection_size(const VertexSet& a, const VertexSet& b) {
    size_t i = 0, j = 0, c = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            ++i;
        else if (a[i] > b[j])
            ++j;
        else
            ++c, ++i, ++j;
    }
    return c;
}

inline VertexSet sorted_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline VertexSet sorted_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace evencover
