#pragma once

#include <optional>
#include <vector>

#include "evencover/hypergraph.hpp"

namespace evencover::gf2 {

// Fixed-length bit vector, packed into 64-bit words.
class GF2Vector {
  public:
    GF2Vector() = default;
    explicit GF2Vector(size_t len) : len_(len), w_((len + 63) / 64, 0) {}

    static GF2Vector from_support(size_t len, const VertexSet& support);

    size_t size() const { return len_; }
    bool get(size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
    void set(size_t i, bool v) {
        uint64_t mask = 1ULL << (i % 64);
        if (v)
            w_[i / 64] |= mask;
        else
            w_[i / 64] &= ~mask;
    }
    void flip(size_t i) { w_[i / 64] ^= 1ULL << (i % 64); }

    GF2Vector& operator^=(const GF2Vector& o);
    bool is_zero() const;
    int lowest_set_bit() const;  // -1 if zero
    size_t popcount() const;
    VertexSet support() const;

    bool operator==(const GF2Vector&) const = default;

  private:
    size_t len_ = 0;
    std::vector<uint64_t> w_;
};

struct GF2Matrix {
    size_t cols = 0;
    std::vector<GF2Vector> rows;

    static GF2Matrix from_rows(std::vector<GF2Vector> rows);
    static GF2Matrix from_edges(const Hypergraph& h);  // one row per edge, n columns
};

int rank(const GF2Matrix& m);

// Basis of {x : M x = 0}; each vector has m.cols bits.
std::vector<GF2Vector> kernel_basis(const GF2Matrix& m);

// First linear dependency among edge vectors, processed in index order with
// lowest-pivot-first elimination; the combination history makes the result a
// certificate. With e(h) >= n+1 a dependency always exists.
std::optional<EvenCover> find_dependency(const Hypergraph& h);

// Minimum-cardinality nonempty even cover of size <= max_size by exhaustive
// enumeration, smallest index set on ties. Guard: e(h) <= 24 or max_size <= 6.
std::optional<EvenCover> min_weight_cover_bruteforce(const Hypergraph& h, int max_size);

// All nonempty even covers of size <= max_size (same guard).
std::vector<EvenCover> enumerate_even_covers(const Hypergraph& h, int max_size);

}  // namespace evencover::gf2
