#include "evencover/gf2.hpp"

#include <bit>
#include <map>

namespace evencover::gf2 {

GF2Vector GF2Vector::from_support(size_t len, const VertexSet& support) {
    GF2Vector v(len);
    for (Vertex x : support) {
        check(x < len, "gf2: support element out of range");
        v.flip(x);
    }
    return v;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
    check(len_ == o.len_, "gf2: length mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool GF2Vector::is_zero() const {
    for (uint64_t w : w_)
        if (w) return false;
    return true;
}

int GF2Vector::lowest_set_bit() const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return (int)(i * 64 + std::countr_zero(w_[i]));
    return -1;
}

size_t GF2Vector::popcount() const {
    size_t c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
}

VertexSet GF2Vector::support() const {
    VertexSet s;
    for (size_t i = 0; i < len_; ++i)
        if (get(i)) s.push_back((Vertex)i);
    return s;
}

GF2Matrix GF2Matrix::from_rows(std::vector<GF2Vector> rows) {
    GF2Matrix m;
    if (!rows.empty()) m.cols = rows[0].size();
    for (const auto& r : rows) check(r.size() == m.cols, "gf2: ragged rows");
    m.rows = std::move(rows);
    return m;
}

GF2Matrix GF2Matrix::from_edges(const Hypergraph& h) {
    std::vector<GF2Vector> rows;
    rows.reserve(h.edges.size());
    for (const auto& e : h.edges) rows.push_back(GF2Vector::from_support(h.n, e));
    GF2Matrix m;
    m.cols = h.n;
    m.rows = std::move(rows);
    return m;
}

int rank(const GF2Matrix& m) {
    std::map<int, GF2Vector> basis;  // pivot -> reduced row
    int r = 0;
    for (GF2Vector v : m.rows) {
        int p;
        while ((p = v.lowest_set_bit()) != -1) {
            auto it = basis.find(p);
            if (it == basis.end()) break;
            v ^= it->second;
        }
        if (p != -1) {
            basis.emplace(p, std::move(v));
            ++r;
        }
    }
    return r;
}

std::vector<GF2Vector> kernel_basis(const GF2Matrix& m) {
    // Column elimination: track, for each column of M, the combination of
    // original columns it represents; zero columns yield kernel vectors.
    const size_t nc = m.cols;
    std::vector<GF2Vector> col(nc), combo(nc);
    for (size_t c = 0; c < nc; ++c) {
        col[c] = GF2Vector(m.rows.size());
        for (size_t r = 0; r < m.rows.size(); ++r)
            if (m.rows[r].get(c)) col[c].flip(r);
        combo[c] = GF2Vector(nc);
        combo[c].flip(c);
    }
    std::vector<GF2Vector> kernel;
    std::map<int, size_t> pivot_col;
    for (size_t c = 0; c < nc; ++c) {
        int p;
        while ((p = col[c].lowest_set_bit()) != -1) {
            auto it = pivot_col.find(p);
            if (it == pivot_col.end()) break;
            col[c] ^= col[it->second];
            combo[c] ^= combo[it->second];
        }
        if (p == -1)
            kernel.push_back(combo[c]);
        else
            pivot_col.emplace(p, c);
    }
    return kernel;
}

std::optional<EvenCover> find_dependency(const Hypergraph& h) {
    std::map<int, std::pair<GF2Vector, GF2Vector>> basis;  // pivot -> (row, combo over edges)
    const size_t m = h.edges.size();
    for (size_t i = 0; i < m; ++i) {
        GF2Vector v = GF2Vector::from_support(h.n, h.edges[i]);
        GF2Vector combo(m);
        combo.flip(i);
        int p;
        while ((p = v.lowest_set_bit()) != -1) {
            auto it = basis.find(p);
            if (it == basis.end()) break;
            v ^= it->second.first;
            combo ^= it->second.second;
        }
        if (p == -1) {
            EvenCover c;
            for (Vertex e : combo.support()) c.edges.push_back((EdgeIndex)e);
            return c;
        }
        basis.emplace(p, std::make_pair(std::move(v), std::move(combo)));
    }
    return std::nullopt;
}

namespace {

// Depth-first enumeration over index subsets in (size, lex) order with an
// incremental XOR accumulator.
template <typename Fn>
void scan_covers(const Hypergraph& h, int max_size, Fn&& on_cover) {
    const int m = h.edge_count();
    std::vector<GF2Vector> vecs;
    vecs.reserve(m);
    for (const auto& e : h.edges) vecs.push_back(GF2Vector::from_support(h.n, e));
    std::vector<EdgeIndex> chosen;
    GF2Vector acc(h.n);
    auto rec = [&](auto&& self, int start, int remaining) -> bool {
        if (remaining == 0) return acc.is_zero() ? on_cover(chosen) : false;
        for (int i = start; i <= m - remaining; ++i) {
            chosen.push_back(i);
            acc ^= vecs[i];
            if (self(self, i + 1, remaining - 1)) return true;
            acc ^= vecs[i];
            chosen.pop_back();
        }
        return false;
    };
    for (int size = 1; size <= std::min(max_size, m); ++size)
        if (rec(rec, 0, size)) return;
}

}  // namespace

std::optional<EvenCover> min_weight_cover_bruteforce(const Hypergraph& h, int max_size) {
    check(h.edge_count() <= 24 || max_size <= 6,
          "min_weight_cover_bruteforce: guard violated (e(h) <= 24 or max_size <= 6)");
    std::optional<EvenCover> found;
    scan_covers(h, max_size, [&](const std::vector<EdgeIndex>& c) {
        found = EvenCover{c};
        return true;  // first hit in (size, lex) order is the answer
    });
    return found;
}

std::vector<EvenCover> enumerate_even_covers(const Hypergraph& h, int max_size) {
    check(h.edge_count() <= 24 || max_size <= 6,
          "enumerate_even_covers: guard violated (e(h) <= 24 or max_size <= 6)");
    std::vector<EvenCover> out;
    scan_covers(h, max_size, [&](const std::vector<EdgeIndex>& c) {
        out.push_back(EvenCover{c});
        return false;
    });
    return out;
}

}  // namespace evencover::gf2
