#include "evencover/hypergraph.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace evencover {

Hypergraph Hypergraph::create(int n, int k, std::vector<VertexSet> edges, bool multi) {
    check(n >= 0, "hypergraph: negative n");
    check(k >= 1, "hypergraph: k must be >= 1");
    std::set<VertexSet> seen;
    for (auto& e : edges) {
        check((int)e.size() == k, "hypergraph: edge arity != k");
        VertexSet s = e;
        std::sort(s.begin(), s.end());
        check(std::adjacent_find(s.begin(), s.end()) == s.end(),
              "hypergraph: repeated vertex in edge");
        check(s.back() < (Vertex)n, "hypergraph: vertex id out of range");
        e = std::move(s);
        if (!multi) check(seen.insert(e).second, "hypergraph: duplicate edge with multi=false");
    }
    Hypergraph h;
    h.n = n;
    h.k = k;
    h.multi = multi;
    h.edges = std::move(edges);
    return h;
}

const VertexSet& Hypergraph::edge(EdgeIndex i) const {
    check(i >= 0 && i < (EdgeIndex)edges.size(), "hypergraph: edge index out of range");
    return edges[i];
}

std::vector<int> Hypergraph::degrees() const {
    std::vector<int> d(n, 0);
    for (const auto& e : edges)
        for (Vertex v : e) ++d[v];
    return d;
}

uint32_t ColoredHypergraph::color_count() const {
    uint32_t c = 0;
    for (uint32_t x : colors) c = std::max(c, x + 1);
    return c;
}

bool properly_colored(const ColoredHypergraph& h) {
    if (!h.is_colored()) return false;
    std::set<std::pair<Vertex, uint32_t>> seen;
    for (size_t i = 0; i < h.base.edges.size(); ++i)
        for (Vertex v : h.base.edges[i])
            if (!seen.insert({v, h.colors[i]}).second) return false;
    return true;
}

ColoredHypergraph color_by_index(const Hypergraph& h) {
    ColoredHypergraph ch;
    ch.base = h;
    ch.colors.resize(h.edges.size());
    for (size_t i = 0; i < h.edges.size(); ++i) ch.colors[i] = (uint32_t)i;
    return ch;
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(out));
    return out;
}

bool verify_even_cover(const Hypergraph& h, const EvenCover& c) {
    std::vector<uint8_t> parity(h.n, 0);
    for (EdgeIndex i : c.edges)
        for (Vertex v : h.edge(i)) parity[v] ^= 1;
    for (uint8_t p : parity)
        if (p) return false;
    return true;
}

int codegree(const Hypergraph& h, const VertexSet& s) {
    for (Vertex v : s) check(v < (Vertex)h.n, "codegree: vertex out of range");
    int c = 0;
    for (const auto& e : h.edges)
        if (sorted_contains(e, s)) ++c;
    return c;
}

int BucketDecomposition::covered() const {
    int c = 0;
    for (const auto& b : buckets) c += (int)b.members.size();
    return c;
}

bool valid_decomposition(const Hypergraph& h, const BucketDecomposition& d) {
    std::set<EdgeIndex> used;
    for (const auto& b : d.buckets) {
        if ((int)b.core.size() != d.t) return false;
        if ((int)b.members.size() != d.m) return false;
        for (EdgeIndex i : b.members) {
            if (i < 0 || i >= h.edge_count()) return false;
            if (!used.insert(i).second) return false;
            if (!sorted_contains(h.edge(i), b.core)) return false;
        }
    }
    return true;
}

std::pair<Hypergraph, std::vector<EdgeIndex>> sub_hypergraph(const Hypergraph& h,
                                                             const std::vector<EdgeIndex>& keep) {
    Hypergraph sub;
    sub.n = h.n;
    sub.k = h.k;
    sub.multi = h.multi;
    std::vector<EdgeIndex> origin;
    origin.reserve(keep.size());
    for (EdgeIndex i : keep) {
        sub.edges.push_back(h.edge(i));
        origin.push_back(i);
    }
    return {std::move(sub), std::move(origin)};
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    std::string s = pos == std::string::npos ? line : line.substr(0, pos);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    return s;
}

}  // namespace

ColoredHypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        std::string s = strip_comment(line);
        if (!s.empty()) lines.push_back(s);
    }
    check(!lines.empty(), "hg: empty file");

    std::istringstream head(lines[0]);
    long long n = -1, k = -1, m = -1;
    check(bool(head >> n >> k >> m), "hg: malformed header");
    check(n >= 0 && k >= 1 && m >= 0, "hg: malformed header values");
    bool multi = false, colored = false;
    std::string word;
    while (head >> word) {
        if (word == "multi")
            multi = true;
        else if (word == "colored")
            colored = true;
        else
            check(false, "hg: unknown header flag '" + word + "'");
    }
    check((long long)lines.size() == m + 1, "hg: edge line count mismatch");

    std::vector<VertexSet> edges;
    std::vector<uint32_t> colors;
    for (long long i = 0; i < m; ++i) {
        std::istringstream ls(lines[1 + i]);
        VertexSet e;
        for (long long j = 0; j < k; ++j) {
            long long v;
            check(bool(ls >> v), "hg: wrong edge arity");
            check(v >= 0 && v < n, "hg: vertex id out of range");
            check(e.empty() || (Vertex)v > e.back(), "hg: vertex ids not increasing");
            e.push_back((Vertex)v);
        }
        std::string rest;
        if (ls >> rest) {
            check(colored, "hg: color on uncolored file");
            check(rest.rfind("c=", 0) == 0, "hg: expected c=<id>");
            colors.push_back((uint32_t)std::stoul(rest.substr(2)));
            check(!(ls >> rest), "hg: trailing tokens");
        } else {
            check(!colored, "hg: missing color on colored file");
        }
        edges.push_back(std::move(e));
    }

    ColoredHypergraph ch;
    ch.base = Hypergraph::create((int)n, (int)k, std::move(edges), multi);
    ch.colors = std::move(colors);
    return ch;
}

std::string format_hypergraph(const ColoredHypergraph& h) {
    std::ostringstream out;
    out << h.base.n << ' ' << h.base.k << ' ' << h.base.edge_count();
    if (h.base.multi) out << " multi";
    if (h.is_colored()) out << " colored";
    out << '\n';
    for (size_t i = 0; i < h.base.edges.size(); ++i) {
        const auto& e = h.base.edges[i];
        for (size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        if (h.is_colored()) out << " c=" << h.colors[i];
        out << '\n';
    }
    return out.str();
}

ColoredHypergraph load_hypergraph(const std::filesystem::path& path) {
    std::ifstream f(path);
    check(f.good(), "hg: cannot open " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_hypergraph(ss.str());
}

void store_hypergraph(const ColoredHypergraph& h, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    check(f.good(), "hg: cannot write " + path.string());
    f << format_hypergraph(h);
}

}  // namespace evencover
