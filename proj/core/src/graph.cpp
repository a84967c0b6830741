#include "mwpm/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mwpm {

Graph::Graph(int n) : n_(n), adj_(n) {
    MWPM_REQUIRE(n >= 0, "vertex count must be nonnegative");
}

int Graph::find_edge(int u, int v) const {
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    for (int e : a) {
        const Edge& ed = edges_[e];
        if ((ed.u == u && ed.v == v) || (ed.u == v && ed.v == u)) return e;
    }
    return kNone;
}

int Graph::add_edge(int u, int v, Weight w) {
    MWPM_REQUIRE(u >= 0 && u < n_ && v >= 0 && v < n_, "edge endpoint out of range");
    MWPM_REQUIRE(u != v, "self-loops are not allowed");
    MWPM_REQUIRE(w >= 0, "weights must be nonnegative");
    int e = find_edge(u, v);
    if (e != kNone) {
        edges_[e].w = std::max(edges_[e].w, w);
        return e;
    }
    e = static_cast<int>(edges_.size());
    edges_.push_back({u, v, w});
    adj_[u].push_back(e);
    adj_[v].push_back(e);
    return e;
}

Weight Graph::max_weight() const {
    Weight mx = 0;
    for (const Edge& e : edges_) mx = std::max(mx, e.w);
    return mx;
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        const Edge& x = a.edges_[i];
        const Edge& y = b.edges_[i];
        if (x.u != y.u || x.v != y.v || x.w != y.w) return false;
    }
    return true;
}

namespace {

long long parse_int(const std::string& tok, int line, const char* what) {
    std::size_t pos = 0;
    long long val = 0;
    try {
        val = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
    }
    if (pos != tok.size())
        throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line);
    return val;
}

}  // namespace

Graph load_dimacs(std::istream& in, const LoadOptions& opts) {
    std::string raw;
    int line = 0;
    bool have_header = false;
    long long n = 0, m = 0, seen = 0;
    Graph g;
    while (std::getline(in, raw)) {
        ++line;
        std::istringstream ls(raw);
        std::string kind;
        if (!(ls >> kind)) continue;
        if (kind == "c") continue;
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (kind == "p") {
            if (have_header) throw ParseError("duplicate header", line);
            if (tok.size() != 3 || tok[0] != "edge")
                throw ParseError("malformed header, expected 'p edge <n> <m>'", line);
            n = parse_int(tok[1], line, "vertex count");
            m = parse_int(tok[2], line, "edge count");
            if (n < 0 || m < 0) throw ParseError("negative count in header", line);
            if (n > (1 << 28)) throw ParseError("vertex count too large", line);
            if (n % 2 != 0 && !opts.allow_odd)
                throw ParseError("odd vertex count " + std::to_string(n) + " has no perfect matching", line);
            g = Graph(static_cast<int>(n));
            have_header = true;
        } else if (kind == "e") {
            if (!have_header) throw ParseError("edge line before header", line);
            if (tok.size() != 3) throw ParseError("malformed edge line, expected 'e <u> <v> <w>'", line);
            long long u = parse_int(tok[0], line, "endpoint");
            long long v = parse_int(tok[1], line, "endpoint");
            long long w = parse_int(tok[2], line, "weight");
            if (u < 1 || u > n) throw ParseError("vertex " + std::to_string(u) + " out of range", line);
            if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range", line);
            if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u), line);
            if (w < 0) throw ParseError("negative weight " + std::to_string(w), line);
            if (w > (Weight{1} << 40)) throw ParseError("weight too large", line);
            g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1), w);
            ++seen;
        } else {
            throw ParseError("unknown line type '" + kind + "'", line);
        }
    }
    if (!have_header) throw ParseError("missing 'p edge' header", line);
    if (seen != m)
        throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(seen),
                         line);
    return g;
}

Graph load_dimacs_file(const std::string& path, const LoadOptions& opts) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    return load_dimacs(in, opts);
}

Graph parse_dimacs(const std::string& text, const LoadOptions& opts) {
    std::istringstream in(text);
    return load_dimacs(in, opts);
}

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
    if (!comment.empty()) out << "c " << comment << '\n';
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << e.w << '\n';
}

void Matching::match(const Graph& g, int e) {
    const Edge& ed = g.edge(e);
    MWPM_REQUIRE(mate_[ed.u] == kNone && mate_[ed.v] == kNone, "endpoint already matched");
    mate_[ed.u] = e;
    mate_[ed.v] = e;
}

void Matching::unmatch(const Graph& g, int e) {
    const Edge& ed = g.edge(e);
    MWPM_REQUIRE(mate_[ed.u] == e && mate_[ed.v] == e, "edge is not matched");
    mate_[ed.u] = kNone;
    mate_[ed.v] = kNone;
}

std::vector<int> Matching::edges() const {
    std::vector<int> out;
    for (int e : mate_)
        if (e != kNone) out.push_back(e);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int Matching::cardinality() const { return static_cast<int>(edges().size()); }

bool Matching::is_perfect() const {
    return std::none_of(mate_.begin(), mate_.end(), [](int e) { return e == kNone; });
}

bool Matching::valid(const Graph& g) const {
    if (static_cast<int>(mate_.size()) != g.vertex_count()) return false;
    for (int v = 0; v < size(); ++v) {
        int e = mate_[v];
        if (e == kNone) continue;
        if (e < 0 || e >= g.edge_count()) return false;
        const Edge& ed = g.edge(e);
        if (ed.u != v && ed.v != v) return false;
        if (mate_[g.other(e, v)] != e) return false;
    }
    return true;
}

Weight matching_weight(const Graph& g, const Matching& m) {
    Weight s = 0;
    for (int e : m.edges()) s += g.edge(e).w;
    return s;
}

Weight matching_weight(const Graph& /*g*/, const Matching& m, const std::vector<Weight>& w) {
    Weight s = 0;
    for (int e : m.edges()) s += w[e];
    return s;
}

Weight WeightScales::prefix(int e, int i) const {
    if (i <= 0) return 0;
    int shift = scale_count - i;
    return shift >= 0 ? (wbar[e] >> shift) : (wbar[e] << -shift);
}

Weight WeightScales::digit(int e, int i) const { return prefix(e, i) - 2 * prefix(e, i - 1); }

WeightScales init_scales(const Graph& g) {
    WeightScales s;
    s.multiplier = g.vertex_count() / 2 + 1;
    Weight top = s.multiplier * g.max_weight();
    int bits = 0;
    while (bits < 62 && (Weight{1} << bits) < top) ++bits;
    s.scale_count = std::max(1, bits);
    s.wbar.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) s.wbar[e] = s.multiplier * g.edge(e).w;
    return s;
}

}  // namespace mwpm
