#include "mwpm/certificate.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace mwpm {

using nlohmann::json;

const char* cert_mode_name(CertMode m) {
    switch (m) {
        case CertMode::CS: return "cs";
        case CertMode::RCS: return "rcs";
        case CertMode::Mixed: return "mixed";
    }
    return "?";
}

CertMode cert_mode_from_name(const std::string& s) {
    if (s == "cs") return CertMode::CS;
    if (s == "rcs") return CertMode::RCS;
    if (s == "mixed") return CertMode::Mixed;
    throw ParseError("unknown certificate mode '" + s + "'");
}

Certificate certificate_from_state(const SolverState& s, CertMode mode, const std::string& view) {
    Certificate c;
    c.view = view;
    c.mode = mode;
    const int n = s.n();
    std::vector<int> id(s.vertex_capacity(), kNone);
    int next = 0;
    for (int v = 0; v < n; ++v) id[v] = next++;
    for (int d = n; d < s.vertex_capacity(); ++d)
        if (s.alive(d)) id[d] = next++;
    c.vertex_count = next;
    c.y.assign(next, 0);
    for (int v = 0; v < s.vertex_capacity(); ++v)
        if (id[v] != kNone) c.y[id[v]] = s.y[v];

    std::vector<int> eid(s.edge_capacity(), kNone);
    for (int e = 0; e < s.edge_capacity(); ++e) {
        if (!s.edge_alive(e)) continue;
        eid[e] = static_cast<int>(c.edges.size());
        c.edges.push_back({id[s.endpoint_u(e)], id[s.endpoint_v(e)], s.w[e]});
        if (s.is_matched_edge(e)) c.matching.push_back(eid[e]);
    }

    const BlossomForest& f = s.forest;
    std::vector<int> all = f.blossoms();
    std::unordered_map<int, int> bid;
    for (std::size_t i = 0; i < all.size(); ++i) bid[all[i]] = static_cast<int>(i);
    for (int b : all) {
        CertNode node;
        for (int v : f.leaves(b)) node.vertices.push_back(id[v]);
        for (int ch : f.children(b)) node.children.push_back(f.is_vertex(ch) ? id[ch] : -(bid[ch] + 1));
        for (const CycleEdge& ce : f.cycle(b)) node.cycle_edges.push_back(eid[ce.edge]);
        node.base = id[f.base(b)];
        node.z = f.z(b);
        node.parent = f.parent(b) == kNone ? kNone : bid[f.parent(b)];
        node.inherited = f.is_inherited(b);
        c.blossoms.push_back(std::move(node));
    }
    return c;
}

std::string certificate_to_json(const Certificate& c, int indent) {
    json j;
    j["view"] = c.view;
    j["mode"] = cert_mode_name(c.mode);
    j["vertices"] = c.vertex_count;
    json edges = json::array();
    for (const Edge& e : c.edges) edges.push_back({e.u + 1, e.v + 1, e.w});
    j["edges"] = std::move(edges);
    j["y"] = c.y;
    json m = json::array();
    for (int e : c.matching) m.push_back(e + 1);
    j["matching"] = std::move(m);
    json bl = json::array();
    for (const CertNode& b : c.blossoms) {
        json jb;
        json vs = json::array();
        for (int v : b.vertices) vs.push_back(v + 1);
        jb["vertices"] = std::move(vs);
        json ch = json::array();
        for (int x : b.children) {
            if (x >= 0)
                ch.push_back({{"vertex", x + 1}});
            else
                ch.push_back({{"blossom", -x}});
        }
        jb["children"] = std::move(ch);
        json ce = json::array();
        for (int e : b.cycle_edges) ce.push_back(e + 1);
        jb["cycle_edges"] = std::move(ce);
        jb["base"] = b.base + 1;
        jb["z"] = b.z;
        jb["parent"] = b.parent == kNone ? 0 : b.parent + 1;
        jb["inherited"] = b.inherited;
        bl.push_back(std::move(jb));
    }
    j["blossoms"] = std::move(bl);
    return j.dump(indent);
}

Certificate certificate_from_json(const std::string& text) {
    Certificate c;
    try {
        json j = json::parse(text);
        c.view = j.at("view").get<std::string>();
        c.mode = cert_mode_from_name(j.at("mode").get<std::string>());
        c.vertex_count = j.at("vertices").get<int>();
        if (c.vertex_count < 0) throw ParseError("negative vertex count");
        auto vertex = [&](int v1) {
            if (v1 < 1 || v1 > c.vertex_count) throw ParseError("vertex " + std::to_string(v1) + " out of range");
            return v1 - 1;
        };
        for (const json& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3) throw ParseError("edge entries are [u, v, w]");
            c.edges.push_back({vertex(e[0].get<int>()), vertex(e[1].get<int>()), e[2].get<Weight>()});
        }
        const int m = static_cast<int>(c.edges.size());
        auto edge = [&](int e1) {
            if (e1 < 1 || e1 > m) throw ParseError("edge " + std::to_string(e1) + " out of range");
            return e1 - 1;
        };
        c.y = j.at("y").get<std::vector<Weight>>();
        if (static_cast<int>(c.y.size()) != c.vertex_count) throw ParseError("y has the wrong length");
        for (const json& e : j.at("matching")) c.matching.push_back(edge(e.get<int>()));
        const json& bl = j.at("blossoms");
        const int nb = static_cast<int>(bl.size());
        for (const json& jb : bl) {
            CertNode b;
            for (const json& v : jb.at("vertices")) b.vertices.push_back(vertex(v.get<int>()));
            for (const json& ch : jb.at("children")) {
                if (ch.contains("vertex")) {
                    b.children.push_back(vertex(ch.at("vertex").get<int>()));
                } else {
                    int k = ch.at("blossom").get<int>();
                    if (k < 1 || k > nb) throw ParseError("blossom reference out of range");
                    b.children.push_back(-k);
                }
            }
            for (const json& e : jb.at("cycle_edges")) b.cycle_edges.push_back(edge(e.get<int>()));
            b.base = vertex(jb.at("base").get<int>());
            b.z = jb.at("z").get<Weight>();
            int p = jb.at("parent").get<int>();
            if (p < 0 || p > nb) throw ParseError("parent reference out of range");
            b.parent = p - 1;
            b.inherited = jb.at("inherited").get<bool>();
            c.blossoms.push_back(std::move(b));
        }
    } catch (const json::exception& ex) {
        throw ParseError(std::string("certificate: ") + ex.what());
    }
    return c;
}

void write_certificate(std::ostream& out, const Certificate& c) { out << certificate_to_json(c) << '\n'; }

Certificate read_certificate_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return certificate_from_json(ss.str());
}

}  // namespace mwpm
