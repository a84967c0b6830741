#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mwpm/graph.hpp"
#include "mwpm/state.hpp"

namespace mwpm {

// Which slackness property a certificate claims.
enum class CertMode { CS, RCS, Mixed };

const char* cert_mode_name(CertMode m);
CertMode cert_mode_from_name(const std::string& s);

struct CertNode {
    std::vector<int> vertices;
    // Children in cycle order: a vertex id, or -(i+1) for blossom i.
    std::vector<int> children;
    // Edge i joins children[i] and children[i+1 mod l].
    std::vector<int> cycle_edges;
    int base = kNone;
    Weight z = 0;
    int parent = kNone;
    bool inherited = false;
};

// Self-contained snapshot of (M, blossoms, y, z, w) for the verifiers.
struct Certificate {
    std::string view = "scaled";
    CertMode mode = CertMode::CS;
    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<Weight> y;
    std::vector<int> matching;
    std::vector<CertNode> blossoms;
};

// Live vertices keep their ids; live dummies are renumbered from n upward.
Certificate certificate_from_state(const SolverState& s, CertMode mode, const std::string& view = "scaled");

// JSON uses 1-indexed vertices and edges.
std::string certificate_to_json(const Certificate& c, int indent = 1);
Certificate certificate_from_json(const std::string& text);
void write_certificate(std::ostream& out, const Certificate& c);
Certificate read_certificate_file(const std::string& path);

}  // namespace mwpm
