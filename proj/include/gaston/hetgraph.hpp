#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gaston/binio.hpp"
#include "gaston/errors.hpp"
#include "gaston/rng.hpp"

namespace gaston {

// Typed heterogeneous graph over user/text/community nodes with six edge
// relations (three forward + three reverse). Immutable after build; stored
// as one CSR adjacency per relation. Every forward edge has its reverse
// edge materialized, so message passing can follow either direction.

enum class NodeType : std::uint8_t { User = 0, Text = 1, Community = 2 };
constexpr int kNumNodeTypes = 3;

enum class Relation : std::uint8_t {
    TextPostedInCommunity = 0,
    UserActiveInCommunity = 1,
    TextPostedByUser = 2,
    CommunityContainsText = 3,  // reverse of TextPostedInCommunity
    CommunityHasMember = 4,     // reverse of UserActiveInCommunity
    UserWroteText = 5,          // reverse of TextPostedByUser
};
constexpr int kNumRelations = 6;
constexpr int kNumForwardRelations = 3;

constexpr Relation reverse_relation(Relation r) {
    return static_cast<Relation>((static_cast<int>(r) + 3) % 6);
}

constexpr NodeType relation_src_type(Relation r) {
    constexpr NodeType src[kNumRelations] = {NodeType::Text,      NodeType::User,
                                             NodeType::Text,      NodeType::Community,
                                             NodeType::Community, NodeType::User};
    return src[static_cast<int>(r)];
}

constexpr NodeType relation_dst_type(Relation r) {
    return relation_src_type(reverse_relation(r));
}

inline const char* node_type_name(NodeType t) {
    constexpr const char* names[kNumNodeTypes] = {"user", "text", "community"};
    return names[static_cast<int>(t)];
}

inline const char* relation_name(Relation r) {
    constexpr const char* names[kNumRelations] = {
        "text_posted_in_community", "user_active_in_community", "text_posted_by_user",
        "community_contains_text",  "community_has_member",     "user_wrote_text"};
    return names[static_cast<int>(r)];
}

struct NodeRef {
    NodeType type = NodeType::User;
    int index = 0;

    friend bool operator==(const NodeRef&, const NodeRef&) = default;
};

struct EdgeSpec {
    Relation rel;
    NodeRef src;
    NodeRef dst;
};

struct NodeCounts {
    int users = 0;
    int texts = 0;
    int communities = 0;

    int of(NodeType t) const {
        switch (t) {
            case NodeType::User: return users;
            case NodeType::Text: return texts;
            case NodeType::Community: return communities;
        }
        return 0;
    }
};

// Per-layer, per-relation neighbor caps for subgraph sampling.
struct Fanouts {
    std::vector<std::array<int, kNumRelations>> per_layer;

    static Fanouts uniform(int layers, int fanout) {
        Fanouts f;
        f.per_layer.assign(layers, {});
        for (auto& layer : f.per_layer) layer.fill(fanout);
        return f;
    }

    int layers() const { return static_cast<int>(per_layer.size()); }
};

class HetGraph;

struct Subgraph {
    std::vector<NodeRef> seeds;
    // Sampled global node ids per type; position within the vector is the
    // node's type-local index in this subgraph.
    std::array<std::vector<int>, kNumNodeTypes> nodes;
    // Induced edges per relation as (local src, local dst) pairs, sorted.
    std::array<std::vector<std::pair<int, int>>, kNumRelations> edges;

    int node_count(NodeType t) const { return static_cast<int>(nodes[static_cast<int>(t)].size()); }

    int to_global(NodeType t, int local) const { return nodes[static_cast<int>(t)][local]; }

    int total_nodes() const {
        int n = 0;
        for (const auto& v : nodes) n += static_cast<int>(v.size());
        return n;
    }

    int total_edges() const {
        int n = 0;
        for (const auto& v : edges) n += static_cast<int>(v.size());
        return n;
    }
};

class HetGraph {
public:
    HetGraph() = default;

    // Builds the graph from edge triples. Each input edge is stored together
    // with its reverse; duplicate (relation, src, dst) triples collapse to one.
    static HetGraph build(const NodeCounts& counts, const std::vector<EdgeSpec>& edges) {
        HetGraph g;
        g.counts_ = counts;
        if (counts.users < 0 || counts.texts < 0 || counts.communities < 0) {
            throw ArgumentError("node counts must be non-negative");
        }

        std::array<std::set<std::pair<int, int>>, kNumRelations> edge_sets;
        for (const EdgeSpec& e : edges) {
            const NodeType want_src = relation_src_type(e.rel);
            const NodeType want_dst = relation_dst_type(e.rel);
            if (e.src.type != want_src || e.dst.type != want_dst) {
                throw SchemaError(std::string("edge types do not match relation ") +
                                  relation_name(e.rel) + ": got " + node_type_name(e.src.type) +
                                  " -> " + node_type_name(e.dst.type));
            }
            if (e.src.index < 0 || e.src.index >= counts.of(want_src)) {
                throw BoundsError(std::string("source index out of range for ") +
                                  node_type_name(want_src) + ": " + std::to_string(e.src.index));
            }
            if (e.dst.index < 0 || e.dst.index >= counts.of(want_dst)) {
                throw BoundsError(std::string("target index out of range for ") +
                                  node_type_name(want_dst) + ": " + std::to_string(e.dst.index));
            }
            edge_sets[static_cast<int>(e.rel)].insert({e.src.index, e.dst.index});
            edge_sets[static_cast<int>(reverse_relation(e.rel))].insert(
                {e.dst.index, e.src.index});
        }

        for (int r = 0; r < kNumRelations; ++r) {
            const Relation rel = static_cast<Relation>(r);
            const int n_src = counts.of(relation_src_type(rel));
            auto& offsets = g.offsets_[r];
            auto& targets = g.targets_[r];
            offsets.assign(n_src + 1, 0);
            targets.reserve(edge_sets[r].size());
            for (const auto& [s, t] : edge_sets[r]) offsets[s + 1]++;
            for (int i = 0; i < n_src; ++i) offsets[i + 1] += offsets[i];
            // std::set iterates in (src, dst) order, so targets land sorted.
            for (const auto& [s, t] : edge_sets[r]) targets.push_back(t);
        }
        return g;
    }

    const NodeCounts& counts() const { return counts_; }
    int node_count(NodeType t) const { return counts_.of(t); }

    std::int64_t edge_count(Relation r) const {
        return static_cast<std::int64_t>(targets_[static_cast<int>(r)].size());
    }

    std::int64_t total_edge_count() const {
        std::int64_t n = 0;
        for (const auto& t : targets_) n += static_cast<std::int64_t>(t.size());
        return n;
    }

    int degree(Relation r, int src) const {
        const auto& off = offsets_[static_cast<int>(r)];
        return off[src + 1] - off[src];
    }

    // Out-neighbor indices of src under r, sorted ascending.
    const int* neighbors_begin(Relation r, int src) const {
        return targets_[static_cast<int>(r)].data() + offsets_[static_cast<int>(r)][src];
    }
    const int* neighbors_end(Relation r, int src) const {
        return targets_[static_cast<int>(r)].data() + offsets_[static_cast<int>(r)][src + 1];
    }

    std::vector<NodeRef> neighbors(NodeRef v, Relation r) const {
        check_node(v);
        if (relation_src_type(r) != v.type) {
            throw SchemaError(std::string("relation ") + relation_name(r) +
                              " does not start at node type " + node_type_name(v.type));
        }
        const NodeType dst = relation_dst_type(r);
        std::vector<NodeRef> out;
        for (const int* it = neighbors_begin(r, v.index); it != neighbors_end(r, v.index); ++it) {
            out.push_back({dst, *it});
        }
        return out;
    }

    bool has_edge(Relation r, int src, int dst) const {
        const int* b = neighbors_begin(r, src);
        const int* e = neighbors_end(r, src);
        return std::binary_search(b, e, dst);
    }

    const std::vector<int>& csr_offsets(Relation r) const { return offsets_[static_cast<int>(r)]; }
    const std::vector<int>& csr_targets(Relation r) const { return targets_[static_cast<int>(r)]; }

    void check_node(NodeRef v) const {
        if (v.index < 0 || v.index >= counts_.of(v.type)) {
            throw BoundsError(std::string("node index out of range for ") +
                              node_type_name(v.type) + ": " + std::to_string(v.index));
        }
    }

    // Breadth-wise neighbor sampling: hop l draws at most fanout[l][r]
    // out-neighbors per frontier node per relation, uniformly without
    // replacement. Both the sampled edge and its reverse are kept so a
    // sampled contact passes messages in either direction.
    Subgraph sample_subgraph(const std::vector<NodeRef>& seeds, const Fanouts& fanouts,
                             std::uint64_t rng_seed) const {
        if (seeds.empty()) throw ArgumentError("sample_subgraph: seeds must be nonempty");
        for (const NodeRef& s : seeds) check_node(s);
        Rng rng(rng_seed);

        Subgraph sub;
        sub.seeds = seeds;
        std::array<std::vector<int>, kNumNodeTypes> local_of;
        for (int t = 0; t < kNumNodeTypes; ++t) {
            local_of[t].assign(counts_.of(static_cast<NodeType>(t)), -1);
        }
        auto add_node = [&](NodeRef v) -> bool {
            auto& slot = local_of[static_cast<int>(v.type)][v.index];
            if (slot >= 0) return false;
            slot = static_cast<int>(sub.nodes[static_cast<int>(v.type)].size());
            sub.nodes[static_cast<int>(v.type)].push_back(v.index);
            return true;
        };

        std::vector<NodeRef> frontier;
        for (const NodeRef& s : seeds) {
            if (add_node(s)) frontier.push_back(s);
        }

        std::array<std::set<std::pair<int, int>>, kNumRelations> edge_sets;
        for (int layer = 0; layer < fanouts.layers(); ++layer) {
            std::vector<NodeRef> next;
            for (const NodeRef& v : frontier) {
                for (int r = 0; r < kNumRelations; ++r) {
                    const Relation rel = static_cast<Relation>(r);
                    if (relation_src_type(rel) != v.type) continue;
                    const int cap = fanouts.per_layer[layer][r];
                    if (cap <= 0) continue;
                    const int deg = degree(rel, v.index);
                    if (deg == 0) continue;
                    std::vector<int> picked;
                    if (deg <= cap) {
                        picked.assign(neighbors_begin(rel, v.index), neighbors_end(rel, v.index));
                    } else {
                        std::vector<int> pool(neighbors_begin(rel, v.index),
                                              neighbors_end(rel, v.index));
                        picked = rng.sample_without_replacement(std::move(pool),
                                                                static_cast<std::size_t>(cap));
                        std::sort(picked.begin(), picked.end());
                    }
                    const NodeType dst_type = relation_dst_type(rel);
                    for (int nb : picked) {
                        const NodeRef w{dst_type, nb};
                        if (add_node(w)) next.push_back(w);
                        edge_sets[r].insert({v.index, nb});
                        edge_sets[static_cast<int>(reverse_relation(rel))].insert({nb, v.index});
                    }
                }
            }
            frontier = std::move(next);
            if (frontier.empty()) break;
        }

        for (int r = 0; r < kNumRelations; ++r) {
            const Relation rel = static_cast<Relation>(r);
            const int src_t = static_cast<int>(relation_src_type(rel));
            const int dst_t = static_cast<int>(relation_dst_type(rel));
            auto& out = sub.edges[r];
            out.reserve(edge_sets[r].size());
            for (const auto& [s, t] : edge_sets[r]) {
                out.push_back({local_of[src_t][s], local_of[dst_t][t]});
            }
            std::sort(out.begin(), out.end());
        }
        return sub;
    }

    // Binary graph file, magic HGG1: u64 node counts (user, text, community),
    // then per forward relation a u64 edge count plus (u64 src, u64 dst)
    // pairs. Reverse relations are rebuilt on load.
    void save(const std::string& path) const {
        std::ofstream os = open_output(path);
        write_bytes(os, "HGG1", 4);
        write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(counts_.users));
        write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(counts_.texts));
        write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(counts_.communities));
        for (int r = 0; r < kNumForwardRelations; ++r) {
            const Relation rel = static_cast<Relation>(r);
            write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(edge_count(rel)));
            const auto& off = offsets_[r];
            const auto& tgt = targets_[r];
            const int n_src = counts_.of(relation_src_type(rel));
            for (int s = 0; s < n_src; ++s) {
                for (int i = off[s]; i < off[s + 1]; ++i) {
                    write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(s));
                    write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(tgt[i]));
                }
            }
        }
        if (!os) throw FormatError("failed writing graph file: " + path);
    }

    static HetGraph load(const std::string& path) {
        std::ifstream is = open_input(path);
        expect_magic(is, "HGG1", "HGG1 graph file");
        NodeCounts counts;
        counts.users = checked_count(read_pod<std::uint64_t>(is, "user count"));
        counts.texts = checked_count(read_pod<std::uint64_t>(is, "text count"));
        counts.communities = checked_count(read_pod<std::uint64_t>(is, "community count"));
        std::vector<EdgeSpec> edges;
        for (int r = 0; r < kNumForwardRelations; ++r) {
            const Relation rel = static_cast<Relation>(r);
            const std::uint64_t m = read_pod<std::uint64_t>(is, "edge count");
            const NodeType st = relation_src_type(rel);
            const NodeType dt = relation_dst_type(rel);
            for (std::uint64_t i = 0; i < m; ++i) {
                const auto s = read_pod<std::uint64_t>(is, "edge src");
                const auto t = read_pod<std::uint64_t>(is, "edge dst");
                edges.push_back({rel,
                                 {st, checked_count(s)},
                                 {dt, checked_count(t)}});
            }
        }
        return build(counts, edges);
    }

private:
    static int checked_count(std::uint64_t v) {
        if (v > static_cast<std::uint64_t>(INT32_MAX)) {
            throw FormatError("count exceeds supported range");
        }
        return static_cast<int>(v);
    }

    NodeCounts counts_;
    std::array<std::vector<int>, kNumRelations> offsets_;
    std::array<std::vector<int>, kNumRelations> targets_;
};

}  // namespace gaston
