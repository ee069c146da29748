#pragma once

#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "gaston/errors.hpp"
#include "gaston/hetgraph.hpp"
#include "gaston/rng.hpp"

namespace gaston {

// Archive ingestion: newline-delimited JSON records are parsed, filtered by
// the score and thread-depth heuristics, and turned into the heterogeneous
// interaction graph plus leakage-free user-level splits.

struct Record {
    std::string id;
    std::string author;
    std::string community;
    std::optional<std::string> parent_id;
    long long score = 0;
    std::string body;
    long long created_utc = 0;
};

struct RejectEntry {
    std::size_t line_number = 0;  // 1-based
    std::string reason;
};

struct ParseResult {
    std::vector<Record> records;
    std::vector<RejectEntry> rejects;
};

// Parses one JSON object per line. Malformed lines and lines missing a
// required field (id, author, community/subreddit, score) are logged to the
// rejects list and skipped; parsing continues.
inline ParseResult parse_archive(std::istream& in) {
    ParseResult result;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (line.empty()) continue;
        nlohmann::json obj = nlohmann::json::parse(line, nullptr, false);
        if (obj.is_discarded() || !obj.is_object()) {
            result.rejects.push_back({line_number, "malformed JSON"});
            continue;
        }
        auto missing = [&](const char* field) {
            result.rejects.push_back({line_number, std::string("missing required field: ") + field});
        };
        if (!obj.contains("id") || !obj["id"].is_string() || obj["id"].get<std::string>().empty()) {
            missing("id");
            continue;
        }
        if (!obj.contains("author") || !obj["author"].is_string()) {
            missing("author");
            continue;
        }
        const char* community_key =
            obj.contains("community") ? "community" : (obj.contains("subreddit") ? "subreddit" : nullptr);
        if (community_key == nullptr || !obj[community_key].is_string()) {
            missing("community");
            continue;
        }
        if (!obj.contains("score") || !obj["score"].is_number_integer()) {
            missing("score");
            continue;
        }
        Record rec;
        rec.id = obj["id"].get<std::string>();
        rec.author = obj["author"].get<std::string>();
        rec.community = obj[community_key].get<std::string>();
        rec.score = obj["score"].get<long long>();
        if (obj.contains("parent_id") && obj["parent_id"].is_string() &&
            !obj["parent_id"].get<std::string>().empty()) {
            rec.parent_id = obj["parent_id"].get<std::string>();
        }
        if (obj.contains("body") && obj["body"].is_string()) {
            rec.body = obj["body"].get<std::string>();
        }
        if (obj.contains("created_utc") && obj["created_utc"].is_number_integer()) {
            rec.created_utc = obj["created_utc"].get<long long>();
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

inline ParseResult parse_archive_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open archive: " + path);
    return parse_archive(in);
}

// Noise-reduction filter. Depth-0 records (no parent, or the parent is not in
// the input) are kept iff score >= min_score. Deeper records are kept iff
// their depth <= max_depth and their depth-0 root survived. Root = depth 0,
// first comment = depth 1.
inline std::vector<Record> filter_records(const std::vector<Record>& records,
                                          long long min_score = 25, int max_depth = 4) {
    std::unordered_map<std::string, std::size_t> by_id;
    by_id.reserve(records.size());
    for (std::size_t i = 0; i < records.size(); ++i) by_id.emplace(records[i].id, i);

    constexpr int kUnresolved = -1;
    constexpr int kInProgress = -2;
    std::vector<int> depth(records.size(), kUnresolved);
    std::vector<std::size_t> root(records.size());

    auto resolve = [&](std::size_t start) {
        std::vector<std::size_t> chain;
        std::size_t cur = start;
        while (true) {
            if (depth[cur] >= 0) break;
            if (depth[cur] == kInProgress) {
                std::string cycle;
                for (std::size_t i : chain) {
                    cycle += records[i].id;
                    cycle += " -> ";
                }
                cycle += records[cur].id;
                throw DataError("parent cycle detected: " + cycle);
            }
            depth[cur] = kInProgress;
            chain.push_back(cur);
            if (!records[cur].parent_id.has_value()) break;
            auto it = by_id.find(*records[cur].parent_id);
            if (it == by_id.end()) break;  // orphan: treat as depth-0 root
            cur = it->second;
        }
        // cur is either resolved or a root; unwind the chain.
        int base_depth;
        std::size_t base_root;
        if (depth[cur] >= 0) {
            base_depth = depth[cur];
            base_root = root[cur];
        } else {
            base_depth = 0;
            base_root = cur;
            depth[cur] = 0;
            root[cur] = cur;
            chain.pop_back();
        }
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            ++base_depth;
            depth[*it] = base_depth;
            root[*it] = base_root;
        }
    };
    for (std::size_t i = 0; i < records.size(); ++i) resolve(i);

    std::vector<Record> kept;
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (depth[i] == 0) {
            if (records[i].score >= min_score) kept.push_back(records[i]);
        } else if (depth[i] <= max_depth && records[root[i]].score >= min_score) {
            kept.push_back(records[i]);
        }
    }
    return kept;
}

inline bool is_deleted_author(const std::string& author) {
    return author.empty() || author == "[deleted]" || author == "[removed]";
}

struct InteractionGraph {
    HetGraph graph;
    std::vector<std::string> user_ids;       // user index -> author name
    std::vector<std::string> text_ids;       // text index -> record id
    std::vector<std::string> community_ids;  // community index -> community name
    std::vector<std::string> text_bodies;    // text index -> body payload
};

// One text node per record, one user per distinct author, one community per
// distinct community name; ActiveIn edges are deduplicated (author,
// community) pairs. Records with deleted/empty authors are dropped here.
inline InteractionGraph build_interaction_graph(const std::vector<Record>& records) {
    InteractionGraph out;
    std::unordered_map<std::string, int> user_index;
    std::unordered_map<std::string, int> community_index;
    std::vector<EdgeSpec> edges;

    for (const Record& rec : records) {
        if (is_deleted_author(rec.author)) continue;
        auto [uit, user_new] = user_index.emplace(rec.author, static_cast<int>(out.user_ids.size()));
        if (user_new) out.user_ids.push_back(rec.author);
        auto [cit, comm_new] =
            community_index.emplace(rec.community, static_cast<int>(out.community_ids.size()));
        if (comm_new) out.community_ids.push_back(rec.community);

        const int text = static_cast<int>(out.text_ids.size());
        out.text_ids.push_back(rec.id);
        out.text_bodies.push_back(rec.body);
        const int user = uit->second;
        const int community = cit->second;
        edges.push_back({Relation::TextPostedByUser,
                         {NodeType::Text, text},
                         {NodeType::User, user}});
        edges.push_back({Relation::TextPostedInCommunity,
                         {NodeType::Text, text},
                         {NodeType::Community, community}});
        edges.push_back({Relation::UserActiveInCommunity,
                         {NodeType::User, user},
                         {NodeType::Community, community}});
    }

    NodeCounts counts;
    counts.users = static_cast<int>(out.user_ids.size());
    counts.texts = static_cast<int>(out.text_ids.size());
    counts.communities = static_cast<int>(out.community_ids.size());
    out.graph = HetGraph::build(counts, edges);
    return out;
}

enum class Split : std::uint8_t { Train = 0, Val = 1, Test = 2 };

inline const char* split_name(Split s) {
    constexpr const char* names[3] = {"train", "val", "test"};
    return names[static_cast<int>(s)];
}

struct SplitAssignment {
    std::map<std::string, Split> by_user;

    Split of(const std::string& user) const {
        auto it = by_user.find(user);
        if (it == by_user.end()) throw ArgumentError("user has no split assignment: " + user);
        return it->second;
    }
};

struct SplitRatios {
    double train = 0.8;
    double val = 0.1;
    double test = 0.1;
};

// Deterministic user-level split: users in first-appearance order are
// shuffled by rng_seed, then partitioned by cumulative ratio. Remainder
// users go to Train.
inline SplitAssignment split_by_user(const std::vector<Record>& records, const SplitRatios& ratios,
                                     std::uint64_t rng_seed) {
    if (ratios.train < 0 || ratios.val < 0 || ratios.test < 0 ||
        std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
        throw ArgumentError("split ratios must be non-negative and sum to 1");
    }
    std::vector<std::string> users;
    std::unordered_map<std::string, bool> seen;
    for (const Record& rec : records) {
        if (is_deleted_author(rec.author)) continue;
        if (seen.emplace(rec.author, true).second) users.push_back(rec.author);
    }
    Rng rng(rng_seed);
    rng.shuffle(users);

    const std::size_t n = users.size();
    const std::size_t n_val = static_cast<std::size_t>(static_cast<double>(n) * ratios.val);
    const std::size_t n_test = static_cast<std::size_t>(static_cast<double>(n) * ratios.test);
    const std::size_t n_train = n - n_val - n_test;

    SplitAssignment assignment;
    for (std::size_t i = 0; i < n; ++i) {
        Split s = Split::Train;
        if (i >= n_train && i < n_train + n_val) s = Split::Val;
        else if (i >= n_train + n_val) s = Split::Test;
        assignment.by_user[users[i]] = s;
    }
    return assignment;
}

}  // namespace gaston
