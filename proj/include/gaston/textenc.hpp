#pragma once

#include <cctype>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gaston/binio.hpp"
#include "gaston/errors.hpp"

namespace gaston {

// Initial text-node feature vectors. Production path loads a precomputed
// table (EMB1 file); the hashing encoder is a deterministic stand-in used
// when no table is available.

struct EmbeddingTable {
    int dim = 0;
    std::vector<float> rows;  // row-major, count x dim

    EmbeddingTable() = default;
    EmbeddingTable(int count, int dim_) : dim(dim_) {
        if (count < 0 || dim_ <= 0) throw ArgumentError("embedding table needs count >= 0, dim > 0");
        rows.assign(static_cast<std::size_t>(count) * dim_, 0.0f);
    }

    int count() const { return dim == 0 ? 0 : static_cast<int>(rows.size()) / dim; }

    float* row(int i) { return rows.data() + static_cast<std::size_t>(i) * dim; }
    const float* row(int i) const { return rows.data() + static_cast<std::size_t>(i) * dim; }

    // Embedding file, magic EMB1: u32 dim, u64 count, then count*dim f32.
    void save(const std::string& path) const {
        std::ofstream os = open_output(path);
        write_bytes(os, "EMB1", 4);
        write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(dim));
        write_pod<std::uint64_t>(os, static_cast<std::uint64_t>(count()));
        write_bytes(os, rows.data(), rows.size() * sizeof(float));
        if (!os) throw FormatError("failed writing embedding file: " + path);
    }

    static EmbeddingTable load(const std::string& path) {
        std::ifstream is = open_input(path);
        expect_magic(is, "EMB1", "EMB1 embedding file");
        const auto dim = read_pod<std::uint32_t>(is, "dim");
        const auto count = read_pod<std::uint64_t>(is, "count");
        if (dim == 0) throw FormatError("embedding file declares dim 0");
        EmbeddingTable table;
        table.dim = static_cast<int>(dim);
        table.rows.resize(static_cast<std::size_t>(count) * dim);
        read_bytes(is, table.rows.data(), table.rows.size() * sizeof(float), "embedding rows");
        char extra;
        if (is.read(&extra, 1)) {
            throw FormatError("embedding file longer than header declares");
        }
        for (float v : table.rows) {
            if (!std::isfinite(v)) throw DataError("embedding file contains non-finite value");
        }
        return table;
    }
};

namespace detail {
inline std::uint64_t fnv1a(std::string_view token) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : token) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}
}  // namespace detail

// Token-hashing bag of words: lowercase, split on non-alphanumerics, hash
// each token to a bucket with a +/-1 sign, accumulate, L2-normalize.
// Empty or token-free input yields the zero vector.
inline std::vector<float> hash_encode(std::string_view text, int dim) {
    if (dim < 8) throw ArgumentError("hash_encode: dim must be >= 8");
    std::vector<float> vec(dim, 0.0f);
    std::string token;
    bool any = false;
    auto flush = [&]() {
        if (token.empty()) return;
        const std::uint64_t h = detail::fnv1a(token);
        const int bucket = static_cast<int>(h % static_cast<std::uint64_t>(dim));
        const float sign = (h >> 63) ? -1.0f : 1.0f;
        vec[bucket] += sign;
        any = true;
        token.clear();
    };
    for (char ch : text) {
        if (std::isalnum(static_cast<unsigned char>(ch))) {
            token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
        } else {
            flush();
        }
    }
    flush();
    if (!any) return vec;
    double norm = 0.0;
    for (float v : vec) norm += static_cast<double>(v) * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (float& v : vec) v = static_cast<float>(v / norm);
    }
    return vec;
}

}  // namespace gaston
