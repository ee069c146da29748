#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "gaston/errors.hpp"

namespace gaston {

// Evaluation metrics. All definitions are deliberately brute-force-friendly
// so independent oracles can confirm them.

// Per-user ranking: candidate communities in descending score order (ties
// broken by ascending index) plus the ground-truth set.
struct RankedList {
    std::vector<int> candidates;
    std::set<int> ground_truth;
};

// Builds a RankedList from raw (candidate, score) pairs.
inline RankedList make_ranked_list(std::vector<std::pair<int, double>> scored,
                                   std::set<int> ground_truth) {
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    RankedList list;
    list.candidates.reserve(scored.size());
    for (const auto& [candidate, score] : scored) list.candidates.push_back(candidate);
    list.ground_truth = std::move(ground_truth);
    return list;
}

struct ClassificationReport {
    double accuracy = 0.0;
    double macro_f1 = 0.0;
};

// Accuracy plus macro-F1 (mean of per-class F1 over the union of observed
// label and prediction classes; F1 is 0 where precision + recall is 0).
inline ClassificationReport accuracy_and_macro_f1(const std::vector<int>& predictions,
                                                  const std::vector<int>& labels) {
    if (predictions.empty() || predictions.size() != labels.size()) {
        throw ArgumentError("accuracy_and_macro_f1: need equal-length nonempty inputs");
    }
    const std::size_t n = labels.size();
    std::set<int> classes(labels.begin(), labels.end());
    classes.insert(predictions.begin(), predictions.end());

    std::size_t correct = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (predictions[i] == labels[i]) ++correct;
    }

    double f1_sum = 0.0;
    for (int c : classes) {
        std::size_t tp = 0, fp = 0, fn = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const bool pred_c = predictions[i] == c;
            const bool true_c = labels[i] == c;
            if (pred_c && true_c) ++tp;
            else if (pred_c) ++fp;
            else if (true_c) ++fn;
        }
        const double precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / (tp + fp);
        const double recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / (tp + fn);
        const double f1 =
            precision + recall == 0.0 ? 0.0 : 2.0 * precision * recall / (precision + recall);
        f1_sum += f1;
    }
    return {static_cast<double>(correct) / n, f1_sum / static_cast<double>(classes.size())};
}

inline double rmse(const std::vector<double>& preds, const std::vector<double>& targets) {
    if (preds.empty() || preds.size() != targets.size()) {
        throw ArgumentError("rmse: need equal-length nonempty inputs");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const double d = targets[i] - preds[i];
        sum += d * d;
    }
    return std::sqrt(sum / static_cast<double>(preds.size()));
}

inline double pearson_r(const std::vector<double>& preds, const std::vector<double>& targets) {
    if (preds.size() != targets.size() || preds.size() < 2) {
        throw ArgumentError("pearson_r: need equal-length inputs with N >= 2");
    }
    const double n = static_cast<double>(preds.size());
    double mean_p = 0.0, mean_t = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        mean_p += preds[i];
        mean_t += targets[i];
    }
    mean_p /= n;
    mean_t /= n;
    double cov = 0.0, var_p = 0.0, var_t = 0.0;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        const double dp = preds[i] - mean_p;
        const double dt = targets[i] - mean_t;
        cov += dp * dt;
        var_p += dp * dp;
        var_t += dt * dt;
    }
    if (var_p == 0.0 || var_t == 0.0) {
        throw DegenerateInputError("pearson_r: zero-variance input");
    }
    return cov / std::sqrt(var_p * var_t);
}

// MRR@k: 1/rank of the best-ranked ground-truth item if within the cutoff,
// else 0; averaged over users.
inline double mrr_at_k(const std::vector<RankedList>& lists, int k = 10) {
    if (lists.empty()) throw ArgumentError("mrr_at_k: need at least one ranked list");
    double sum = 0.0;
    for (const RankedList& list : lists) {
        if (list.candidates.empty()) throw ArgumentError("mrr_at_k: user with empty candidates");
        if (list.ground_truth.empty()) throw ArgumentError("mrr_at_k: empty ground truth");
        for (int pos = 0; pos < static_cast<int>(list.candidates.size()) && pos < k; ++pos) {
            if (list.ground_truth.count(list.candidates[pos])) {
                sum += 1.0 / static_cast<double>(pos + 1);
                break;
            }
        }
    }
    return sum / static_cast<double>(lists.size());
}

// NDCG@k with binary gain: DCG uses a 1/log2(pos+1) discount at 1-based
// positions; IDCG packs the ground-truth items at the top, truncated at k.
inline double ndcg_at_k(const std::vector<RankedList>& lists, int k = 10) {
    if (lists.empty()) throw ArgumentError("ndcg_at_k: need at least one ranked list");
    double sum = 0.0;
    for (const RankedList& list : lists) {
        if (list.ground_truth.empty()) throw ArgumentError("ndcg_at_k: empty ground truth");
        double dcg = 0.0;
        for (int pos = 0; pos < static_cast<int>(list.candidates.size()) && pos < k; ++pos) {
            if (list.ground_truth.count(list.candidates[pos])) {
                dcg += 1.0 / std::log2(static_cast<double>(pos + 2));
            }
        }
        double idcg = 0.0;
        const int ideal = std::min<int>(static_cast<int>(list.ground_truth.size()), k);
        for (int pos = 0; pos < ideal; ++pos) {
            idcg += 1.0 / std::log2(static_cast<double>(pos + 2));
        }
        sum += dcg / idcg;
    }
    return sum / static_cast<double>(lists.size());
}

}  // namespace gaston
