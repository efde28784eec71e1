#pragma once

#include "sharpmilnor/graphs.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace sharpmilnor {

struct Certificate {
    std::set<long long> allowed_orders;  // possible nontrivial eigenvalue orders
    std::vector<std::string> provenance;
    bool proven = false;  // false: inconclusive (baseline only)
};

struct FrameReport {
    std::string frame_id;
    Certificate certificate;
};

struct MonodromyReport {
    int n = 0;  // affine line count after deconing
    std::vector<std::pair<std::string, std::string>> sharp_pairs;  // names
    std::vector<FrameReport> frames;
    Certificate combined;
    BettiTable betti;
    bool consistent = false;
};

// Baseline divisor set plus the coprimality shortcuts; engaged result means
// the frame is already settled as having trivial monodromy.
std::optional<Certificate> quick_checks(const SharpFrame& frame);

std::set<long long> baseline_orders(const SharpFrame& frame);

// Condition: the final points of H_{m(P_i)-1}^{P_i} and H_2^{P_j} differ for
// all i < j, over lines of the given family.
bool cond_last(const SharpFrame& frame, const std::set<int>& family);

Certificate certify_frame(const PolarContext& polar, bool gamma_rule = true);

MonodromyReport certify(const Arrangement& arr, bool gamma_rule = true);

std::string report_json(const MonodromyReport& report);

}  // namespace sharpmilnor
