#include "sharpmilnor/certify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "vendor_json.hpp"

namespace sharpmilnor {

namespace {

long long gcd_ll(long long a, long long b) {
    while (b) {
        long long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

bool prime_power(long long d) {
    if (d < 2) return false;
    for (long long p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            while (d % p == 0) d /= p;
            return d == 1;
        }
    }
    return true;  // prime
}

std::string orders_to_string(const std::set<long long>& s) {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (long long d : s) {
        if (!first) out << ",";
        out << d;
        first = false;
    }
    out << "}";
    return out.str();
}

void intersect_with(std::set<long long>& a, const std::set<long long>& b) {
    for (auto it = a.begin(); it != a.end();)
        if (!b.count(*it))
            it = a.erase(it);
        else
            ++it;
}

}  // namespace

std::set<long long> baseline_orders(const SharpFrame& frame) {
    long long g = gcd_ll(frame.n() + 1, frame.p0_multiplicity());
    std::set<long long> baseline;
    for (long long d = 2; d <= g; ++d)
        if (g % d == 0) baseline.insert(d);
    return baseline;
}

std::optional<Certificate> quick_checks(const SharpFrame& frame) {
    Certificate cert;
    cert.proven = true;
    std::set<long long> baseline = baseline_orders(frame);
    if (baseline.empty()) {
        cert.provenance.push_back("baseline: no d > 1 divides both n+1 and the pencil multiplicity");
        return cert;
    }
    int noncoprime = 0;
    for (int anchor : frame.anchors) {
        int m = frame.points[static_cast<size_t>(anchor)].multiplicity();
        if (gcd_ll(m, frame.n() + 1) != 1) ++noncoprime;
    }
    if (noncoprime == 0) {
        cert.provenance.push_back("all anchor multiplicities coprime with n+1");
        return cert;
    }
    if (noncoprime == 1) {
        cert.provenance.push_back("exactly one anchor multiplicity shares a factor with n+1");
        return cert;
    }
    return std::nullopt;
}

bool cond_last(const SharpFrame& frame, const std::set<int>& family) {
    int m0 = frame.p0_multiplicity();
    int na = static_cast<int>(frame.anchors.size());
    auto line_m_minus_1 = [&](int i) -> int {
        if (i == 0) return m0 >= 3 ? frame.p0_line(m0 - 1) : -1;
        int anchor_pt = frame.anchors[static_cast<size_t>(i - 1)];
        int m = frame.points[static_cast<size_t>(anchor_pt)].multiplicity();
        if (m < 3) return -1;  // rank m-1 would be the sharp line
        return frame.line_at_point_rank(anchor_pt, m - 1);
    };
    auto line_2 = [&](int j) -> int {
        int anchor_pt = frame.anchors[static_cast<size_t>(j - 1)];
        return frame.line_at_point_rank(anchor_pt, 2);
    };
    for (int i = 0; i <= na; ++i) {
        int a = line_m_minus_1(i);
        if (a < 0 || !family.count(a)) continue;
        for (int j = i + 1; j <= na; ++j) {
            int b = line_2(j);
            if (b < 0 || !family.count(b)) continue;
            if (frame.last_point(a) == frame.last_point(b)) return false;
        }
    }
    return true;
}

Certificate certify_frame(const PolarContext& polar, bool gamma_rule) {
    const SharpFrame& frame = polar.frame();
    if (auto quick = quick_checks(frame)) return *quick;

    Certificate cert;
    cert.allowed_orders = baseline_orders(frame);
    cert.provenance.push_back("baseline divisors " + orders_to_string(cert.allowed_orders));
    bool narrowed = false;

    LineFamilies fam = removable_set(frame);
    auto family_usable = [&frame](const std::set<int>& family) {
        for (int li : family) {
            if (frame.points_on_line[static_cast<size_t>(li)].size() < 1) return false;
            if (frame.is_anchor_point(frame.last_point(li))) return false;
        }
        return true;
    };

    // No-cycle rule on the final-point graph.
    try {
        if (family_usable(fam.a0) && cond_last(frame, fam.a0)) {
            HomologyGraph g = build_graph(polar, GraphVariant::Last, GraphFamily::Zero);
            if (find_obstruction_cycles(g).empty()) {
                cert.allowed_orders.clear();
                cert.proven = true;
                cert.provenance.push_back(
                    "final-point condition holds and the final-point graph has no obstruction cycle");
                return cert;
            }
        }
    } catch (const GraphTooCyclic&) {
        cert.provenance.push_back("final-point graph enumeration over budget; rule skipped");
    } catch (const GraphUnavailable& e) {
        cert.provenance.push_back(std::string("final-point graph unavailable: ") + e.what());
    }

    // Order-3 bound from the condition on the 3-stripped family.
    if (family_usable(fam.a03) && cond_last(frame, fam.a03)) {
        intersect_with(cert.allowed_orders, {3});
        cert.provenance.push_back("final-point condition holds on the 3-stripped family");
        narrowed = true;
    }

    // Parity rules on the min/final graph.
    if (frame.p0_multiplicity() > 3) {
        try {
            HomologyGraph g = build_graph(polar, GraphVariant::LastMin, GraphFamily::Zero);
            auto cycles = find_obstruction_cycles(g);
            bool bad = std::any_of(cycles.begin(), cycles.end(), [](const ObstructionCycle& c) {
                return bad_cycle_predicate(c, GraphVariant::LastMin);
            });
            if (!bad) {
                cert.allowed_orders.clear();
                cert.proven = true;
                cert.provenance.push_back("min/final graph has no parity-breaking cycle");
                return cert;
            }
            HomologyGraph g2 = build_graph(polar, GraphVariant::LastMin, GraphFamily::Zero34);
            auto cycles2 = find_obstruction_cycles(g2);
            bool bad2 = std::any_of(cycles2.begin(), cycles2.end(), [](const ObstructionCycle& c) {
                return bad_cycle_predicate(c, GraphVariant::LastMin);
            });
            if (!bad2) {
                intersect_with(cert.allowed_orders, {3, 4});
                cert.provenance.push_back(
                    "min/final graph on the 3/4-stripped family has no parity-breaking cycle");
                narrowed = true;
            }
        } catch (const GraphTooCyclic&) {
            cert.provenance.push_back("min/final graph enumeration over budget; rule skipped");
        } catch (const GraphUnavailable& e) {
            cert.provenance.push_back(std::string("min/final graph unavailable: ") + e.what());
        }
    }

    // Double-point connectivity strengthening (prime-power orders only).
    if (gamma_rule && !cert.allowed_orders.empty()) {
        bool all_pp = std::all_of(cert.allowed_orders.begin(), cert.allowed_orders.end(),
                                  prime_power);
        if (all_pp && double_point_graph(frame).connected) {
            cert.allowed_orders.clear();
            cert.proven = true;
            cert.provenance.push_back(
                "double-point graph connected and remaining orders are prime powers");
            return cert;
        }
    }

    cert.proven = narrowed || cert.allowed_orders.empty();
    if (!cert.proven) cert.provenance.push_back("no rule fired beyond the baseline");
    return cert;
}

MonodromyReport certify(const Arrangement& arr, bool gamma_rule) {
    Arrangement proj = arr.mode == Mode::Projective ? arr : arr.projective_closure();
    auto pairs = find_sharp_pairs(proj);
    if (pairs.empty()) throw std::invalid_argument("not a sharp arrangement");

    MonodromyReport report;
    report.n = static_cast<int>(proj.size()) - 1;
    bool first_frame = true;
    for (const auto& pair : pairs) {
        report.sharp_pairs.push_back({proj.names[static_cast<size_t>(pair.first)],
                                      proj.names[static_cast<size_t>(pair.second)]});
        for (const SharpFrame& frame : four_frames(proj, pair)) {
            PolarContext polar(frame, choose_polar(frame));
            auto violations = polar.validate();
            if (!violations.empty())
                throw std::logic_error("polar validation failed: " + violations.front());
            FrameReport fr;
            fr.frame_id = frame_label(frame);
            fr.certificate = certify_frame(polar, gamma_rule);
            if (first_frame) {
                report.combined = fr.certificate;
                report.betti = milnor_betti(polar);
                first_frame = false;
            } else {
                intersect_with(report.combined.allowed_orders,
                               fr.certificate.allowed_orders);
                report.combined.proven =
                    report.combined.proven || fr.certificate.proven;
            }
            report.frames.push_back(std::move(fr));
        }
    }
    report.consistent = true;
    for (const auto& [d, beta] : report.betti.betas)
        if (beta > 0 && !report.combined.allowed_orders.count(d)) report.consistent = false;
    return report;
}

std::string report_json(const MonodromyReport& report) {
    nlohmann::json j;
    j["n"] = report.n;
    j["sharp_pairs"] = nlohmann::json::array();
    for (const auto& [a, b] : report.sharp_pairs) j["sharp_pairs"].push_back({a, b});
    j["frames"] = nlohmann::json::array();
    for (const auto& fr : report.frames) {
        nlohmann::json f;
        f["frame_id"] = fr.frame_id;
        f["rules_fired"] = fr.certificate.provenance;
        f["allowed"] = fr.certificate.allowed_orders;
        f["witnesses"] = fr.certificate.provenance;
        f["proven"] = fr.certificate.proven;
        j["frames"].push_back(f);
    }
    j["combined_allowed"] = report.combined.allowed_orders;
    nlohmann::json betti = nlohmann::json::object();
    for (const auto& [d, beta] : report.betti.betas) betti[std::to_string(d)] = beta;
    j["betti"] = betti;
    j["b1_fiber"] = report.betti.b1_fiber;
    j["consistent"] = report.consistent;
    return j.dump(2);
}

}  // namespace sharpmilnor
