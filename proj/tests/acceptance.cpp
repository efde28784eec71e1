// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "corpus_support.hpp"
#include "sharpmilnor/certify.hpp"

using namespace sharpmilnor;
using namespace sharpmilnor::testing;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
    std::cout << "criterion " << number << ": " << (ok ? "PASS" : "FAIL") << " - " << what;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << std::endl;
    if (!ok) ++failures;
}

std::vector<Arrangement> build_corpus(size_t count) {
    std::mt19937_64 rng(20260809);
    std::vector<Arrangement> corpus;
    while (corpus.size() < count) corpus.push_back(random_sharp_arrangement(rng));
    return corpus;
}

int line_by_name(const SharpFrame& f, const std::string& name) {
    for (size_t i = 0; i < f.names.size(); ++i)
        if (f.names[i] == name) return static_cast<int>(i);
    throw std::logic_error("missing line " + name);
}

// Criterion 1: closed forms of the pencil rows at points on the leftmost
// parallel, up to units.
bool closed_forms(const std::vector<Arrangement>& corpus, std::string& detail) {
    int qualifying = 0;
    for (const auto& arr : corpus) {
        for (int ori : {1, -1}) {
            SharpFrame f = canonical_random_frame(arr, ori);
            PolarContext polar(f, choose_polar(f));
            int m0 = f.p0_multiplicity();
            if (m0 < 3) continue;
            int leftmost = f.p0_line(m0 - 1);
            for (size_t p = 0; p < f.points.size(); ++p) {
                const auto& inc = f.points[p].incident;
                if (std::find(inc.begin(), inc.end(), leftmost) == inc.end()) continue;
                int point = static_cast<int>(p);
                int mult = f.points[p].multiplicity();
                ++qualifying;
                LaurentPoly a = boundary2_entry(polar, leftmost, point, 1);
                if (!a.is_associate_of(one_minus_t_pow(mult - 1))) return false;
                LaurentPoly b = boundary2_entry(polar, leftmost, point, mult - 1);
                if (!b.is_associate_of(one_minus_t())) return false;
                for (int k = 2; k <= m0 - 2; ++k) {
                    LaurentPoly c = boundary2_entry(polar, f.p0_line(k), point, 1);
                    if (!c.is_associate_of(one_minus_t() * one_minus_t_pow(mult - 1)))
                        return false;
                    LaurentPoly d = boundary2_entry(polar, f.p0_line(k), point, mult - 1);
                    if (!d.is_associate_of(one_minus_t() * one_minus_t())) return false;
                }
            }
        }
    }
    std::ostringstream out;
    out << qualifying << " qualifying points";
    detail = out.str();
    return qualifying > 0;
}

bool chain_condition(const std::vector<Arrangement>& corpus) {
    auto check = [](const SharpFrame& f) {
        PolarContext polar(f, choose_polar(f));
        BoundaryMatrix m = assemble_boundary(polar);
        if (!column_sums_vanish(m)) return false;
        for (const auto& row : m.entries)
            for (const auto& e : row)
                if (!e.is_zero() && !e.divided_by(one_minus_t()).has_value()) return false;
        return true;
    };
    for (const auto& arr : corpus)
        if (!check(canonical_random_frame(arr))) return false;
    for (const auto& fx : fixture_catalog())
        if (!check(canonical_frame(fx))) return false;
    return true;
}

bool diagonalization_postconditions(const std::vector<Arrangement>& corpus, std::string& detail) {
    for (size_t i = 0; i < corpus.size(); ++i) {
        for (int ori : {1, -1}) {
            SharpFrame f = canonical_random_frame(corpus[i], ori);
            PolarContext polar(f, choose_polar(f));
            ReductionState state(polar);
            state.drop_sharp_row();
            try {
                state.diagonalize_m1();
            } catch (const std::exception& e) {
                detail = "chart " + std::to_string(i) + ": " + e.what();
                return false;
            }
        }
    }
    return true;
}

bool oracle_classics(std::string& detail) {
    auto begin = std::chrono::steady_clock::now();
    Arrangement tri = make_projective({ProjLine::make(Rat(1), Rat(0), Rat(0)),
                                       ProjLine::make(Rat(0), Rat(1), Rat(0)),
                                       ProjLine::make(Rat(1), Rat(1), Rat(-1))});
    SharpFrame tf = build_frame(tri, find_sharp_pairs(tri)[0], 0, 1);
    PolarContext tp(tf, choose_polar(tf));
    BettiTable t3 = milnor_betti(tp);
    bool ok = t3.b1_fiber == 2;
    for (const auto& [d, beta] : t3.betas) ok = ok && beta == 0;

    SharpFrame bf = canonical_frame(fixture("braid6"));
    PolarContext bp(bf, choose_polar(bf));
    BettiTable tb = milnor_betti(bp);
    ok = ok && tb.beta(3) == 1 && tb.beta(2) == 0 && tb.beta(6) == 0 && tb.b1_fiber == 7;

    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - begin)
                  .count();
    detail = std::to_string(ms) + " ms";
    return ok && ms < 5000;
}

bool example0_criterion(std::string& detail) {
    const Fixture& fx = fixture("example0");
    MonodromyReport report = certify(fx.arrangement);
    bool ok = report.combined.allowed_orders.empty() && report.consistent;
    for (const auto& [d, beta] : report.betti.betas) ok = ok && beta == 0;
    SharpFrame f = canonical_frame(fx);
    ok = ok && !double_point_graph(f).connected;
    // The no-cycle rule must fire in the canonical frame.
    PolarContext polar(f, choose_polar(f));
    Certificate cert = certify_frame(polar);
    bool via_rule = false;
    for (const auto& line : cert.provenance)
        if (line.find("no obstruction cycle") != std::string::npos) via_rule = true;
    if (!via_rule) detail = "no-cycle rule did not fire";
    return ok && via_rule && cert.allowed_orders.empty();
}

bool example4_criterion(std::string& detail) {
    const Fixture& fx = fixture("example4");
    SharpFrame f1 = canonical_frame(fx, 1);
    PolarContext p1(f1, choose_polar(f1));
    HomologyGraph g = build_graph(p1, GraphVariant::LastMin, GraphFamily::Zero);
    int v1 = line_by_name(f1, "V1"), v2 = line_by_name(f1, "V2"), p1b = line_by_name(f1, "P1b");
    bool cycle_found = false;
    for (const auto& c : find_obstruction_cycles(g)) {
        std::set<int> lines;
        for (int v : c.vertices) lines.insert(g.vertices[static_cast<size_t>(v)].line);
        if (lines == std::set<int>{v1, v2, p1b} && c.length == 3 &&
            bad_cycle_predicate(c, GraphVariant::LastMin))
            cycle_found = true;
    }
    if (!cycle_found) {
        detail = "documented cycle missing";
        return false;
    }
    SharpFrame f2 = canonical_frame(fx, -1);
    if (!cond_last(f2, removable_set(f2).a0)) {
        detail = "flipped chart fails the final-point condition";
        return false;
    }
    MonodromyReport report = certify(fx.arrangement);
    bool ok = report.combined.allowed_orders.empty() && report.consistent;
    for (const auto& [d, beta] : report.betti.betas) ok = ok && beta == 0;
    if (!ok) detail = "combined certificate or oracle mismatch";
    return ok;
}

bool simplicial18_criterion(std::string& detail) {
    auto begin = std::chrono::steady_clock::now();
    const Fixture& fx = fixture("simplicial18");
    SharpFrame f = canonical_frame(fx);
    LineFamilies fam = removable_set(f);
    std::set<int> expect = {line_by_name(f, "V"),
                            f.line_at_point_rank(f.anchors.front(), 2),
                            f.line_at_point_rank(f.anchors.back(), 2)};
    if (fam.a0 != expect || fam.a0prime != expect) {
        detail = "family mismatch";
        return false;
    }
    PolarContext polar(f, choose_polar(f));
    ReductionState state(polar);
    state.drop_sharp_row();
    state.diagonalize_m1();
    state.eliminate_p0_rows(EliminateMode::LastMin);
    HomologyGraph g = build_graph(polar, GraphVariant::LastMin, GraphFamily::Zero);
    if (g.vertices.size() != 3) {
        detail = "graph is not the three-row block";
        return false;
    }
    if (!state.graph_reduce(g.reduce_vertices())) {
        detail = "graph reduction blocked";
        return false;
    }
    MonodromyReport report = certify(fx.arrangement);
    bool ok = report.combined.allowed_orders.empty() && report.consistent;
    for (const auto& [d, beta] : report.betti.betas) ok = ok && beta == 0;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - begin)
                  .count();
    detail = std::to_string(ms) + " ms";
    return ok && ms < 60000;
}

bool soundness_sweep(const std::vector<Arrangement>& corpus, std::string& detail) {
    int checked = 0;
    auto verify = [&](const Arrangement& arr) {
        MonodromyReport report = certify(arr);
        ++checked;
        if (!report.consistent) return false;
        SharpFrame f = arr.mode == Mode::Affine
                           ? canonical_random_frame(arr)
                           : build_frame(arr.projective_closure(),
                                         find_sharp_pairs(arr.projective_closure())[0], 0, 1);
        if (quick_checks(f).has_value())
            for (const auto& [d, beta] : report.betti.betas)
                if (beta != 0) return false;
        return true;
    };
    for (const auto& arr : corpus)
        if (!verify(arr)) return false;
    for (const auto& fx : fixture_catalog())
        if (!verify(fx.arrangement)) return false;
    detail = std::to_string(checked) + " arrangements";
    return true;
}

bool blocking_implies_cycles(const std::vector<Arrangement>& corpus, std::string& detail) {
    int blocked_count = 0, reduced = 0;
    auto run = [&](const SharpFrame& f) {
        PolarContext polar(f, choose_polar(f));
        for (GraphVariant variant : {GraphVariant::Last, GraphVariant::LastMin}) {
            for (GraphFamily family :
                 {GraphFamily::Zero,
                  variant == GraphVariant::Last ? GraphFamily::Zero3 : GraphFamily::Zero34}) {
                HomologyGraph g;
                try {
                    g = build_graph(polar, variant, family);
                } catch (const GraphUnavailable&) {
                    continue;
                }
                std::set<int> pts;
                bool distinct = true;
                for (const auto& v : g.vertices)
                    if (!pts.insert(v.point).second) distinct = false;
                if (!distinct || g.vertices.empty()) continue;
                ReductionState state(polar);
                state.drop_sharp_row();
                state.diagonalize_m1();
                state.eliminate_p0_rows(variant == GraphVariant::Last ? EliminateMode::Last
                                                                      : EliminateMode::LastMin);
                ++reduced;
                if (!state.graph_reduce(g.reduce_vertices())) {
                    ++blocked_count;
                    if (find_obstruction_cycles(g).empty()) return false;
                }
            }
        }
        return true;
    };
    for (const auto& arr : corpus) {
        if (!run(canonical_random_frame(arr, 1))) return false;
        if (!run(canonical_random_frame(arr, -1))) return false;
    }
    for (const auto& fx : fixture_catalog()) {
        if (!run(canonical_frame(fx, 1))) return false;
        if (!run(canonical_frame(fx, -1))) return false;
    }
    detail = std::to_string(reduced) + " reductions, " + std::to_string(blocked_count) +
             " blocked";
    return true;
}

}  // namespace

int main() {
    try {
        std::vector<Arrangement> corpus = build_corpus(20);
        std::string detail;

        detail.clear();
        report(1, "pencil-row closed forms on the random corpus", closed_forms(corpus, detail),
               detail);
        report(2, "chain condition and 1-t divisibility", chain_condition(corpus));
        detail.clear();
        report(3, "diagonalization postconditions", diagonalization_postconditions(corpus, detail),
               detail);
        detail.clear();
        report(4, "oracle on the classics", oracle_classics(detail), detail);
        detail.clear();
        report(5, "example0 certificate", example0_criterion(detail), detail);
        detail.clear();
        report(6, "example4 frames and combined certificate", example4_criterion(detail), detail);
        detail.clear();
        report(7, "18-line fixture", simplicial18_criterion(detail), detail);
        detail.clear();
        report(8, "soundness sweep", soundness_sweep(corpus, detail), detail);
        detail.clear();
        report(9, "blocking implies obstruction cycles", blocking_implies_cycles(corpus, detail),
               detail);
    } catch (const std::exception& e) {
        std::cout << "acceptance suite aborted: " << e.what() << std::endl;
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
