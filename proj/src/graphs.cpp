#include "sharpmilnor/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace sharpmilnor {

namespace {

struct LineDesc {
    int pencil;  // 0 for the vertical pencil, 1 + anchor position otherwise
    int rank;    // k with line = H_k of its pencil
    int mult;    // pencil multiplicity
};

LineDesc describe(const SharpFrame& f, int line) {
    if (f.lines[static_cast<size_t>(line)].vertical())
        return LineDesc{0, f.p0_index(line), f.p0_multiplicity()};
    int a = f.anchor_of_line[static_cast<size_t>(line)];
    int anchor_pt = f.anchors[static_cast<size_t>(a)];
    return LineDesc{a + 1, f.rank_in_point(anchor_pt, line),
                    f.points[static_cast<size_t>(anchor_pt)].multiplicity()};
}

bool h2_form(const SharpFrame& f, int line) {
    LineDesc d = describe(f, line);
    if (d.pencil == 0) return f.p0_multiplicity() > 3 && d.rank == 2;
    return d.rank == 2;
}

EdgeClass classify_last(const LineDesc& s, const LineDesc& t, EdgeCause cause, EdgeOrder ord) {
    if (cause == EdgeCause::S) {
        if (t.pencil >= 1 && t.rank == 2 && s.pencil < t.pencil && ord == EdgeOrder::Lt)
            return EdgeClass::E1;
        if (s.rank == 2 && t.pencil >= 1 && t.rank == t.mult - 1 && t.pencil < s.pencil &&
            ord == EdgeOrder::Gt)
            return EdgeClass::E2;
        if (t.pencil == 0 && t.rank == t.mult - 1 && s.pencil >= 1 && ord == EdgeOrder::Gt)
            return EdgeClass::E3;
    } else if (cause == EdgeCause::UMax || cause == EdgeCause::N) {
        if (cause == EdgeCause::N) return EdgeClass::E4;  // pencil-neighbor fill-in
        if (t.pencil == s.pencil && s.pencil >= 1 && t.rank == s.rank - 1 && ord == EdgeOrder::Gt)
            return EdgeClass::E4;
        if (t.pencil >= 1 && t.rank == t.mult - 1 && t.pencil > 0 && t.pencil < s.pencil &&
            ord == EdgeOrder::Gt)
            return EdgeClass::E5;
        if (s.rank == 2 && t.pencil >= 1 && t.rank == t.mult - 2 && t.pencil > 0 &&
            t.pencil < s.pencil && ord == EdgeOrder::Gt)
            return EdgeClass::E6;
    }
    return EdgeClass::Unclassified;
}

EdgeClass classify_lastmin(const LineDesc& s, bool s_min, const LineDesc& t, EdgeCause cause,
                           EdgeOrder ord) {
    if (!s_min) {
        if (cause == EdgeCause::S && t.pencil >= 1 && t.rank == 2 && s.pencil < t.pencil &&
            ord == EdgeOrder::Lt)
            return EdgeClass::E1;
        if ((cause == EdgeCause::S || cause == EdgeCause::H0) && t.pencil == 0 &&
            s.pencil >= 1 && ord == EdgeOrder::Gt)
            return EdgeClass::E3;
        if (cause == EdgeCause::N) return EdgeClass::E4;  // pencil-neighbor fill-in
        if ((cause == EdgeCause::UMax || cause == EdgeCause::H0) &&
            t.pencil == s.pencil && t.rank < s.rank)
            return EdgeClass::E4;  // same-pencil drop; reversed order in the vertical pencil
        if (cause == EdgeCause::UMax && t.pencil >= 1 && t.rank == t.mult - 1 &&
            t.pencil > 0 && t.pencil < s.pencil && ord == EdgeOrder::Gt)
            return EdgeClass::E5;
    } else {
        if (s.pencil == 0) {
            // The first parallel's second point sees the incident pencil
            // directly; its edges take the min-vertex classes.
            if (cause == EdgeCause::S) return EdgeClass::E7;
            if (cause == EdgeCause::UMax) return EdgeClass::E8;
        }
        if (cause == EdgeCause::S && ord == EdgeOrder::Gt &&
            ((t.pencil >= 1 && t.rank == 2 && t.pencil < s.pencil) || t.pencil == 0))
            return EdgeClass::E7;
        if (cause == EdgeCause::UMax && t.pencil >= 1 && t.rank == t.mult - 1 &&
            s.pencil < t.pencil && ord == EdgeOrder::Lt)
            return EdgeClass::E8;
    }
    return EdgeClass::Unclassified;
}

}  // namespace

long long max_cycle_budget() {
    if (const char* env = std::getenv("SHARPMILNOR_MAX_CYCLES")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 1000000;
}

HomologyGraph build_graph(const PolarContext& polar, GraphVariant variant, GraphFamily family) {
    const SharpFrame& f = polar.frame();
    HomologyGraph g;
    g.variant = variant;
    g.family = family;

    LineFamilies fams = removable_set(f);
    const std::set<int>* lines = nullptr;
    switch (variant) {
        case GraphVariant::Full:
        case GraphVariant::Reduced:
            lines = &fams.aprime;
            break;
        case GraphVariant::Last:
            lines = family == GraphFamily::Zero3 ? &fams.a03 : &fams.a0;
            break;
        case GraphVariant::LastMin:
            lines = family == GraphFamily::Zero34 ? &fams.a034 : &fams.a0prime;
            break;
    }

    if (variant == GraphVariant::Full) {
        for (int li = 0; li < f.n(); ++li)
            for (int p : f.points_on_line[static_cast<size_t>(li)])
                g.vertices.push_back(GraphVertex{li, p, false});
    } else if (variant == GraphVariant::Reduced) {
        for (int li : *lines)
            for (int p : f.points_on_line[static_cast<size_t>(li)])
                if (!f.is_anchor_point(p)) g.vertices.push_back(GraphVertex{li, p, false});
    } else if (variant == GraphVariant::Last) {
        for (int li : *lines) {
            int p = f.last_point(li);
            if (f.is_anchor_point(p))
                throw GraphUnavailable("final point of " +
                                       f.names[static_cast<size_t>(li)] +
                                       " lies on the sharp line");
            g.vertices.push_back(GraphVertex{li, p, false});
        }
    } else {
        for (int li : *lines) {
            bool use_min = h2_form(f, li);
            if (f.points_on_line[static_cast<size_t>(li)].size() < 2)
                throw GraphUnavailable("line " + f.names[static_cast<size_t>(li)] +
                                       " has a single lattice point");
            int p = use_min ? f.min_point(li) : f.last_point(li);
            if (f.is_anchor_point(p))
                throw GraphUnavailable("vertex point of " +
                                       f.names[static_cast<size_t>(li)] +
                                       " lies on the sharp line");
            g.vertices.push_back(GraphVertex{li, p, use_min});
        }
    }

    // Membership of a target line in the edge set of a source point.
    auto edge_cause = [&](const GraphVertex& v, int target) -> std::optional<EdgeCause> {
        const auto& inc = f.points[static_cast<size_t>(v.point)].incident;
        if (std::find(inc.begin(), inc.end(), target) != inc.end()) return EdgeCause::S;
        if (variant == GraphVariant::Full) {
            if (polar.upper_cone(v.point).count(target)) return EdgeCause::UMax;
            return std::nullopt;
        }
        std::set<int> umax = variant == GraphVariant::LastMin
                                 ? polar.upper_cone_max_lastmin(v.point)
                                 : polar.upper_cone_max(v.point);
        if (umax.count(target)) {
            if (f.lines[static_cast<size_t>(target)].vertical()) return EdgeCause::H0;
            return EdgeCause::UMax;
        }
        auto nb = polar.neighbor(v.point);
        if (nb && *nb == target) return EdgeCause::N;
        return std::nullopt;
    };

    for (size_t ui = 0; ui < g.vertices.size(); ++ui) {
        for (size_t vi = 0; vi < g.vertices.size(); ++vi) {
            const auto& u = g.vertices[ui];
            const auto& v = g.vertices[vi];
            if (u.line == v.line) continue;
            auto cause = edge_cause(u, v.line);
            if (!cause) continue;
            GraphEdge e;
            e.from = static_cast<int>(ui);
            e.to = static_cast<int>(vi);
            e.order = f.before(u.line, v.line) ? EdgeOrder::Lt : EdgeOrder::Gt;
            e.cause = *cause;
            if (variant == GraphVariant::Last)
                e.cls = classify_last(describe(f, u.line), describe(f, v.line), e.cause, e.order);
            else if (variant == GraphVariant::LastMin)
                e.cls = classify_lastmin(describe(f, u.line), u.min_vertex, describe(f, v.line),
                                         e.cause, e.order);
            if ((variant == GraphVariant::Last || variant == GraphVariant::LastMin) &&
                e.cls == EdgeClass::Unclassified) {
                LineDesc sd = describe(f, u.line), td = describe(f, v.line);
                std::ostringstream out;
                out << "unclassifiable edge " << f.names[static_cast<size_t>(u.line)] << " -> "
                    << f.names[static_cast<size_t>(v.line)] << " [source pencil " << sd.pencil
                    << " rank " << sd.rank << "/" << sd.mult << (u.min_vertex ? " min" : " last")
                    << ", target pencil " << td.pencil << " rank " << td.rank << "/" << td.mult
                    << ", cause "
                    << (e.cause == EdgeCause::S
                            ? "S"
                            : e.cause == EdgeCause::UMax
                                  ? "UMax"
                                  : e.cause == EdgeCause::N ? "N" : "H0")
                    << ", order " << (e.order == EdgeOrder::Lt ? "lt" : "gt") << "]";
                throw std::logic_error(out.str());
            }
            g.edges.push_back(e);
        }
    }
    return g;
}

std::vector<ObstructionCycle> find_obstruction_cycles(const HomologyGraph& graph) {
    size_t nv = graph.vertices.size();
    std::vector<std::vector<std::pair<int, EdgeOrder>>> adj(nv);
    for (const auto& e : graph.edges)
        adj[static_cast<size_t>(e.from)].push_back({e.to, e.order});

    long long budget = max_cycle_budget();
    long long found = 0;
    std::vector<ObstructionCycle> result;

    // Enumerate simple cycles anchored at their minimal vertex.
    std::vector<int> stack;
    std::vector<EdgeOrder> labels;
    std::vector<bool> on_stack(nv, false);

    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (auto [w, lab] : adj[static_cast<size_t>(v)]) {
            if (w == start) {
                if (++found > budget) throw GraphTooCyclic("graph too cyclic");
                // Candidate cycle: stack vertices + labels + closing label.
                std::vector<EdgeOrder> cyc_labels = labels;
                cyc_labels.push_back(lab);
                int switches = 0;
                size_t l = cyc_labels.size();
                for (size_t i = 0; i < l; ++i)
                    if (cyc_labels[i] != cyc_labels[(i + 1) % l]) ++switches;
                if (switches != 2) continue;
                ObstructionCycle c;
                c.vertices = stack;
                c.length = static_cast<int>(l);
                for (size_t i = 0; i < l; ++i) {
                    EdgeOrder into = cyc_labels[(i + l - 1) % l];
                    EdgeOrder out = cyc_labels[i];
                    if (into == EdgeOrder::Lt && out == EdgeOrder::Gt)
                        c.peak = stack[i];
                    else if (into == EdgeOrder::Gt && out == EdgeOrder::Lt)
                        c.hbar = stack[i];  // provisional: valley
                }
                for (auto lbl : cyc_labels)
                    (lbl == EdgeOrder::Lt ? c.ascents : c.descents)++;
                // Successor of the peak.
                for (size_t i = 0; i < l; ++i)
                    if (stack[i] == c.peak) c.after_peak = stack[(i + 1) % l];
                int valley = c.hbar;
                auto succ = [&](int vertex) {
                    for (size_t i = 0; i < l; ++i)
                        if (stack[i] == vertex) return stack[(i + 1) % l];
                    return -1;
                };
                auto pred = [&](int vertex) {
                    for (size_t i = 0; i < l; ++i)
                        if (stack[i] == vertex) return stack[(i + l - 1) % l];
                    return -1;
                };
                if (c.descents == 1) {
                    c.relation = CycleRelation::BarAfter;  // closing edge ascends
                    c.hprime = valley;
                    c.hbar = succ(valley);
                } else if (c.ascents == 1) {
                    c.relation = CycleRelation::BarBefore;  // closing edge descends
                    c.hbar = valley;
                    c.hprime = pred(valley);
                } else {
                    // Both parses available; keep the one that flags the cycle.
                    if (c.length % 2 == 1) {
                        c.relation = CycleRelation::BarAfter;
                        c.hprime = valley;
                        c.hbar = succ(valley);
                    } else {
                        c.relation = CycleRelation::BarBefore;
                        c.hbar = valley;
                        c.hprime = pred(valley);
                    }
                }
                result.push_back(std::move(c));
                continue;
            }
            if (w < start || on_stack[static_cast<size_t>(w)]) continue;
            stack.push_back(w);
            labels.push_back(lab);
            on_stack[static_cast<size_t>(w)] = true;
            dfs(start, w);
            on_stack[static_cast<size_t>(w)] = false;
            stack.pop_back();
            labels.pop_back();
        }
    };

    for (size_t s = 0; s < nv; ++s) {
        stack = {static_cast<int>(s)};
        labels.clear();
        on_stack.assign(nv, false);
        on_stack[s] = true;
        dfs(static_cast<int>(s), static_cast<int>(s));
    }
    return result;
}

bool bad_cycle_predicate(const ObstructionCycle& cycle, GraphVariant variant) {
    if (variant == GraphVariant::Last) return true;
    bool odd = cycle.length % 2 == 1;
    return (cycle.relation == CycleRelation::BarAfter && odd) ||
           (cycle.relation == CycleRelation::BarBefore && !odd);
}

namespace {

DoublePointGraph double_point_graph_impl(int n, const std::vector<LatticePoint>& points) {
    DoublePointGraph g;
    g.lines = n;
    std::vector<int> parent(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<size_t>(x)] != x) x = parent[static_cast<size_t>(x)];
        return x;
    };
    for (const auto& pt : points) {
        if (pt.multiplicity() != 2) continue;
        g.edges.push_back({pt.incident[0], pt.incident[1]});
        parent[static_cast<size_t>(find(pt.incident[0]))] = find(pt.incident[1]);
    }
    int roots = 0;
    for (int i = 0; i < n; ++i)
        if (find(i) == i) ++roots;
    g.connected = roots <= 1;
    return g;
}

}  // namespace

DoublePointGraph double_point_graph(const SharpFrame& frame) {
    return double_point_graph_impl(frame.n(), frame.points);
}

DoublePointGraph double_point_graph(const Arrangement& affine) {
    if (affine.mode != Mode::Affine) throw std::invalid_argument("affine arrangement required");
    return double_point_graph_impl(static_cast<int>(affine.size()), build_lattice(affine));
}

std::string graph_dot(const SharpFrame& frame, const HomologyGraph& graph,
                      const std::vector<ObstructionCycle>* highlight) {
    std::set<int> marked, designated;
    if (highlight)
        for (const auto& c : *highlight) {
            for (int v : c.vertices) marked.insert(v);
            for (int v : {c.peak, c.hbar, c.hprime})
                if (v >= 0) designated.insert(v);
        }
    auto class_name = [](EdgeClass c) {
        switch (c) {
            case EdgeClass::E1: return "E1";
            case EdgeClass::E2: return "E2";
            case EdgeClass::E3: return "E3";
            case EdgeClass::E4: return "E4";
            case EdgeClass::E5: return "E5";
            case EdgeClass::E6: return "E6";
            case EdgeClass::E7: return "E7";
            case EdgeClass::E8: return "E8";
            default: return "";
        }
    };
    std::ostringstream out;
    out << "digraph homology {\n";
    for (size_t i = 0; i < graph.vertices.size(); ++i) {
        const auto& v = graph.vertices[i];
        out << "  v" << i << " [label=\"" << frame.names[static_cast<size_t>(v.line)] << " @ "
            << (v.min_vertex ? "min" : "last") << "\"";
        if (designated.count(static_cast<int>(i)))
            out << ", style=filled, fillcolor=indianred";
        else if (marked.count(static_cast<int>(i)))
            out << ", style=filled, fillcolor=lightcoral";
        out << "];\n";
    }
    for (const auto& e : graph.edges) {
        out << "  v" << e.from << " -> v" << e.to << " [label=\""
            << (e.order == EdgeOrder::Lt ? "⊲" : "⊳");
        const char* cn = class_name(e.cls);
        if (*cn) out << " " << cn;
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace sharpmilnor
