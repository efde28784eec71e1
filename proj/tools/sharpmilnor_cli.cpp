#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sharpmilnor/arrfile.hpp"
#include "sharpmilnor/catalog.hpp"
#include "sharpmilnor/certify.hpp"
#include "sharpmilnor/graphs.hpp"
#include "sharpmilnor/svg.hpp"

namespace sm = sharpmilnor;

namespace {

std::string read_input(const std::string& path) {
    if (path.rfind("catalog:", 0) == 0) return sm::print_arr(sm::fixture(path.substr(8)).arrangement);
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct FrameSet {
    sm::Arrangement projective;
    std::vector<sm::SharpFrame> frames;
};

FrameSet all_frames(const sm::Arrangement& arr) {
    FrameSet fs;
    fs.projective = arr.mode == sm::Mode::Projective ? arr : arr.projective_closure();
    auto pairs = sm::find_sharp_pairs(fs.projective);
    if (pairs.empty()) throw std::runtime_error("not a sharp arrangement");
    for (const auto& pair : pairs)
        for (auto& f : sm::four_frames(fs.projective, pair)) fs.frames.push_back(std::move(f));
    return fs;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact monodromy engine for sharp real line arrangements"};
    app.require_subcommand(1);

    std::string input, dot_path, svg_path, variant_name = "last", family_name = "0";
    int frame_index = 0;
    bool as_json = false, reduced = false, no_gamma = false;

    auto* lattice = app.add_subcommand("lattice", "intersection points and multiplicities");
    lattice->add_option("input", input)->required();

    auto* frames = app.add_subcommand("frames", "sharp pairs and their four frames");
    frames->add_option("input", input)->required();

    auto* boundary = app.add_subcommand("boundary", "boundary matrix dump");
    boundary->add_option("input", input)->required();
    boundary->add_option("--frame", frame_index, "frame index (see 'frames')");
    boundary->add_flag("--reduced", reduced, "apply the reduction pipeline first");
    boundary->add_flag("--json", as_json);
    bool show_log = false;
    boundary->add_flag("--log", show_log, "with --reduced, dump the operation log as JSON");

    auto* homology = app.add_subcommand("homology", "eigenvalue multiplicity table");
    homology->add_option("input", input)->required();

    auto* graphs = app.add_subcommand("graphs", "certificate graphs");
    graphs->add_option("input", input)->required();
    graphs->add_option("--variant", variant_name)->check(CLI::IsMember({"last", "lastmin"}));
    graphs->add_option("--family", family_name)->check(CLI::IsMember({"0", "03", "034"}));
    graphs->add_option("--frame", frame_index);
    graphs->add_option("--dot", dot_path, "write DOT output here");

    auto* certify = app.add_subcommand("certify", "full monodromy report");
    certify->add_option("input", input)->required();
    certify->add_flag("--json", as_json);
    certify->add_flag("--no-gamma", no_gamma, "disable the double-point connectivity rule");

    auto* plot = app.add_subcommand("plot", "SVG plot of a frame");
    plot->add_option("input", input)->required();
    plot->add_option("--frame", frame_index);
    plot->add_option("--svg", svg_path)->required();

    auto* catalog = app.add_subcommand("catalog", "emit a built-in fixture");
    std::string fixture_name;
    catalog->add_option("name", fixture_name)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (catalog->parsed()) {
            std::cout << sm::print_arr(sm::fixture(fixture_name).arrangement);
            return 0;
        }
        sm::Arrangement arr = sm::parse_arr(read_input(input));

        if (lattice->parsed()) {
            auto points = sm::build_lattice(arr);
            nlohmann::json j = nlohmann::json::array();
            for (const auto& pt : points) {
                nlohmann::json p;
                p["at_infinity"] = pt.where.at_infinity;
                p["x"] = sm::rat_to_string(pt.where.x);
                p["y"] = sm::rat_to_string(pt.where.y);
                p["multiplicity"] = pt.multiplicity();
                nlohmann::json inc = nlohmann::json::array();
                for (int li : pt.incident) inc.push_back(arr.names[static_cast<size_t>(li)]);
                p["lines"] = inc;
                j.push_back(p);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (frames->parsed()) {
            FrameSet fs = all_frames(arr);
            nlohmann::json j = nlohmann::json::array();
            for (size_t i = 0; i < fs.frames.size(); ++i) {
                const auto& f = fs.frames[i];
                nlohmann::json fr;
                fr["index"] = i;
                fr["id"] = sm::frame_label(f);
                fr["pencil_multiplicity"] = f.p0_multiplicity();
                nlohmann::json anchors = nlohmann::json::array();
                for (int a : f.anchors)
                    anchors.push_back(
                        {{"y", sm::rat_to_string(f.points[static_cast<size_t>(a)].where.y)},
                         {"multiplicity", f.points[static_cast<size_t>(a)].multiplicity()}});
                fr["anchors"] = anchors;
                nlohmann::json order = nlohmann::json::array();
                for (int li : f.order) order.push_back(f.names[static_cast<size_t>(li)]);
                fr["order"] = order;
                j.push_back(fr);
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        FrameSet fs = all_frames(arr);
        if (frame_index < 0 || frame_index >= static_cast<int>(fs.frames.size()))
            throw std::runtime_error("frame index out of range");
        const sm::SharpFrame& frame = fs.frames[static_cast<size_t>(frame_index)];
        sm::PolarContext polar(frame, sm::choose_polar(frame));

        if (boundary->parsed()) {
            if (reduced) {
                sm::ReductionState state(polar);
                state.drop_sharp_row();
                state.diagonalize_m1();
                state.eliminate_p0_rows(sm::EliminateMode::Last);
                std::cout << (as_json
                                  ? sm::matrix_dump_json(frame, state.matrix(), &state.removed())
                                  : sm::matrix_dump_text(frame, state.matrix(), &state.removed()));
                if (show_log) std::cout << state.log_json() << "\n";
            } else {
                sm::BoundaryMatrix m = sm::assemble_boundary(polar);
                std::cout << (as_json ? sm::matrix_dump_json(frame, m)
                                      : sm::matrix_dump_text(frame, m));
            }
            return 0;
        }

        if (homology->parsed()) {
            sm::BettiTable t = sm::milnor_betti(polar);
            nlohmann::json j;
            j["n"] = t.n;
            nlohmann::json betas = nlohmann::json::object();
            for (const auto& [d, beta] : t.betas) betas[std::to_string(d)] = beta;
            j["betti"] = betas;
            j["b1_fiber"] = t.b1_fiber;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (graphs->parsed()) {
            sm::GraphVariant variant =
                variant_name == "last" ? sm::GraphVariant::Last : sm::GraphVariant::LastMin;
            if ((variant_name == "last" && family_name == "034") ||
                (variant_name == "lastmin" && family_name == "03"))
                throw std::runtime_error("family " + family_name +
                                         " is not defined for variant " + variant_name +
                                         "; use 0, or 03 with last / 034 with lastmin");
            sm::GraphFamily family = sm::GraphFamily::Zero;
            if (family_name == "03") family = sm::GraphFamily::Zero3;
            if (family_name == "034") family = sm::GraphFamily::Zero34;
            sm::HomologyGraph g = sm::build_graph(polar, variant, family);
            auto cycles = sm::find_obstruction_cycles(g);
            std::string dot = sm::graph_dot(frame, g, &cycles);
            if (!dot_path.empty())
                write_file(dot_path, dot);
            else
                std::cout << dot;
            std::cerr << "vertices: " << g.vertices.size() << ", edges: " << g.edges.size()
                      << ", obstruction cycles: " << cycles.size() << "\n";
            return 0;
        }

        if (certify->parsed()) {
            sm::MonodromyReport report = sm::certify(arr, !no_gamma);
            if (as_json) {
                std::cout << sm::report_json(report) << "\n";
            } else {
                std::cout << "lines (affine): " << report.n << "\n";
                std::cout << "sharp pairs:";
                for (const auto& [a, b] : report.sharp_pairs) std::cout << " (" << a << "," << b << ")";
                std::cout << "\ncombined allowed orders:";
                if (report.combined.allowed_orders.empty()) std::cout << " none (trivial monodromy)";
                for (long long d : report.combined.allowed_orders) std::cout << " " << d;
                std::cout << "\nbetti:";
                for (const auto& [d, beta] : report.betti.betas)
                    std::cout << " beta_" << d << "=" << beta;
                std::cout << "\nb1(F) = " << report.betti.b1_fiber << "\n";
                std::cout << "consistent: " << (report.consistent ? "yes" : "NO") << "\n";
            }
            return report.consistent ? 0 : 1;
        }

        if (plot->parsed()) {
            write_file(svg_path, sm::plot_svg(frame));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
