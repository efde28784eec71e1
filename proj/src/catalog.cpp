#include "sharpmilnor/catalog.hpp"

#include <algorithm>
#include <stdexcept>

namespace sharpmilnor {

namespace {

AffLine aff(long long a, long long b, long long c) {
    return AffLine::make(Rat(a), Rat(b), Rat(c));
}

ProjLine proj(long long a, long long b, long long c) {
    return ProjLine::make(Rat(a), Rat(b), Rat(c));
}

// y = s*x + y0 as a projective line.
ProjLine slanted(const Rat& s, const Rat& y0) {
    return ProjLine::make(-s, Rat(1), -y0);
}

Fixture make_t1() {
    Fixture fx;
    fx.name = "t1";
    fx.arrangement = make_affine(
        {aff(1, 0, -1), aff(1, 0, 0), aff(1, -1, 0), aff(2, -1, 0)},
        {"V1", "S", "D1", "D2"});
    fx.infinity_name = "Hinf";
    fx.sharp_name = "S";
    fx.p0_multiplicity = 3;
    fx.anchor_multiplicities = {3};
    return fx;
}

Fixture make_braid6() {
    Fixture fx;
    fx.name = "braid6";
    fx.arrangement = make_projective(
        {proj(1, 0, 0), proj(0, 1, 0), proj(1, 0, -1), proj(0, 1, -1), proj(1, -1, 0),
         proj(1, 1, -1)},
        {"x", "y", "x1", "y1", "d", "s"});
    fx.infinity_name = "y";
    fx.sharp_name = "d";
    fx.p0_multiplicity = 3;
    fx.anchor_multiplicities = {3, 2};
    return fx;
}

Fixture make_example0() {
    Fixture fx;
    fx.name = "example0";
    // Anchors at y = 1..6 with multiplicities (2,2,2,3,2,4); one parallel.
    // Every point of the rank-2 line at the fourth anchor has multiplicity 3.
    std::vector<AffLine> lines = {
        aff(1, 0, -1),    // V: x = -1
        aff(1, 0, 0),     // sharp: x = 0
        aff(1, 1, 1),     // y = 1 - x
        aff(0, 1, 2),     // y = 2
        aff(0, 1, 3),     // y = 3
        aff(0, 1, 4),     // y = 4
        aff(-1, 4, 16),   // y = 4 + x/4
        aff(-1, 2, 10),   // y = 5 + x/2
        aff(-2, 3, 18),   // y = 6 + 2x/3
        aff(-1, 1, 6),    // y = 6 + x
        aff(-2, 1, 6),    // y = 6 + 2x
    };
    fx.arrangement = make_affine(std::move(lines), {"V", "S", "A1", "A2", "A3", "A4a", "A4b",
                                                    "A5", "A6a", "A6b", "A6c"});
    fx.infinity_name = "Hinf";
    fx.sharp_name = "S";
    fx.p0_multiplicity = 3;
    fx.anchor_multiplicities = {2, 2, 2, 3, 2, 4};
    return fx;
}

Fixture make_example4() {
    Fixture fx;
    fx.name = "example4";
    std::vector<ProjLine> lines = {
        proj(1, 0, 0),            // sharp: x = 0
        proj(1, 0, 1),            // x = -1
        proj(1, 0, 2),            // x = -2
        slanted(Rat(-2), Rat(2)),  // y = 2 - 2x
        slanted(Rat(-1), Rat(2)),  // y = 2 - x
        slanted(Rat(0), Rat(2)),   // y = 2
        slanted(Rat(0), Rat(3)),   // y = 3
        slanted(Rat(0), Rat(4)),   // y = 4
        slanted(Rat(1), Rat(4)),   // y = 4 + x
        slanted(Rat(1), Rat(5)),   // y = 5 + x
        slanted(Rat(1), Rat(6)),   // y = 6 + x
        proj(0, 0, 1),             // line at infinity of the drawn chart
    };
    fx.arrangement = make_projective(
        std::move(lines), {"S", "V1", "V2", "P1a", "P1b", "P1c", "P2a", "P3a", "P3b", "P4a",
                           "P5a", "Hinf"});
    fx.infinity_name = "Hinf";
    fx.sharp_name = "S";
    fx.p0_multiplicity = 4;
    fx.anchor_multiplicities = {4, 2, 3, 2, 2};
    return fx;
}

Fixture make_simplicial18() {
    Fixture fx;
    fx.name = "simplicial18";
    std::vector<ProjLine> lines;
    std::vector<std::string> names;
    lines.push_back(proj(1, 0, 0));
    names.push_back("S");
    lines.push_back(proj(1, 0, 1));
    names.push_back("V");
    struct AnchorGroup {
        long long y;
        std::vector<long long> slopes;
    };
    std::vector<AnchorGroup> anchors = {{-3, {1, 2}},   {-2, {3, 4, 5}}, {-1, {6}},
                                        {0, {7, 8, 9}}, {1, {10}},       {2, {11, 12, 13}},
                                        {3, {14, 15}}};
    int counter = 0;
    for (const auto& group : anchors)
        for (long long s : group.slopes) {
            lines.push_back(slanted(Rat(s), Rat(group.y)));
            names.push_back("L" + std::to_string(++counter));
        }
    lines.push_back(proj(0, 0, 1));
    names.push_back("Hinf");
    fx.arrangement = make_projective(std::move(lines), std::move(names));
    fx.infinity_name = "Hinf";
    fx.sharp_name = "S";
    fx.p0_multiplicity = 3;
    fx.anchor_multiplicities = {3, 4, 2, 4, 2, 4, 3};
    return fx;
}

Fixture make_figure1like() {
    Fixture fx;
    fx.name = "figure1like";
    std::vector<AffLine> lines = {
        aff(1, 0, -3), aff(1, 0, -2), aff(1, 0, -1), aff(1, 0, 0),
        aff(1, -1, 0),   // y = x
        aff(2, -1, 0),   // y = 2x
        aff(3, -1, -10),  // y = 3x + 10
        aff(4, -1, -10),  // y = 4x + 10
        aff(5, -1, -20),  // y = 5x + 20
        aff(6, -1, -20),  // y = 6x + 20
    };
    fx.arrangement = make_affine(std::move(lines), {"V3", "V2", "V1", "S", "P1a", "P1b", "P2a",
                                                    "P2b", "P3a", "P3b"});
    fx.infinity_name = "Hinf";
    fx.sharp_name = "S";
    fx.p0_multiplicity = 5;
    fx.anchor_multiplicities = {3, 3, 3};
    return fx;
}

void verify_signature(const Fixture& fx) {
    SharpFrame frame = canonical_frame(fx);
    if (frame.p0_multiplicity() != fx.p0_multiplicity)
        throw std::logic_error(fx.name + ": pencil multiplicity mismatch");
    std::vector<int> mults;
    for (int anchor : frame.anchors)
        mults.push_back(frame.points[static_cast<size_t>(anchor)].multiplicity());
    if (mults != fx.anchor_multiplicities)
        throw std::logic_error(fx.name + ": anchor multiplicity signature mismatch");
}

}  // namespace

SharpFrame canonical_frame(const Fixture& fx, int orientation) {
    Arrangement proj = fx.arrangement.projective_closure();
    auto index_of = [&](const std::string& name) {
        auto it = std::find(proj.names.begin(), proj.names.end(), name);
        if (it == proj.names.end()) throw std::logic_error(fx.name + ": missing line " + name);
        return static_cast<int>(it - proj.names.begin());
    };
    int inf = index_of(fx.infinity_name);
    int sharp = index_of(fx.sharp_name);
    auto pairs = find_sharp_pairs(proj);
    bool found = false;
    for (const auto& p : pairs)
        if ((p.first == inf && p.second == sharp) || (p.first == sharp && p.second == inf))
            found = true;
    if (!found) throw std::logic_error(fx.name + ": canonical pair is not sharp");
    SharpPair pair{inf, sharp};
    return build_frame(proj, pair, 0, orientation);
}

const std::vector<Fixture>& fixture_catalog() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> all = {make_t1(),       make_braid6(),       make_example0(),
                                    make_example4(), make_simplicial18(), make_figure1like()};
        for (const auto& fx : all) verify_signature(fx);
        return all;
    }();
    return fixtures;
}

const Fixture& fixture(const std::string& name) {
    for (const auto& fx : fixture_catalog())
        if (fx.name == name) return fx;
    throw std::invalid_argument("unknown fixture: " + name);
}

}  // namespace sharpmilnor
