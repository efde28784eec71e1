#include "sharpmilnor/arrfile.hpp"

#include <sstream>

namespace sharpmilnor {

Arrangement parse_arr(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    bool header_seen = false;
    std::optional<Mode> mode;
    std::vector<AffLine> aff;
    std::vector<ProjLine> proj;
    std::vector<std::string> names;

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::string word;
        if (!(ls >> word)) continue;  // blank line
        if (word[0] == '#') continue;
        if (!header_seen) {
            std::string version;
            if (word != "arr" || !(ls >> version) || version != "v1")
                throw ParseError(line_no, "expected header 'arr v1'");
            header_seen = true;
            continue;
        }
        if (word == "mode") {
            std::string m;
            if (!(ls >> m)) throw ParseError(line_no, "expected 'affine' or 'projective'");
            if (m == "affine")
                mode = Mode::Affine;
            else if (m == "projective")
                mode = Mode::Projective;
            else
                throw ParseError(line_no, "unknown mode '" + m + "'");
            continue;
        }
        if (word == "line") {
            if (!mode) throw ParseError(line_no, "mode must precede line records");
            std::string name, sa, sb, sc;
            if (!(ls >> name >> sa >> sb >> sc))
                throw ParseError(line_no, "expected 'line <name> <a> <b> <c>'");
            std::string trailing;
            if (ls >> trailing) throw ParseError(line_no, "unexpected trailing field");
            auto a = parse_rat(sa), b = parse_rat(sb), c = parse_rat(sc);
            if (!a) throw ParseError(line_no, "bad rational '" + sa + "'");
            if (!b) throw ParseError(line_no, "bad rational '" + sb + "'");
            if (!c) throw ParseError(line_no, "bad rational '" + sc + "'");
            try {
                if (*mode == Mode::Affine)
                    aff.push_back(AffLine::make(*a, *b, *c));
                else
                    proj.push_back(ProjLine::make(*a, *b, *c));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
            names.push_back(name);
            continue;
        }
        throw ParseError(line_no, "unknown directive '" + word + "'");
    }
    if (!header_seen) throw ParseError(line_no, "missing header 'arr v1'");
    if (!mode) throw ParseError(line_no, "missing mode directive");
    try {
        if (*mode == Mode::Affine) return make_affine(std::move(aff), std::move(names));
        return make_projective(std::move(proj), std::move(names));
    } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
    }
}

std::string print_arr(const Arrangement& arr) {
    std::ostringstream out;
    out << "arr v1\n";
    out << "mode " << (arr.mode == Mode::Affine ? "affine" : "projective") << "\n";
    for (size_t i = 0; i < arr.size(); ++i) {
        out << "line " << arr.names[i] << " ";
        if (arr.mode == Mode::Affine) {
            const auto& l = arr.affine_lines[i];
            out << rat_to_string(l.a) << " " << rat_to_string(l.b) << " " << rat_to_string(l.c);
        } else {
            const auto& l = arr.lines[i];
            out << rat_to_string(l.a) << " " << rat_to_string(l.b) << " " << rat_to_string(l.c);
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace sharpmilnor
