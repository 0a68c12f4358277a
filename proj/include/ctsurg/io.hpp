#pragma once

#include <cctype>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/transverse.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// .front / .tfront text format
//
//   line 1: "front v1" or "tfront v1"
//   tokens: L<i> R<i> X<i>            (fronts)
//           C<i> D<i> O<i> U<i>       (transverse fronts; O = strand of
//                                      lower index over, U = under)
//   orient lines: "orient <component> <+|->"
//   '#' starts a comment to end of line. Token order is the event order.
// ---------------------------------------------------------------------------

using Diagram = std::variant<FrontDiagram, TransverseFront>;

namespace detail {

inline int parse_position(const std::string& tok, std::size_t line_no) {
    if (tok.size() < 2) throw ParseError("line " + std::to_string(line_no) + ": bare token '" + tok + "'");
    for (std::size_t i = 1; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i])))
            throw ParseError("line " + std::to_string(line_no) + ": bad position in '" + tok + "'");
    int v = 0;
    try {
        v = std::stoi(tok.substr(1));
    } catch (...) {
        throw ParseError("line " + std::to_string(line_no) + ": bad position in '" + tok + "'");
    }
    if (v < 1) throw ParseError("line " + std::to_string(line_no) + ": positions start at 1");
    return v;
}

inline void strip_comment(std::string& line) {
    std::size_t h = line.find('#');
    if (h != std::string::npos) line.erase(h);
}

template <typename Event, typename MakeEvent>
void parse_body(std::istream& in, std::vector<Event>& events, std::vector<bool>& reversed,
                MakeEvent make) {
    std::string line;
    std::size_t line_no = 1; // header consumed already
    while (std::getline(in, line)) {
        ++line_no;
        strip_comment(line);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "orient") {
                std::string idx, flag;
                if (!(ls >> idx >> flag) || (flag != "+" && flag != "-"))
                    throw ParseError("line " + std::to_string(line_no) +
                                     ": orient wants '<component> <+|->'");
                int k = -1;
                try {
                    k = std::stoi(idx);
                } catch (...) {
                    throw ParseError("line " + std::to_string(line_no) + ": bad component index");
                }
                if (k < 0) throw ParseError("line " + std::to_string(line_no) + ": bad component index");
                if (reversed.size() <= static_cast<std::size_t>(k)) reversed.resize(k + 1, false);
                reversed[k] = flag == "-";
                continue;
            }
            events.push_back(make(tok, line_no));
        }
    }
}

} // namespace detail

inline FrontDiagram parse_front_body(std::istream& in) {
    FrontDiagram d;
    detail::parse_body(in, d.events, d.reversed, [](const std::string& tok, std::size_t ln) {
        int p = detail::parse_position(tok, ln);
        switch (tok[0]) {
        case 'L': return left_cusp(p);
        case 'R': return right_cusp(p);
        case 'X': return crossing(p);
        default:
            throw ParseError("line " + std::to_string(ln) + ": unknown front token '" + tok + "'");
        }
    });
    return d;
}

inline TransverseFront parse_tfront_body(std::istream& in) {
    TransverseFront t;
    detail::parse_body(in, t.events, t.reversed, [](const std::string& tok, std::size_t ln) {
        int p = detail::parse_position(tok, ln);
        switch (tok[0]) {
        case 'C': return cup(p);
        case 'D': return cap(p);
        case 'O': return crossing_over(p);
        case 'U': return crossing_under(p);
        default:
            throw ParseError("line " + std::to_string(ln) + ": unknown transverse token '" + tok +
                             "'");
        }
    });
    return t;
}

inline Diagram parse_diagram(std::istream& in) {
    std::string header;
    if (!std::getline(in, header)) throw ParseError("empty input");
    detail::strip_comment(header);
    std::istringstream hs(header);
    std::string kind, version;
    hs >> kind >> version;
    if (version != "v1") throw ParseError("unsupported version in header '" + header + "'");
    if (kind == "front") return parse_front_body(in);
    if (kind == "tfront") return parse_tfront_body(in);
    throw ParseError("unknown diagram kind '" + kind + "'");
}

inline Diagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    return parse_diagram(in);
}

namespace detail {

inline char front_letter(FrontEventKind k) {
    switch (k) {
    case FrontEventKind::left_cusp: return 'L';
    case FrontEventKind::right_cusp: return 'R';
    default: return 'X';
    }
}

inline char transverse_letter(TransverseEventKind k) {
    switch (k) {
    case TransverseEventKind::cup: return 'C';
    case TransverseEventKind::cap: return 'D';
    case TransverseEventKind::crossing_over: return 'O';
    default: return 'U';
    }
}

template <typename Diag, typename Letter>
void write_body(std::ostream& out, const Diag& d, Letter letter) {
    int col = 0;
    for (std::size_t e = 0; e < d.events.size(); ++e) {
        out << letter(d.events[e].kind) << d.events[e].position;
        ++col;
        if (col == 16 || e + 1 == d.events.size()) {
            out << '\n';
            col = 0;
        } else {
            out << ' ';
        }
    }
    for (std::size_t k = 0; k < d.reversed.size(); ++k)
        if (d.reversed[k]) out << "orient " << k << " -\n";
}

} // namespace detail

inline void write_front(std::ostream& out, const FrontDiagram& d) {
    out << "front v1\n";
    detail::write_body(out, d, detail::front_letter);
}

inline void write_tfront(std::ostream& out, const TransverseFront& t) {
    out << "tfront v1\n";
    detail::write_body(out, t, detail::transverse_letter);
}

inline std::string to_text(const FrontDiagram& d) {
    std::ostringstream os;
    write_front(os, d);
    return os.str();
}

inline std::string to_text(const TransverseFront& t) {
    std::ostringstream os;
    write_tfront(os, t);
    return os.str();
}

// ---------------------------------------------------------------------------
// Presentation JSON
//
// { "components": [ { "source": ..., "coefficient": "+1" }, ... ],
//   "framings": [...], "rotations": [...], "linking": [[...]] }
//
// source is one of
//   { "explicit": { "front": "<ref>", "component": k } }
//   { "derived":  { "base": k, "zigzags": ["up", "down", ...] } }
//   { "abstract": {} }
// Key order is fixed for golden-file comparisons.
// ---------------------------------------------------------------------------

using json = nlohmann::ordered_json;

inline json presentation_to_json(const SurgeryPresentation& p) {
    json root;
    root["components"] = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        const SurgeryComponent& c = p.component(i);
        json jc;
        json src;
        switch (c.source.kind) {
        case SurgerySource::Kind::explicit_front:
            src["explicit"] = {{"front", c.source.front_ref},
                               {"component", c.source.front_component}};
            break;
        case SurgerySource::Kind::derived: {
            json zz = json::array();
            for (ZigzagDir z : c.source.zigzags) zz.push_back(z == ZigzagDir::up ? "up" : "down");
            src["derived"] = {{"base", c.source.base}, {"zigzags", zz}};
            break;
        }
        case SurgerySource::Kind::abstract:
            src["abstract"] = json::object();
            break;
        }
        jc["source"] = src;
        jc["coefficient"] = c.coefficient == 1 ? "+1" : "-1";
        root["components"].push_back(jc);
    }
    root["framings"] = json::array();
    root["rotations"] = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        root["framings"].push_back(p.framing(i));
        root["rotations"].push_back(p.component(i).rot);
    }
    root["linking"] = json::array();
    for (std::size_t i = 0; i < p.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < p.size(); ++j) row.push_back(p.linking(i, j));
        root["linking"].push_back(row);
    }
    return root;
}

inline SurgeryPresentation presentation_from_json(const json& root) {
    try {
        const json& jcomps = root.at("components");
        const json& jframings = root.at("framings");
        const json& jrot = root.at("rotations");
        const json& jlk = root.at("linking");
        const std::size_t n = jcomps.size();
        if (jframings.size() != n || jrot.size() != n || jlk.size() != n)
            throw ParseError("presentation: inconsistent array lengths");
        std::vector<SurgeryComponent> comps(n);
        for (std::size_t i = 0; i < n; ++i) {
            const json& jc = jcomps.at(i);
            std::string coeff = jc.at("coefficient").get<std::string>();
            if (coeff == "+1")
                comps[i].coefficient = 1;
            else if (coeff == "-1")
                comps[i].coefficient = -1;
            else
                throw ParseError("presentation: coefficient must be \"+1\" or \"-1\"");
            comps[i].rot = jrot.at(i).get<long long>();
            comps[i].tb = jframings.at(i).get<long long>() - comps[i].coefficient;
            const json& src = jc.at("source");
            if (src.contains("explicit")) {
                comps[i].source = SurgerySource::explicit_from(
                    src["explicit"].at("front").get<std::string>(),
                    src["explicit"].at("component").get<int>());
            } else if (src.contains("derived")) {
                std::vector<ZigzagDir> zz;
                for (const auto& z : src["derived"].at("zigzags")) {
                    std::string s = z.get<std::string>();
                    if (s != "up" && s != "down") throw ParseError("presentation: bad zigzag");
                    zz.push_back(s == "up" ? ZigzagDir::up : ZigzagDir::down);
                }
                comps[i].source =
                    SurgerySource::derived_from(src["derived"].at("base").get<int>(), zz);
            } else if (src.contains("abstract")) {
                comps[i].source = SurgerySource::abstract();
            } else {
                throw ParseError("presentation: unknown source kind");
            }
        }
        std::vector<std::vector<long long>> lk(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            if (jlk.at(i).size() != n) throw ParseError("presentation: ragged linking matrix");
            for (std::size_t j = 0; j < n; ++j) lk[i][j] = jlk.at(i).at(j).get<long long>();
        }
        return SurgeryPresentation(std::move(comps), std::move(lk));
    } catch (const json::exception& e) {
        throw ParseError(std::string("presentation: ") + e.what());
    }
}

inline SurgeryPresentation parse_presentation(std::istream& in) {
    json root;
    try {
        in >> root;
    } catch (const json::exception& e) {
        throw ParseError(std::string("presentation: ") + e.what());
    }
    return presentation_from_json(root);
}

inline std::string presentation_text(const SurgeryPresentation& p) {
    return presentation_to_json(p).dump(2) + "\n";
}

} // namespace ctsurg
