#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"

#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"
#include "ctsurg/homotopy.hpp"
#include "ctsurg/io.hpp"
#include "ctsurg/lutz.hpp"
#include "ctsurg/render.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/transverse.hpp"

#if defined(__unix__) || defined(__APPLE__)
#include <unistd.h>
#endif

namespace ctsurg::cli {

// exit codes: 0 success, 1 parse error, 2 validation error,
// 3 undefined invariant, 4 usage error
enum ExitCode { exit_ok = 0, exit_parse = 1, exit_invalid = 2, exit_undefined = 3, exit_usage = 4 };

namespace detail {

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_sink(const std::string& path, const std::string& content, std::ostream& out) {
    if (path == "-") {
        out << content;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open '" + path + "' for writing");
    f << content;
}

inline Diagram load_diagram(const std::string& path, std::istream& in) {
    return parse_diagram(read_source(path, in));
}

inline SurgeryPresentation load_presentation(const std::string& path, std::istream& in) {
    std::istringstream ss(read_source(path, in));
    return parse_presentation(ss);
}

inline std::vector<int> parse_coeff_list(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::istringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+1" || tok == "1")
            out.push_back(1);
        else if (tok == "-1")
            out.push_back(-1);
        else
            throw ParseError("coefficient list entries must be +1 or -1");
    }
    return out;
}

inline bool styled(const std::ostream& out) {
#if defined(__unix__) || defined(__APPLE__)
    return &out == &std::cout && isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;
#else
    (void)out;
    return false;
#endif
}

inline std::string verdict(bool pass, const std::ostream& out) {
    if (!styled(out)) return pass ? "PASS" : "FAIL";
    return pass ? "\033[32mPASS\033[0m" : "\033[31mFAIL\033[0m";
}

inline LutzSign parse_sign(const std::string& s) {
    if (s == "pos" || s == "positive" || s == "+") return LutzSign::positive;
    if (s == "neg" || s == "negative" || s == "-") return LutzSign::negative;
    throw ParseError("sign must be pos or neg");
}

// provenance label for presentation sources: stable across working dirs
inline std::string source_label(const std::string& path) {
    if (path == "-") return "stdin";
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? path : path.substr(slash + 1);
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"front-diagram calculus for contact (+-1)-surgery: Lutz twist pairs, handle "
                 "slides, and exact homotopy obstructions"};
    app.name("ctsurg");
    app.require_subcommand(1);

    std::string file = "-", outpath = "-", coeffs, signstr = "pos", format = "ascii";
    std::string explicit_front_path;
    int component = 0;
    long long n_twists = 0;
    int slide_from = 0, slide_over = 0, slide_sign = 1;
    int knot = 0, meridian = 1;

    CLI::App* c_validate = app.add_subcommand("validate", "check a .front/.tfront file");
    c_validate->add_option("file", file, "diagram file, - for stdin");

    CLI::App* c_inv = app.add_subcommand("invariants", "classical invariants of a diagram");
    c_inv->add_option("file", file, "diagram file, - for stdin");

    CLI::App* c_lutz =
        app.add_subcommand("lutz", "surgery pair effecting a Lutz twist along a component");
    c_lutz->add_option("file", file, "front file, - for stdin");
    c_lutz->add_option("--component", component, "component to twist along (default 0)");
    c_lutz->add_option("--sign", signstr, "pos (up-zigzags) or neg (down-zigzags)");
    c_lutz->add_option("--coeffs", coeffs, "comma list of +-1 for the other components");
    c_lutz->add_option("--out", outpath, "presentation JSON sink, - for stdout");
    c_lutz->add_option("--explicit-front", explicit_front_path,
                       "also write the fully drawn two-component front here");

    CLI::App* c_d3 = app.add_subcommand("d3", "d3 invariant of a presentation");
    c_d3->add_option("file", file, "presentation JSON, - for stdin");

    CLI::App* c_c1 = app.add_subcommand("c1", "first Chern class of a presentation");
    c_c1->add_option("file", file, "presentation JSON, - for stdin");

    CLI::App* c_slide = app.add_subcommand("slide", "handle slide: component i over component j");
    c_slide->add_option("file", file, "presentation JSON, - for stdin");
    c_slide->add_option("--from", slide_from, "index i of the slid component")->required();
    c_slide->add_option("--over", slide_over, "index j slid over")->required();
    c_slide->add_option("--sign", slide_sign, "+1 or -1");
    c_slide->add_option("--out", outpath, "sink, - for stdout");

    CLI::App* c_cancel = app.add_subcommand("cancel", "remove a knot with its 0-framed meridian");
    c_cancel->add_option("file", file, "presentation JSON, - for stdin");
    c_cancel->add_option("--knot", knot, "index of the knot")->required();
    c_cancel->add_option("--meridian", meridian, "index of the meridian")->required();
    c_cancel->add_option("--out", outpath, "sink, - for stdout");

    CLI::App* c_verify = app.add_subcommand(
        "verify-lutz", "check triviality, the overtwisted framing, and the d3 change");
    c_verify->add_option("file", file, "front file, - for stdin");
    c_verify->add_option("--component", component, "component to twist along (default 0)");
    c_verify->add_option("--sign", signstr, "pos or neg");
    c_verify->add_option("--coeffs", coeffs, "comma list of +-1 for the other components");

    CLI::App* c_s3 = app.add_subcommand("s3", "overtwisted S^3 presentation with d3 = n - 1/2");
    c_s3->add_option("--n", n_twists, "nonzero twist count")->required();
    c_s3->add_option("--out", outpath, "sink, - for stdout");

    CLI::App* c_render = app.add_subcommand("render", "draw a diagram");
    c_render->add_option("file", file, "diagram file, - for stdin");
    c_render->add_option("--format", format, "ascii or svg");
    c_render->add_option("--out", outpath, "sink, - for stdout");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        if (*c_validate) {
            Diagram d = detail::load_diagram(file, in);
            if (std::holds_alternative<FrontDiagram>(d)) {
                ValidationReport r = validate(std::get<FrontDiagram>(d));
                if (r.valid()) {
                    out << "valid front: " << r.component_count << " component(s)\n";
                    return exit_ok;
                }
                out << "invalid front:\n";
                for (const auto& is : r.issues) out << "  event " << is.event << ": " << is.message << "\n";
                return exit_invalid;
            }
            TransverseValidationReport r = validate_transverse(std::get<TransverseFront>(d));
            if (r.valid()) {
                out << "valid transverse front: " << r.component_count << " component(s)\n";
                return exit_ok;
            }
            out << "invalid transverse front:\n";
            for (const auto& is : r.issues) out << "  event " << is.event << ": " << is.message << "\n";
            return exit_invalid;
        }

        if (*c_inv) {
            Diagram d = detail::load_diagram(file, in);
            if (std::holds_alternative<FrontDiagram>(d)) {
                ClassicalInvariants inv = classical_invariants(std::get<FrontDiagram>(d));
                for (std::size_t c = 0; c < inv.components.size(); ++c) {
                    const auto& ci = inv.components[c];
                    out << "component " << c << ": tb=" << ci.tb << " rot=" << ci.rot
                        << " writhe=" << ci.writhe << " cusps=" << ci.up_cusps + ci.down_cusps
                        << " (" << ci.up_cusps << " up, " << ci.down_cusps << " down)\n";
                }
                for (std::size_t i = 0; i < inv.components.size(); ++i)
                    for (std::size_t j = i + 1; j < inv.components.size(); ++j)
                        out << "lk(" << i << "," << j << ")=" << inv.linking[i][j] << "\n";
            } else {
                const TransverseFront& t = std::get<TransverseFront>(d);
                TransverseValidationReport r = validate_transverse(t);
                if (!r.valid())
                    throw InvalidTransverseFront("invalid transverse front: " +
                                                 r.issues.front().message);
                for (int c = 0; c < r.component_count; ++c)
                    out << "component " << c << ": sl=" << self_linking(t, c) << "\n";
            }
            return exit_ok;
        }

        if (*c_lutz) {
            Diagram d = detail::load_diagram(file, in);
            if (!std::holds_alternative<FrontDiagram>(d))
                throw InvalidDiagram("lutz wants a Legendrian front; convert the transverse "
                                     "front first or use lutz on its Legendrian resolution");
            const FrontDiagram& f = std::get<FrontDiagram>(d);
            SurgeryPresentation p = lutz_pair(f, component, detail::parse_sign(signstr),
                                              detail::parse_coeff_list(coeffs),
                                              detail::source_label(file));
            detail::write_sink(outpath, presentation_text(p), out);
            if (!explicit_front_path.empty()) {
                FrontDiagram two = explicit_lutz_front(f, component, detail::parse_sign(signstr));
                detail::write_sink(explicit_front_path, to_text(two), out);
            }
            return exit_ok;
        }

        if (*c_d3) {
            SurgeryPresentation p = detail::load_presentation(file, in);
            out << d3(p).to_string() << "\n";
            return exit_ok;
        }

        if (*c_c1) {
            SurgeryPresentation p = detail::load_presentation(file, in);
            ChernClass c = chern_class(p);
            json j;
            j["factors"] = json::array();
            for (const BigInt& f : c.factors) j["factors"].push_back(f.to_long_long());
            j["coordinates"] = json::array();
            for (const BigInt& v : c.coordinates) j["coordinates"].push_back(v.to_long_long());
            out << j.dump() << "\n";
            return exit_ok;
        }

        if (*c_slide) {
            SurgeryPresentation p = detail::load_presentation(file, in);
            SurgeryPresentation s = handle_slide(p, slide_from, slide_over, slide_sign);
            detail::write_sink(outpath, presentation_text(s), out);
            return exit_ok;
        }

        if (*c_cancel) {
            SurgeryPresentation p = detail::load_presentation(file, in);
            SurgeryPresentation s = cancel_meridian_pair(p, knot, meridian);
            detail::write_sink(outpath, presentation_text(s), out);
            return exit_ok;
        }

        if (*c_verify) {
            Diagram d = detail::load_diagram(file, in);
            if (!std::holds_alternative<FrontDiagram>(d))
                throw InvalidDiagram("verify-lutz wants a Legendrian front");
            const FrontDiagram& f = std::get<FrontDiagram>(d);
            LutzSign sign = detail::parse_sign(signstr);
            SurgeryPresentation p =
                lutz_pair(f, component, sign, detail::parse_coeff_list(coeffs));
            const std::size_t i1 = component, i2 = component + 1;
            const long long t = p.component(i1).tb;
            const long long r = p.component(i1).rot;

            SurgeryPresentation slid = handle_slide(p, i2, i1, -1);
            bool trivial = slid.framing(i2) == 0 && slid.linking(i1, i2) == -1 &&
                           first_homology(slid) == first_homology(p);
            SurgeryPresentation cancelled = cancel_meridian_pair(slid, i1, i2);
            trivial = trivial && cancelled.size() == p.size() - 2 &&
                      first_homology(cancelled) == first_homology(p);
            out << "triviality: " << detail::verdict(trivial, out)
                << " (slide L2 over -L1: framing 0, linking -1; cancellation removes the pair)\n";

            bool ot = overtwisted_framing_check(p);
            out << "overtwisted framing: " << detail::verdict(ot, out) << " (lk(K,L1)=" << t
                << ", lk(K,L2)=" << t - 1 << ", disc framing = contact framing = " << t - 1
                << ")\n";

            bool d3_ok = true;
            bool linked_background = false;
            for (std::size_t k = 0; k < p.size(); ++k)
                if (k != i1 && k != i2 && p.linking(i1, k) != 0) linked_background = true;
            if (linked_background) {
                out << "d3 change: SKIP (component links the background; the change law needs "
                       "the homological correction)\n";
            } else if (p.size() == 2) {
                Rational change = d3(p) - Rational(-1, 2);
                d3_ok = change == Rational(expected_d3_change(t, r, sign));
                out << "d3 change: " << detail::verdict(d3_ok, out) << " (d3 = "
                    << d3(p).to_string() << ", change = " << change.to_string() << ")\n";
            } else {
                // split background: compare against the background presentation
                std::vector<SurgeryComponent> comps;
                std::vector<std::vector<long long>> lk;
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (i == i1 || i == i2) continue;
                    comps.push_back(p.component(i));
                    std::vector<long long> row;
                    for (std::size_t j = 0; j < p.size(); ++j) {
                        if (j == i1 || j == i2) continue;
                        row.push_back(p.linking(i, j));
                    }
                    lk.push_back(row);
                }
                SurgeryPresentation host(comps, lk);
                Rational change = d3(p) - d3(host);
                d3_ok = change == Rational(expected_d3_change(t, r, sign));
                out << "d3 change: " << detail::verdict(d3_ok, out)
                    << " (change = " << change.to_string() << ")\n";
            }

            if (trivial && ot && d3_ok) {
                out << "all checks passed\n";
                return exit_ok;
            }
            out << "checks failed\n";
            return exit_invalid;
        }

        if (*c_s3) {
            SurgeryPresentation p = s3_overtwisted(n_twists);
            detail::write_sink(outpath, presentation_text(p), out);
            return exit_ok;
        }

        if (*c_render) {
            if (format != "ascii" && format != "svg") {
                err << "usage error: format must be ascii or svg\n";
                return exit_usage;
            }
            Diagram d = detail::load_diagram(file, in);
            std::string text;
            if (format == "ascii")
                text = std::holds_alternative<FrontDiagram>(d)
                           ? render_ascii(std::get<FrontDiagram>(d))
                           : render_ascii(std::get<TransverseFront>(d));
            else
                text = std::holds_alternative<FrontDiagram>(d)
                           ? render_svg(std::get<FrontDiagram>(d))
                           : render_svg(std::get<TransverseFront>(d));
            detail::write_sink(outpath, text, out);
            return exit_ok;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return exit_parse;
    } catch (const DegenerateMatrix& e) {
        err << "undefined: " << e.what() << "\n";
        return exit_undefined;
    } catch (const ZeroNotAllowed& e) {
        err << "undefined: " << e.what() << "\n";
        return exit_undefined;
    } catch (const IndexError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const DimensionMismatch& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_invalid;
    }
    return exit_usage;
}

inline int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

} // namespace ctsurg::cli
