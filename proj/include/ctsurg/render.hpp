#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"
#include "ctsurg/transverse.hpp"

namespace ctsurg {

// Deterministic renderers: one column per event, byte-identical output for
// identical diagrams. ASCII uses '(' and ')' for cusps/tangencies and 'X'
// for crossings ('x' for a transverse under-crossing); SVG draws cusps as
// quadratic arcs and breaks the back strand at crossings.

namespace detail {

struct RenderEvent {
    StackOpKind kind;
    int position;
    char glyph;            // crossing glyph for ascii
    bool over_descending;  // svg: which strand is drawn in front
};

inline std::vector<RenderEvent> render_events(const FrontDiagram& d) {
    std::vector<RenderEvent> out;
    out.reserve(d.events.size());
    for (const FrontEvent& e : d.events) {
        switch (e.kind) {
        case FrontEventKind::left_cusp:
            out.push_back({StackOpKind::insert, e.position, '(', true});
            break;
        case FrontEventKind::right_cusp:
            out.push_back({StackOpKind::merge, e.position, ')', true});
            break;
        case FrontEventKind::crossing:
            out.push_back({StackOpKind::swap, e.position, 'X', true});
            break;
        }
    }
    return out;
}

inline std::vector<RenderEvent> render_events(const TransverseFront& t) {
    std::vector<RenderEvent> out;
    out.reserve(t.events.size());
    for (const TransverseEvent& e : t.events) {
        switch (e.kind) {
        case TransverseEventKind::cup:
            out.push_back({StackOpKind::insert, e.position, '(', true});
            break;
        case TransverseEventKind::cap:
            out.push_back({StackOpKind::merge, e.position, ')', true});
            break;
        case TransverseEventKind::crossing_over:
            out.push_back({StackOpKind::swap, e.position, 'X', true});
            break;
        case TransverseEventKind::crossing_under:
            out.push_back({StackOpKind::swap, e.position, 'x', false});
            break;
        }
    }
    return out;
}

inline std::string render_ascii_events(const std::vector<RenderEvent>& evs) {
    // strand counts per event
    int k = 0, maxk = 0;
    std::vector<int> pre(evs.size(), 0);
    for (std::size_t e = 0; e < evs.size(); ++e) {
        pre[e] = k;
        if (evs[e].kind == StackOpKind::insert)
            k += 2;
        else if (evs[e].kind == StackOpKind::merge)
            k -= 2;
        if (k < 0) throw InvalidDiagram("render: diagram is not valid");
        maxk = std::max(maxk, k);
    }
    if (k != 0) throw InvalidDiagram("render: diagram is not closed");
    if (evs.empty()) return "";

    // glyph columns show inserts at post-event depths and merges/crossings
    // at pre-event depths; each two-column rail then carries every strand
    // from its previous row to the next one, drawing '/' and '\' jumps
    const std::size_t cols = 3 * evs.size() - 2;
    std::vector<std::string> grid(maxk, std::string(cols, ' '));

    // row of the strand at post-event depth dd, as drawn in column e
    auto row_out = [&](std::size_t e, int dd) {
        if (evs[e].kind == StackOpKind::merge && dd >= evs[e].position) return dd + 2;
        return dd;
    };
    // row where the strand at pre-event depth d enters column e
    auto row_in = [&](std::size_t e, int d) {
        if (evs[e].kind == StackOpKind::insert && d >= evs[e].position) return d + 2;
        return d;
    };

    for (std::size_t e = 0; e < evs.size(); ++e) {
        const RenderEvent& ev = evs[e];
        const std::size_t g = 3 * e;
        const int i = ev.position;
        const int post = pre[e] + (ev.kind == StackOpKind::insert  ? 2
                                   : ev.kind == StackOpKind::merge ? -2
                                                                   : 0);
        // glyph column
        if (ev.kind == StackOpKind::insert) {
            for (int dd = 1; dd <= post; ++dd)
                grid[dd - 1][g] = (dd == i || dd == i + 1) ? ev.glyph : '-';
        } else {
            for (int d = 1; d <= pre[e]; ++d)
                grid[d - 1][g] = (d == i || d == i + 1) ? ev.glyph : '-';
        }
        // rail to the next event
        if (e + 1 < evs.size()) {
            for (int dd = 1; dd <= post; ++dd) {
                int r1 = row_out(e, dd);
                int r2 = row_in(e + 1, dd);
                if (r2 == r1) {
                    grid[r1 - 1][g + 1] = '-';
                    grid[r1 - 1][g + 2] = '-';
                } else if (r2 == r1 + 2) {
                    grid[r1 - 1][g + 1] = '\\';
                    grid[r1][g + 2] = '\\';
                } else {
                    grid[r1 - 1][g + 1] = '/';
                    grid[r1 - 2][g + 2] = '/';
                }
            }
        }
    }

    std::string out;
    for (std::string& row : grid) {
        while (!row.empty() && row.back() == ' ') row.pop_back();
        out += row;
        out += '\n';
    }
    return out;
}

// fixed palette; components cycle through it
inline const char* render_palette(int component) {
    static const char* colors[6] = {"#1f77b4", "#d62728", "#2ca02c",
                                    "#9467bd", "#ff7f0e", "#8c564b"};
    return colors[component % 6];
}

inline std::string render_svg_events(const std::vector<RenderEvent>& evs,
                                     const SweepResult& sweep) {
    if (!sweep.ok()) throw InvalidDiagram("render: diagram is not valid");
    constexpr int DX = 40, DY = 24, MARGIN = 20;
    constexpr int H = DX / 2;  // segment half-width
    constexpr int G = DX / 8;  // under-strand gap half-width
    int k = 0, maxk = 0;
    for (const RenderEvent& ev : evs) {
        if (ev.kind == StackOpKind::insert)
            k += 2;
        else if (ev.kind == StackOpKind::merge)
            k -= 2;
        maxk = std::max(maxk, k);
    }

    auto xcol = [&](std::size_t e) { return MARGIN + H + static_cast<int>(e) * DX; };
    auto yrow = [&](int depth) { return MARGIN + (depth - 1) * DY; };

    const int width = 2 * (MARGIN + H) + (evs.empty() ? 0 : static_cast<int>(evs.size() - 1) * DX);
    const int height = 2 * MARGIN + (maxk > 0 ? (maxk - 1) * DY : 0);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";

    // pieces are colored by component
    std::vector<int> stack; // piece ids, to recover colors per depth
    auto stroke = [&](int piece) {
        return std::string(render_palette(sweep.piece_component[piece]));
    };
    auto line = [&](int piece, int x1, int y1, int x2, int y2) {
        svg << "  <path d=\"M " << x1 << " " << y1 << " L " << x2 << " " << y2 << "\" stroke=\""
            << stroke(piece) << "\" stroke-width=\"2\" fill=\"none\" stroke-linecap=\"round\"/>\n";
    };
    auto quad = [&](int piece, int x1, int y1, int cx, int cy, int x2, int y2) {
        svg << "  <path d=\"M " << x1 << " " << y1 << " Q " << cx << " " << cy << " " << x2 << " "
            << y2 << "\" stroke=\"" << stroke(piece)
            << "\" stroke-width=\"2\" fill=\"none\" stroke-linecap=\"round\"/>\n";
    };

    for (std::size_t e = 0; e < evs.size(); ++e) {
        const RenderEvent& ev = evs[e];
        const auto& rec = sweep.events[e];
        const int i = ev.position;
        const int x = xcol(e);
        // strands not involved pass straight through the column
        for (std::size_t d = 1; d <= stack.size(); ++d) {
            if (static_cast<int>(d) >= i && static_cast<int>(d) <= i + 1 &&
                ev.kind != StackOpKind::insert)
                continue;
            int y_pre = yrow(static_cast<int>(d));
            int shift = 0;
            if (ev.kind == StackOpKind::insert && static_cast<int>(d) >= i) shift = 2;
            if (ev.kind == StackOpKind::merge && static_cast<int>(d) > i + 1) shift = -2;
            line(stack[d - 1], x - H, y_pre, x + H, yrow(static_cast<int>(d) + shift));
        }
        switch (ev.kind) {
        case StackOpKind::insert: {
            const int ym = (yrow(i) + yrow(i + 1)) / 2;
            quad(rec.upper, x, ym, x, yrow(i), x + H, yrow(i));
            quad(rec.lower, x, ym, x, yrow(i + 1), x + H, yrow(i + 1));
            stack.insert(stack.begin() + (i - 1), {rec.upper, rec.lower});
            break;
        }
        case StackOpKind::merge: {
            const int ym = (yrow(i) + yrow(i + 1)) / 2;
            quad(rec.upper, x - H, yrow(i), x, yrow(i), x, ym);
            quad(rec.lower, x - H, yrow(i + 1), x, yrow(i + 1), x, ym);
            stack.erase(stack.begin() + (i - 1), stack.begin() + (i + 1));
            break;
        }
        case StackOpKind::swap: {
            const int yi = yrow(i), yj = yrow(i + 1);
            auto broken = [&](int piece, int ya, int yb) {
                // back strand from (x-H, ya) to (x+H, yb), gap around center
                const int y1 = ya + (yb - ya) * (H - G) / (2 * H);
                const int y2 = ya + (yb - ya) * (H + G) / (2 * H);
                line(piece, x - H, ya, x - G, y1);
                line(piece, x + G, y2, x + H, yb);
            };
            // rec.upper entered at depth i and descends across the column
            if (ev.over_descending) {
                broken(rec.lower, yj, yi);
                line(rec.upper, x - H, yi, x + H, yj);
            } else {
                broken(rec.upper, yi, yj);
                line(rec.lower, x - H, yj, x + H, yi);
            }
            std::swap(stack[i - 1], stack[i]);
            break;
        }
        }
        // rail to the next column
        if (e + 1 < evs.size())
            for (std::size_t d = 1; d <= stack.size(); ++d)
                line(stack[d - 1], x + H, yrow(static_cast<int>(d)), xcol(e + 1) - H,
                     yrow(static_cast<int>(d)));
    }
    svg << "</svg>\n";
    return svg.str();
}

} // namespace detail

inline std::string render_ascii(const FrontDiagram& d) {
    if (!validate(d).valid()) throw InvalidDiagram("render: invalid front diagram");
    return detail::render_ascii_events(detail::render_events(d));
}

inline std::string render_ascii(const TransverseFront& t) {
    detail::SweepResult s = sweep(t);
    if (!s.ok()) throw InvalidDiagram("render: invalid transverse front");
    return detail::render_ascii_events(detail::render_events(t));
}

inline std::string render_svg(const FrontDiagram& d) {
    detail::SweepResult s = sweep(d);
    if (!s.ok()) throw InvalidDiagram("render: invalid front diagram");
    return detail::render_svg_events(detail::render_events(d), s);
}

inline std::string render_svg(const TransverseFront& t) {
    detail::SweepResult s = sweep(t);
    if (!s.ok()) throw InvalidDiagram("render: invalid transverse front");
    return detail::render_svg_events(detail::render_events(t), s);
}

} // namespace ctsurg
