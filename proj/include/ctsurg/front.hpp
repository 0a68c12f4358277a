#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ctsurg/errors.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// Event words
//
// A front projection is encoded as a plat-style event word, swept left to
// right. Strand depths are counted from the top, starting at 1. A left cusp
// at position i inserts two strands at depths i, i+1; a right cusp at
// position i merges the strands at depths i, i+1; a crossing swaps them.
// The strand entering a crossing at depth i descends to depth i+1 and, by
// the slope convention for fronts, passes in front.
// ---------------------------------------------------------------------------

enum class FrontEventKind { left_cusp, right_cusp, crossing };

struct FrontEvent {
    FrontEventKind kind;
    int position; // 1-based strand depth

    friend bool operator==(const FrontEvent&, const FrontEvent&) = default;
};

inline FrontEvent left_cusp(int i) { return {FrontEventKind::left_cusp, i}; }
inline FrontEvent right_cusp(int i) { return {FrontEventKind::right_cusp, i}; }
inline FrontEvent crossing(int i) { return {FrontEventKind::crossing, i}; }

// Closed Legendrian front. Components are numbered by order of first
// appearance in the sweep; component k is traversed with its seed strand
// (the upper branch of its first left cusp) running rightward unless
// reversed[k] is set.
struct FrontDiagram {
    std::vector<FrontEvent> events;
    std::vector<bool> reversed;

    bool component_reversed(std::size_t k) const { return k < reversed.size() && reversed[k]; }

    friend bool operator==(const FrontDiagram& a, const FrontDiagram& b) {
        if (a.events != b.events) return false;
        std::size_t n = a.reversed.size() > b.reversed.size() ? a.reversed.size() : b.reversed.size();
        for (std::size_t k = 0; k < n; ++k)
            if (a.component_reversed(k) != b.component_reversed(k)) return false;
        return true;
    }
};

// ---------------------------------------------------------------------------
// Sweep engine (shared by Legendrian and transverse fronts)
// ---------------------------------------------------------------------------

namespace detail {

enum class StackOpKind { insert, merge, swap };

struct StackOp {
    StackOpKind kind;
    int position;
};

struct SweepIssue {
    std::size_t event;
    std::string message;
};

struct SweepEventRec {
    // insert/merge: upper and lower strand piece; swap: descending piece
    // (entered at the event position) and ascending piece.
    int upper = -1;
    int lower = -1;
    int strands_before = 0;
    bool applied = false;
};

struct SweepResult {
    std::vector<SweepIssue> issues;
    int component_count = 0;
    std::vector<int> piece_component;  // by piece id (creation order)
    std::vector<char> piece_rightward; // traversal direction per piece
    std::vector<SweepEventRec> events;

    bool ok() const { return issues.empty(); }
};

inline SweepResult sweep_stack(const std::vector<StackOp>& ops, const std::vector<bool>& reversed) {
    SweepResult out;
    out.events.resize(ops.size());
    std::vector<int> stack;
    std::vector<int> parent;
    // one edge per cusp; traversal direction flips across a cusp
    std::vector<std::vector<int>> flip_adj;

    auto new_piece = [&] {
        parent.push_back(static_cast<int>(parent.size()));
        flip_adj.emplace_back();
        return static_cast<int>(parent.size()) - 1;
    };
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    auto join = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[b] = a;
    };

    for (std::size_t e = 0; e < ops.size(); ++e) {
        const StackOp& op = ops[e];
        SweepEventRec& rec = out.events[e];
        const int k = static_cast<int>(stack.size());
        rec.strands_before = k;
        switch (op.kind) {
        case StackOpKind::insert: {
            if (op.position < 1 || op.position > k + 1) {
                out.issues.push_back({e, "insert position " + std::to_string(op.position) +
                                             " out of range 1.." + std::to_string(k + 1)});
                continue;
            }
            int up = new_piece();
            int lo = new_piece();
            join(up, lo);
            flip_adj[up].push_back(lo);
            flip_adj[lo].push_back(up);
            stack.insert(stack.begin() + (op.position - 1), {up, lo});
            rec.upper = up;
            rec.lower = lo;
            rec.applied = true;
            break;
        }
        case StackOpKind::merge: {
            if (op.position < 1 || op.position > k - 1) {
                out.issues.push_back({e, "merge position " + std::to_string(op.position) +
                                             " out of range 1.." + std::to_string(k - 1)});
                continue;
            }
            int up = stack[op.position - 1];
            int lo = stack[op.position];
            join(up, lo);
            flip_adj[up].push_back(lo);
            flip_adj[lo].push_back(up);
            stack.erase(stack.begin() + (op.position - 1), stack.begin() + (op.position + 1));
            rec.upper = up;
            rec.lower = lo;
            rec.applied = true;
            break;
        }
        case StackOpKind::swap: {
            if (op.position < 1 || op.position > k - 1) {
                out.issues.push_back({e, "crossing position " + std::to_string(op.position) +
                                             " out of range 1.." + std::to_string(k - 1)});
                continue;
            }
            rec.upper = stack[op.position - 1];
            rec.lower = stack[op.position];
            std::swap(stack[op.position - 1], stack[op.position]);
            rec.applied = true;
            break;
        }
        }
    }
    if (!stack.empty())
        out.issues.push_back({ops.size(), "diagram not closed: " + std::to_string(stack.size()) +
                                              " strand(s) remain"});

    // components by order of first appearance
    out.piece_component.assign(parent.size(), -1);
    for (std::size_t p = 0; p < parent.size(); ++p) {
        int r = find(static_cast<int>(p));
        if (out.piece_component[r] == -1) out.piece_component[r] = out.component_count++;
        out.piece_component[p] = out.piece_component[r];
    }

    // traversal directions: seed each component at its least piece, flip
    // across every cusp edge (component cycles are even, so this closes up)
    out.piece_rightward.assign(parent.size(), 0);
    std::vector<char> seen(parent.size(), 0);
    for (std::size_t p = 0; p < parent.size(); ++p) {
        if (seen[p]) continue;
        int comp = out.piece_component[p];
        bool rev = comp < static_cast<int>(reversed.size()) && reversed[comp];
        out.piece_rightward[p] = rev ? 0 : 1;
        seen[p] = 1;
        std::vector<int> todo{static_cast<int>(p)};
        while (!todo.empty()) {
            int cur = todo.back();
            todo.pop_back();
            for (int nb : flip_adj[cur]) {
                if (seen[nb]) continue;
                seen[nb] = 1;
                out.piece_rightward[nb] = out.piece_rightward[cur] ? 0 : 1;
                todo.push_back(nb);
            }
        }
    }
    return out;
}

} // namespace detail

inline detail::SweepResult sweep(const FrontDiagram& d) {
    std::vector<detail::StackOp> ops;
    ops.reserve(d.events.size());
    for (const FrontEvent& e : d.events) {
        detail::StackOpKind k = e.kind == FrontEventKind::left_cusp ? detail::StackOpKind::insert
                              : e.kind == FrontEventKind::right_cusp ? detail::StackOpKind::merge
                                                                     : detail::StackOpKind::swap;
        ops.push_back({k, e.position});
    }
    return detail::sweep_stack(ops, d.reversed);
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

struct DiagramIssue {
    std::size_t event; // == events.size() for whole-diagram issues
    std::string message;
};

struct ValidationReport {
    std::vector<DiagramIssue> issues;
    int component_count = 0;
    std::vector<int> piece_component;
    std::vector<std::vector<std::size_t>> component_events; // trace per component

    bool valid() const { return issues.empty(); }
};

inline ValidationReport validate(const FrontDiagram& d) {
    detail::SweepResult s = sweep(d);
    ValidationReport r;
    for (const auto& is : s.issues) r.issues.push_back({is.event, is.message});
    r.component_count = s.component_count;
    r.piece_component = s.piece_component;
    r.component_events.resize(s.component_count);
    for (std::size_t e = 0; e < s.events.size(); ++e) {
        const auto& rec = s.events[e];
        if (!rec.applied) continue;
        int ca = s.piece_component[rec.upper];
        int cb = s.piece_component[rec.lower];
        r.component_events[ca].push_back(e);
        if (cb != ca) r.component_events[cb].push_back(e);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Classical invariants
// ---------------------------------------------------------------------------

struct ComponentInvariants {
    long long writhe = 0;    // signed self-crossings
    long long up_cusps = 0;
    long long down_cusps = 0;
    long long tb = 0; // writhe - (cusps)/2
    long long rot = 0; // (down - up)/2
};

struct ClassicalInvariants {
    std::vector<ComponentInvariants> components;
    std::vector<std::vector<long long>> linking; // symmetric, zero diagonal
};

namespace detail {

// sign of a front crossing: +1 when both strands are traversed in the same
// horizontal direction, -1 otherwise (right-hand rule with the descending
// strand in front)
inline int crossing_sign(const SweepResult& s, const SweepEventRec& rec) {
    return s.piece_rightward[rec.upper] == s.piece_rightward[rec.lower] ? 1 : -1;
}

// left cusp is an up-cusp iff its upper branch runs rightward;
// right cusp is an up-cusp iff its upper branch runs leftward
inline bool cusp_is_up(const SweepResult& s, const SweepEventRec& rec, bool left) {
    bool upper_right = s.piece_rightward[rec.upper];
    return left ? upper_right : !upper_right;
}

} // namespace detail

inline ClassicalInvariants classical_invariants(const FrontDiagram& d) {
    detail::SweepResult s = sweep(d);
    if (!s.ok()) throw InvalidDiagram("invalid front diagram: " + s.issues.front().message);
    ClassicalInvariants inv;
    inv.components.resize(s.component_count);
    inv.linking.assign(s.component_count, std::vector<long long>(s.component_count, 0));
    std::vector<std::vector<long long>> signed_pairs(s.component_count,
                                                     std::vector<long long>(s.component_count, 0));
    for (std::size_t e = 0; e < d.events.size(); ++e) {
        const auto& rec = s.events[e];
        int ca = s.piece_component[rec.upper];
        int cb = s.piece_component[rec.lower];
        switch (d.events[e].kind) {
        case FrontEventKind::left_cusp:
            if (detail::cusp_is_up(s, rec, true))
                ++inv.components[ca].up_cusps;
            else
                ++inv.components[ca].down_cusps;
            break;
        case FrontEventKind::right_cusp:
            if (detail::cusp_is_up(s, rec, false))
                ++inv.components[ca].up_cusps;
            else
                ++inv.components[ca].down_cusps;
            break;
        case FrontEventKind::crossing: {
            int sg = detail::crossing_sign(s, rec);
            if (ca == cb) {
                inv.components[ca].writhe += sg;
            } else {
                signed_pairs[ca][cb] += sg;
                signed_pairs[cb][ca] += sg;
            }
            break;
        }
        }
    }
    for (auto& c : inv.components) {
        long long cusps = c.up_cusps + c.down_cusps;
        c.tb = c.writhe - cusps / 2;
        c.rot = (c.down_cusps - c.up_cusps) / 2;
    }
    for (int i = 0; i < s.component_count; ++i)
        for (int j = 0; j < s.component_count; ++j) inv.linking[i][j] = signed_pairs[i][j] / 2;
    return inv;
}

// ---------------------------------------------------------------------------
// Stabilization (zigzag insertion)
// ---------------------------------------------------------------------------

enum class ZigzagDir { up, down };

// Inserts one zigzag (a pair of cusps) on the named component, immediately
// after its first left cusp, on the upper branch. tb drops by 1; rot drops
// by 1 for up, rises by 1 for down.
inline FrontDiagram stabilize(const FrontDiagram& d, int component, ZigzagDir dir) {
    detail::SweepResult s = sweep(d);
    if (!s.ok()) throw InvalidDiagram("invalid front diagram: " + s.issues.front().message);
    if (component < 0 || component >= s.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    for (std::size_t e = 0; e < d.events.size(); ++e) {
        if (d.events[e].kind != FrontEventKind::left_cusp) continue;
        const auto& rec = s.events[e];
        if (s.piece_component[rec.upper] != component) continue;
        const int i = d.events[e].position;
        const bool right = s.piece_rightward[rec.upper];
        const bool up = dir == ZigzagDir::up;
        FrontDiagram out = d;
        // (rightward, up) and (leftward, down) share one event shape; the
        // other two share the mirrored one
        if (right == up) {
            out.events.insert(out.events.begin() + e + 1, {left_cusp(i), right_cusp(i + 1)});
        } else {
            out.events.insert(out.events.begin() + e + 1, {left_cusp(i + 1), right_cusp(i)});
        }
        return out;
    }
    throw InvalidComponent("component has no left cusp");
}

inline FrontDiagram reverse_orientation(const FrontDiagram& d, int component) {
    detail::SweepResult s = sweep(d);
    if (component < 0 || component >= s.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    FrontDiagram out = d;
    if (out.reversed.size() <= static_cast<std::size_t>(component))
        out.reversed.resize(component + 1, false);
    out.reversed[component] = !out.reversed[component];
    return out;
}

// ---------------------------------------------------------------------------
// Legendrian push-off (2-copy cable of one component)
// ---------------------------------------------------------------------------

// Replaces the component by two parallel copies. The copy appears as the
// component right after it in the output numbering and carries the same
// orientation flag. Each cusp of the doubled component contributes one
// forced negative crossing between the copies, so lk(copy, original) =
// tb(original) while tb and rot of the copy match the original.
inline FrontDiagram legendrian_pushoff(const FrontDiagram& d, int component) {
    detail::SweepResult s = sweep(d);
    if (!s.ok()) throw InvalidDiagram("invalid front diagram: " + s.issues.front().message);
    if (component < 0 || component >= s.component_count)
        throw InvalidComponent("no component " + std::to_string(component));

    FrontDiagram out;
    std::vector<int> width; // per current original strand: 2 if doubled
    auto newpos = [&](int i) {
        int p = 1;
        for (int d2 = 0; d2 < i - 1; ++d2) p += width[d2];
        return p;
    };

    for (std::size_t e = 0; e < d.events.size(); ++e) {
        const FrontEvent& ev = d.events[e];
        const auto& rec = s.events[e];
        const int i = ev.position;
        const int p = newpos(i);
        switch (ev.kind) {
        case FrontEventKind::left_cusp: {
            bool target = s.piece_component[rec.upper] == component;
            if (target) {
                out.events.push_back(left_cusp(p));
                out.events.push_back(left_cusp(p + 2));
                out.events.push_back(crossing(p + 1));
                width.insert(width.begin() + (i - 1), {2, 2});
            } else {
                out.events.push_back(left_cusp(p));
                width.insert(width.begin() + (i - 1), {1, 1});
            }
            break;
        }
        case FrontEventKind::right_cusp: {
            bool target = s.piece_component[rec.upper] == component;
            if (target) {
                out.events.push_back(crossing(p + 1));
                out.events.push_back(right_cusp(p));
                out.events.push_back(right_cusp(p));
            } else {
                out.events.push_back(right_cusp(p));
            }
            width.erase(width.begin() + (i - 1), width.begin() + (i + 1));
            break;
        }
        case FrontEventKind::crossing: {
            bool ut = s.piece_component[rec.upper] == component; // descending strand
            bool lt = s.piece_component[rec.lower] == component;
            if (ut && lt) {
                out.events.push_back(crossing(p + 1));
                out.events.push_back(crossing(p));
                out.events.push_back(crossing(p + 2));
                out.events.push_back(crossing(p + 1));
            } else if (ut) {
                out.events.push_back(crossing(p + 1));
                out.events.push_back(crossing(p));
            } else if (lt) {
                out.events.push_back(crossing(p));
                out.events.push_back(crossing(p + 1));
            } else {
                out.events.push_back(crossing(p));
            }
            std::swap(width[i - 1], width[i]);
            break;
        }
        }
    }

    // copy inherits the component's flag and sits right after it
    for (int k = 0; k < s.component_count + 1; ++k) {
        int src = k <= component ? k : k - 1;
        if (d.component_reversed(src)) {
            if (out.reversed.size() <= static_cast<std::size_t>(k)) out.reversed.resize(k + 1, false);
            out.reversed[k] = true;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Component extraction
// ---------------------------------------------------------------------------

// The named component as a one-component diagram. Crossings with other
// components are transversal overlaps only, so dropping all foreign events
// and renumbering depths leaves the component's own front untouched.
inline FrontDiagram extract_component(const FrontDiagram& d, int component) {
    detail::SweepResult s = sweep(d);
    if (!s.ok()) throw InvalidDiagram("invalid front diagram: " + s.issues.front().message);
    if (component < 0 || component >= s.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    FrontDiagram out;
    std::vector<char> mine; // per current strand of d
    for (std::size_t e = 0; e < d.events.size(); ++e) {
        const FrontEvent& ev = d.events[e];
        const auto& rec = s.events[e];
        const int i = ev.position;
        auto pos_among_mine = [&](int depth) {
            int p = 1;
            for (int t = 0; t < depth - 1; ++t) p += mine[t] ? 1 : 0;
            return p;
        };
        switch (ev.kind) {
        case FrontEventKind::left_cusp: {
            bool t = s.piece_component[rec.upper] == component;
            if (t) out.events.push_back(left_cusp(pos_among_mine(i)));
            mine.insert(mine.begin() + (i - 1), 2, t ? 1 : 0);
            break;
        }
        case FrontEventKind::right_cusp: {
            bool t = s.piece_component[rec.upper] == component;
            if (t) out.events.push_back(right_cusp(pos_among_mine(i)));
            mine.erase(mine.begin() + (i - 1), mine.begin() + (i + 1));
            break;
        }
        case FrontEventKind::crossing: {
            bool ut = s.piece_component[rec.upper] == component;
            bool lt = s.piece_component[rec.lower] == component;
            if (ut && lt) out.events.push_back(crossing(pos_among_mine(i)));
            std::swap(mine[i - 1], mine[i]);
            break;
        }
        }
    }
    out.reversed.assign(1, d.component_reversed(component));
    return out;
}

} // namespace ctsurg
