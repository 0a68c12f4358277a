#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// Transverse fronts
//
// Same plat encoding as Legendrian fronts, with vertical tangencies (cups
// and caps) instead of cusps and with over/under stored at crossings:
// crossing_over means the strand entering at the event position (the
// descending one) passes in front, crossing_under that it passes behind.
//
// A positively transverse front admits no downward vertical tangency, and
// exactly one crossing configuration is unrealizable: the ascending strand
// in front while the descending strand runs rightward and the ascending one
// leftward. (Both strands then point downward, which forces the descending
// strand to have the larger contact coordinate.)
// ---------------------------------------------------------------------------

enum class TransverseEventKind { cup, cap, crossing_over, crossing_under };

struct TransverseEvent {
    TransverseEventKind kind;
    int position;

    friend bool operator==(const TransverseEvent&, const TransverseEvent&) = default;
};

inline TransverseEvent cup(int i) { return {TransverseEventKind::cup, i}; }
inline TransverseEvent cap(int i) { return {TransverseEventKind::cap, i}; }
inline TransverseEvent crossing_over(int i) { return {TransverseEventKind::crossing_over, i}; }
inline TransverseEvent crossing_under(int i) { return {TransverseEventKind::crossing_under, i}; }

struct TransverseFront {
    std::vector<TransverseEvent> events;
    std::vector<bool> reversed;

    bool component_reversed(std::size_t k) const { return k < reversed.size() && reversed[k]; }

    friend bool operator==(const TransverseFront& a, const TransverseFront& b) {
        if (a.events != b.events) return false;
        std::size_t n = a.reversed.size() > b.reversed.size() ? a.reversed.size() : b.reversed.size();
        for (std::size_t k = 0; k < n; ++k)
            if (a.component_reversed(k) != b.component_reversed(k)) return false;
        return true;
    }
};

inline detail::SweepResult sweep(const TransverseFront& t) {
    std::vector<detail::StackOp> ops;
    ops.reserve(t.events.size());
    for (const TransverseEvent& e : t.events) {
        detail::StackOpKind k = e.kind == TransverseEventKind::cup ? detail::StackOpKind::insert
                              : e.kind == TransverseEventKind::cap ? detail::StackOpKind::merge
                                                                   : detail::StackOpKind::swap;
        ops.push_back({k, e.position});
    }
    return detail::sweep_stack(ops, t.reversed);
}

namespace detail {

// cup tangency goes upward iff the upper branch runs rightward,
// cap tangency iff the upper branch runs leftward (as for cusps)
inline bool tangency_is_up(const SweepResult& s, const SweepEventRec& rec, bool is_cup) {
    bool upper_right = s.piece_rightward[rec.upper];
    return is_cup ? upper_right : !upper_right;
}

inline int transverse_crossing_sign(const SweepResult& s, const SweepEventRec& rec, bool over) {
    int base = s.piece_rightward[rec.upper] == s.piece_rightward[rec.lower] ? 1 : -1;
    return over ? base : -base;
}

} // namespace detail

struct TransverseValidationReport {
    std::vector<DiagramIssue> issues;
    int component_count = 0;
    std::vector<int> piece_component;

    bool valid() const { return issues.empty(); }
};

inline TransverseValidationReport validate_transverse(const TransverseFront& t) {
    detail::SweepResult s = sweep(t);
    TransverseValidationReport r;
    for (const auto& is : s.issues) r.issues.push_back({is.event, is.message});
    r.component_count = s.component_count;
    r.piece_component = s.piece_component;
    if (!s.issues.empty()) return r;
    for (std::size_t e = 0; e < t.events.size(); ++e) {
        const auto& rec = s.events[e];
        switch (t.events[e].kind) {
        case TransverseEventKind::cup:
            if (!detail::tangency_is_up(s, rec, true))
                r.issues.push_back({e, "downward vertical tangency at cup"});
            break;
        case TransverseEventKind::cap:
            if (!detail::tangency_is_up(s, rec, false))
                r.issues.push_back({e, "downward vertical tangency at cap"});
            break;
        case TransverseEventKind::crossing_under:
            if (s.piece_rightward[rec.upper] && !s.piece_rightward[rec.lower])
                r.issues.push_back({e, "unrealizable crossing: ascending strand in front while "
                                       "both strands point downward"});
            break;
        case TransverseEventKind::crossing_over:
            break;
        }
    }
    return r;
}

// writhe of one component's front projection (signed self-crossings)
inline long long transverse_writhe(const TransverseFront& t, int component) {
    detail::SweepResult s = sweep(t);
    if (!s.ok())
        throw InvalidTransverseFront("invalid transverse front: " + s.issues.front().message);
    if (component < 0 || component >= s.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    long long w = 0;
    for (std::size_t e = 0; e < t.events.size(); ++e) {
        const auto& rec = s.events[e];
        bool over = t.events[e].kind == TransverseEventKind::crossing_over;
        bool under = t.events[e].kind == TransverseEventKind::crossing_under;
        if (!over && !under) continue;
        if (s.piece_component[rec.upper] != component || s.piece_component[rec.lower] != component)
            continue;
        w += detail::transverse_crossing_sign(s, rec, over);
    }
    return w;
}

// Self-linking number of a positively transverse component: the writhe of
// its front.
inline long long self_linking(const TransverseFront& t, int component) {
    TransverseValidationReport r = validate_transverse(t);
    if (!r.valid())
        throw InvalidTransverseFront("invalid transverse front: " + r.issues.front().message);
    if (component < 0 || component >= r.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    return transverse_writhe(t, component);
}

// ---------------------------------------------------------------------------
// Positive transverse push-off
// ---------------------------------------------------------------------------

// Extracts the component and smooths it: up-cusps become cups/caps, each
// down-cusp becomes a kink. The kink crossing is forced: with the loop's
// returning branch descending in front, its sign is -1 (the opposite
// over/under choice is the unrealizable configuration), which yields
// sl = writhe - #down-cusps = tb - rot.
inline TransverseFront positive_transverse_pushoff(const FrontDiagram& d, int component) {
    FrontDiagram one = extract_component(d, component);
    detail::SweepResult s = sweep(one);
    TransverseFront out;
    // the push-off carries the positively transverse traversal: its seed
    // strand runs rightward whichever way the Legendrian component was
    // oriented
    out.reversed.assign(1, false);
    for (std::size_t e = 0; e < one.events.size(); ++e) {
        const FrontEvent& ev = one.events[e];
        const auto& rec = s.events[e];
        const int i = ev.position;
        switch (ev.kind) {
        case FrontEventKind::left_cusp:
            if (detail::cusp_is_up(s, rec, true)) {
                out.events.push_back(cup(i));
            } else {
                out.events.push_back(cup(i));
                out.events.push_back(crossing_over(i));
            }
            break;
        case FrontEventKind::right_cusp:
            if (detail::cusp_is_up(s, rec, false)) {
                out.events.push_back(cap(i));
            } else {
                out.events.push_back(crossing_over(i));
                out.events.push_back(cap(i));
            }
            break;
        case FrontEventKind::crossing:
            // in a front the descending strand is in front
            out.events.push_back(crossing_over(i));
            break;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transverse front -> Legendrian front
// ---------------------------------------------------------------------------

// Replaces upward tangencies by cusps. Crossings with the descending strand
// in front transfer directly; the others need a zigzag on an upward-pointing
// strand so that the front realizes the stored over/under. When both strands
// point upward the zigzag goes on the strand entering at the smaller depth.
// All inserted cusps are up-cusps, so tb - rot of every component matches
// the self-linking number of the input.
inline FrontDiagram transverse_to_legendrian(const TransverseFront& t) {
    TransverseValidationReport chk = validate_transverse(t);
    if (!chk.valid())
        throw InvalidTransverseFront("invalid transverse front: " + chk.issues.front().message);
    detail::SweepResult s = sweep(t);
    FrontDiagram out;
    out.reversed = t.reversed;
    for (std::size_t e = 0; e < t.events.size(); ++e) {
        const TransverseEvent& ev = t.events[e];
        const auto& rec = s.events[e];
        const int i = ev.position;
        switch (ev.kind) {
        case TransverseEventKind::cup:
            out.events.push_back(left_cusp(i));
            break;
        case TransverseEventKind::cap:
            out.events.push_back(right_cusp(i));
            break;
        case TransverseEventKind::crossing_over:
            out.events.push_back(crossing(i));
            break;
        case TransverseEventKind::crossing_under: {
            bool desc_right = s.piece_rightward[rec.upper];
            if (!desc_right) {
                // zigzag on the descending strand; its return branch dips
                // under the crossing and carries the front strand over it
                out.events.push_back(left_cusp(i + 2));
                out.events.push_back(crossing(i + 1));
                out.events.push_back(right_cusp(i));
            } else {
                // descending strand runs rightward, so the ascending one
                // points upward and takes the zigzag
                out.events.push_back(left_cusp(i));
                out.events.push_back(crossing(i + 1));
                out.events.push_back(right_cusp(i + 2));
            }
            break;
        }
        }
    }
    return out;
}

} // namespace ctsurg
