#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"
#include "ctsurg/homotopy.hpp"
#include "ctsurg/surgery.hpp"
#include "ctsurg/transverse.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// Lutz twist as a surgery pair
//
// A simple Lutz twist along the positive transverse push-off of a Legendrian
// knot L1 is effected by contact (+1)-surgery on L1 together with (+1)-
// surgery on L2, the push-off of L1 with two extra zigzags: up-zigzags for
// the positive twist, down-zigzags for the twist along the negative
// push-off. With tb(L1) = t the pair has framings (t+1, t-1) and linking t.
// ---------------------------------------------------------------------------

enum class LutzSign { positive, negative };

inline ZigzagDir lutz_zigzag(LutzSign s) {
    return s == LutzSign::positive ? ZigzagDir::up : ZigzagDir::down;
}

// d3 change effected by the twist: r - t for the positive twist, -(t + r)
// for the negative one (minus the self-linking number of the respective
// transverse push-off).
inline long long expected_d3_change(long long t, long long r, LutzSign sign) {
    return sign == LutzSign::positive ? r - t : -(t + r);
}

// Surgery presentation of the twist along component `component` of the
// diagram. All components become surgery components: the chosen one and its
// derived push-off get coefficient +1, the rest keep the coefficients passed
// in `other_coeffs` (diagram order with the chosen component skipped; +1 by
// default). The push-off is inserted right after its base.
inline SurgeryPresentation lutz_pair(const FrontDiagram& d, int component, LutzSign sign,
                                     const std::vector<int>& other_coeffs = {},
                                     std::string ref = "front") {
    ValidationReport v = validate(d);
    if (!v.valid()) throw InvalidDiagram("invalid front diagram: " + v.issues.front().message);
    if (component < 0 || component >= v.component_count)
        throw InvalidComponent("no component " + std::to_string(component));
    const std::size_t n = v.component_count;
    if (!other_coeffs.empty() && other_coeffs.size() != n - 1)
        throw DimensionMismatch("need one coefficient per non-surgered component");
    std::vector<int> coeffs(n, 1);
    if (!other_coeffs.empty()) {
        std::size_t src = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == static_cast<std::size_t>(component)) continue;
            coeffs[i] = other_coeffs[src++];
        }
    }
    SurgeryPresentation p = SurgeryPresentation::from_front(d, coeffs, std::move(ref));
    p.append_derived(component, {lutz_zigzag(sign), lutz_zigzag(sign)}, 1, component + 1);
    return p;
}

// Twist along a transverse knot: convert the front to a Legendrian diagram
// whose positive transverse push-off matches it, then build the pair on the
// corresponding component.
inline SurgeryPresentation lutz_on_transverse(const TransverseFront& t, int component,
                                              LutzSign sign,
                                              const std::vector<int>& other_coeffs = {}) {
    FrontDiagram d = transverse_to_legendrian(t);
    return lutz_pair(d, component, sign, other_coeffs, "tfront");
}

// The fully drawn two-component front of the pair: the component together
// with its cabled push-off carrying the two zigzags. The push-off is
// component `component`+1 of the result.
inline FrontDiagram explicit_lutz_front(const FrontDiagram& d, int component, LutzSign sign) {
    FrontDiagram out = legendrian_pushoff(d, component);
    out = stabilize(out, component + 1, lutz_zigzag(sign));
    out = stabilize(out, component + 1, lutz_zigzag(sign));
    return out;
}

namespace detail {

inline FrontDiagram standard_unknot_front() {
    // tb = -1, rot = 0
    return FrontDiagram{{left_cusp(1), right_cusp(1)}, {}};
}

inline FrontDiagram standard_trefoil_front() {
    // right-handed trefoil, tb = 1, rot = 0
    return FrontDiagram{{left_cusp(1), left_cusp(3), crossing(2), crossing(2), crossing(2),
                         right_cusp(3), right_cusp(1)},
                        {}};
}

} // namespace detail

// Overtwisted contact structures on S^3 realizing every homotopy class
// except the tight one: d3 = n - 1/2. Positive n uses n positive twists on
// standard unknots (each shifting d3 by +1); negative n uses |n| positive
// twists on standard tb = 1 trefoils (each shifting by -1; an unknot cannot
// serve here since sl = +1 is out of its reach).
inline SurgeryPresentation s3_overtwisted(long long n) {
    if (n == 0) throw ZeroNotAllowed("n = 0 names the tight structure, which needs no twist");
    const FrontDiagram base =
        n > 0 ? detail::standard_unknot_front() : detail::standard_trefoil_front();
    SurgeryPresentation acc = lutz_pair(base, 0, LutzSign::positive, {},
                                        n > 0 ? "unknot" : "trefoil");
    for (long long k = 1; k < std::llabs(n); ++k)
        acc = disjoint_union(acc, lutz_pair(base, 0, LutzSign::positive, {},
                                            n > 0 ? "unknot" : "trefoil"));
    return acc;
}

} // namespace ctsurg
