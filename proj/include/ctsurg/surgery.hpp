#pragma once

#include <cstddef>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "ctsurg/bigint.hpp"
#include "ctsurg/errors.hpp"
#include "ctsurg/front.hpp"
#include "ctsurg/linalg.hpp"
#include "ctsurg/matrix.hpp"
#include "ctsurg/snf.hpp"

namespace ctsurg {

// ---------------------------------------------------------------------------
// Contact (+-1)-surgery presentations over (S^3, xi_st)
//
// A presentation stores, per component, the contact coefficient (+1 or -1),
// the classical invariants tb and rot, and a provenance tag; the full
// symmetric linking matrix keeps the topological framings n_i = tb_i + r_i
// on its diagonal. Handle slides are matrix-level congruences: slid
// components lose their drawing and become abstract.
// ---------------------------------------------------------------------------

inline int check_contact_coefficient(int r) {
    if (r != 1 && r != -1)
        throw Error("contact coefficient must be +1 or -1; rational coefficients are not "
                    "supported here (convert them to a sequence of +-1 surgeries first)");
    return r;
}

inline long long topological_framing(long long tb, int coeff) {
    check_contact_coefficient(coeff);
    return tb + coeff;
}

struct SurgerySource {
    enum class Kind { explicit_front, derived, abstract };
    Kind kind = Kind::abstract;
    std::string front_ref;             // explicit: originating diagram label
    int front_component = -1;          // explicit: component index there
    int base = -1;                     // derived: index of base component
    std::vector<ZigzagDir> zigzags;    // derived: stabilizations applied

    static SurgerySource explicit_from(std::string ref, int component) {
        SurgerySource s;
        s.kind = Kind::explicit_front;
        s.front_ref = std::move(ref);
        s.front_component = component;
        return s;
    }
    static SurgerySource derived_from(int base, std::vector<ZigzagDir> zz) {
        SurgerySource s;
        s.kind = Kind::derived;
        s.base = base;
        s.zigzags = std::move(zz);
        return s;
    }
    static SurgerySource abstract() { return {}; }
};

struct SurgeryComponent {
    SurgerySource source;
    int coefficient = 1; // +1 or -1
    long long tb = 0;
    long long rot = 0;

    long long framing() const { return tb + coefficient; }
};

class SurgeryPresentation {
public:
    SurgeryPresentation() = default;

    SurgeryPresentation(std::vector<SurgeryComponent> components,
                        std::vector<std::vector<long long>> linking)
        : components_(std::move(components)), lk_(std::move(linking)) {
        const std::size_t n = components_.size();
        if (lk_.size() != n) throw DimensionMismatch("linking matrix size");
        for (std::size_t i = 0; i < n; ++i) {
            if (lk_[i].size() != n) throw DimensionMismatch("linking matrix size");
            check_contact_coefficient(components_[i].coefficient);
            if (lk_[i][i] != components_[i].framing())
                throw Error("diagonal entry differs from topological framing");
            for (std::size_t j = 0; j < i; ++j)
                if (lk_[i][j] != lk_[j][i]) throw Error("linking matrix not symmetric");
            const SurgerySource& src = components_[i].source;
            if (src.kind == SurgerySource::Kind::derived &&
                (src.base < 0 || src.base >= static_cast<int>(n) ||
                 src.base == static_cast<int>(i)))
                throw UnresolvableLinking("derived component's base is absent");
        }
    }

    // All components of a front become surgery components with the given
    // contact coefficients (one per component, +1 by default).
    static SurgeryPresentation from_front(const FrontDiagram& d, std::vector<int> coeffs = {},
                                          std::string ref = "front") {
        ClassicalInvariants inv = classical_invariants(d);
        const std::size_t n = inv.components.size();
        if (coeffs.empty()) coeffs.assign(n, 1);
        if (coeffs.size() != n)
            throw DimensionMismatch("need one contact coefficient per component");
        SurgeryPresentation p;
        p.components_.resize(n);
        p.lk_.assign(n, std::vector<long long>(n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            auto& c = p.components_[i];
            c.source = SurgerySource::explicit_from(ref, static_cast<int>(i));
            c.coefficient = check_contact_coefficient(coeffs[i]);
            c.tb = inv.components[i].tb;
            c.rot = inv.components[i].rot;
            for (std::size_t j = 0; j < n; ++j)
                p.lk_[i][j] = i == j ? c.framing() : inv.linking[i][j];
        }
        return p;
    }

    std::size_t size() const { return components_.size(); }
    const SurgeryComponent& component(std::size_t i) const { return components_.at(i); }
    long long framing(std::size_t i) const { return lk_.at(i).at(i); }
    long long linking(std::size_t i, std::size_t j) const { return lk_.at(i).at(j); }
    const std::vector<std::vector<long long>>& linking_rows() const { return lk_; }

    std::vector<long long> rotation_vector() const {
        std::vector<long long> r;
        r.reserve(components_.size());
        for (const auto& c : components_) r.push_back(c.rot);
        return r;
    }

    int plus_one_count() const {
        int q = 0;
        for (const auto& c : components_) q += c.coefficient == 1 ? 1 : 0;
        return q;
    }

    // Appends a push-off of `base` carrying the listed zigzags. The copy
    // runs parallel to its base: it links every other component as the base
    // does and links the base tb(base) times.
    void append_derived(std::size_t base, const std::vector<ZigzagDir>& zigzags, int coeff,
                        std::size_t insert_at) {
        if (base >= components_.size()) throw UnresolvableLinking("derived base out of range");
        if (insert_at > components_.size()) throw IndexError("insert position out of range");
        SurgeryComponent c;
        c.coefficient = check_contact_coefficient(coeff);
        const SurgeryComponent& b = components_[base];
        c.tb = b.tb - static_cast<long long>(zigzags.size());
        c.rot = b.rot;
        for (ZigzagDir z : zigzags) c.rot += z == ZigzagDir::up ? -1 : 1;

        const std::size_t n = components_.size();
        std::vector<long long> row(n, 0);
        for (std::size_t j = 0; j < n; ++j) row[j] = j == base ? b.tb : lk_[base][j];
        std::vector<std::vector<long long>> nl(n + 1, std::vector<long long>(n + 1, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) nl[i < insert_at ? i : i + 1][j < insert_at ? j : j + 1] = lk_[i][j];
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t jj = j < insert_at ? j : j + 1;
            nl[insert_at][jj] = row[j];
            nl[jj][insert_at] = row[j];
        }
        nl[insert_at][insert_at] = c.framing();
        std::size_t adjusted_base = base < insert_at ? base : base + 1;
        c.source = SurgerySource::derived_from(static_cast<int>(adjusted_base), zigzags);
        // reindex stored derived bases past the insertion point
        for (auto& comp : components_)
            if (comp.source.kind == SurgerySource::Kind::derived &&
                comp.source.base >= static_cast<int>(insert_at))
                ++comp.source.base;
        components_.insert(components_.begin() + insert_at, std::move(c));
        lk_ = std::move(nl);
    }

    void set_component(std::size_t i, SurgeryComponent c) { components_.at(i) = std::move(c); }
    void set_linking_entry(std::size_t i, std::size_t j, long long v) {
        lk_.at(i).at(j) = v;
        lk_.at(j).at(i) = v;
    }
    void set_framing(std::size_t i, long long v) { lk_.at(i).at(i) = v; }

    void erase_two(std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        for (std::size_t i : {b, a}) {
            components_.erase(components_.begin() + i);
            lk_.erase(lk_.begin() + i);
            for (auto& row : lk_) row.erase(row.begin() + i);
        }
    }

private:
    std::vector<SurgeryComponent> components_;
    std::vector<std::vector<long long>> lk_; // symmetric; diagonal = framings
};

inline IntMat linking_matrix(const SurgeryPresentation& p) {
    return IntMat::from_rows(p.linking_rows());
}

// ---------------------------------------------------------------------------
// Handle slides and cancellation
// ---------------------------------------------------------------------------

// Component i becomes L_i + sign * L_j. The linking matrix transforms by the
// unimodular congruence E M E^T with E = I + sign * e_i e_j^T, which leaves
// the Smith invariant factors unchanged; the rotation vector transforms by
// E. The slid component's drawing is no longer meaningful and its source
// becomes abstract.
inline SurgeryPresentation handle_slide(const SurgeryPresentation& p, std::size_t i,
                                        std::size_t j, int sign) {
    const std::size_t n = p.size();
    if (i >= n || j >= n || i == j) throw IndexError("handle slide needs distinct valid indices");
    if (sign != 1 && sign != -1) throw IndexError("handle slide sign must be +1 or -1");
    SurgeryPresentation out = p;
    const long long ni = p.framing(i);
    const long long nj = p.framing(j);
    const long long lij = p.linking(i, j);
    out.set_framing(i, ni + nj + 2 * sign * lij);
    out.set_linking_entry(i, j, lij + sign * nj);
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        out.set_linking_entry(i, k, p.linking(i, k) + sign * p.linking(j, k));
    }
    SurgeryComponent c = p.component(i);
    c.rot = c.rot + sign * p.component(j).rot;
    c.tb = out.framing(i) - c.coefficient;
    c.source = SurgerySource::abstract();
    out.set_component(i, std::move(c));
    return out;
}

inline SurgeryPresentation reverse_component(const SurgeryPresentation& p, std::size_t i) {
    if (i >= p.size()) throw IndexError("component index out of range");
    SurgeryPresentation out = p;
    for (std::size_t k = 0; k < p.size(); ++k)
        if (k != i) out.set_linking_entry(i, k, -p.linking(i, k));
    SurgeryComponent c = p.component(i);
    c.rot = -c.rot;
    c.source = SurgerySource::abstract();
    out.set_component(i, std::move(c));
    return out;
}

// Cancels a knot together with a 0-framed meridian of it. Every other
// component is first slid over the meridian until it no longer links the
// knot; with the meridian 0-framed and unlinked from everything else these
// slides change nothing besides the linking with the knot. Removing the two
// rows then preserves the (unit-free) Smith invariant factors.
inline SurgeryPresentation cancel_meridian_pair(const SurgeryPresentation& p, std::size_t knot,
                                                std::size_t meridian) {
    const std::size_t n = p.size();
    if (knot >= n || meridian >= n || knot == meridian)
        throw IndexError("cancellation needs distinct valid indices");
    if (p.framing(meridian) != 0)
        throw NotACancellingPair("meridian framing is not 0");
    const long long eps = p.linking(knot, meridian);
    if (eps != 1 && eps != -1)
        throw NotACancellingPair("knot and meridian do not link exactly once");
    for (std::size_t k = 0; k < n; ++k)
        if (k != knot && k != meridian && p.linking(meridian, k) != 0)
            throw NotACancellingPair("meridian links a third component");

    SurgeryPresentation out = p;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == knot || k == meridian) continue;
        long long delta = out.linking(k, knot);
        int sign = (delta > 0) == (eps > 0) ? -1 : 1; // each slide moves lk by sign*eps
        for (long long s = 0; s < std::llabs(delta); ++s) out = handle_slide(out, k, meridian, sign);
    }
    out.erase_two(knot, meridian);
    return out;
}

// ---------------------------------------------------------------------------
// First homology and disjoint union
// ---------------------------------------------------------------------------

// Invariant factors of coker(linking matrix): normalized Smith diagonal with
// unit factors dropped. Empty means trivial H_1; each zero is a free summand.
inline std::vector<BigInt> first_homology(const SurgeryPresentation& p) {
    std::vector<BigInt> d = smith_diagonal(linking_matrix(p));
    std::vector<BigInt> out;
    for (const BigInt& v : d)
        if (!v.is_one()) out.push_back(v);
    return out;
}

inline SurgeryPresentation disjoint_union(const SurgeryPresentation& a,
                                          const SurgeryPresentation& b) {
    const std::size_t na = a.size(), nb = b.size();
    std::vector<SurgeryComponent> comps;
    comps.reserve(na + nb);
    for (std::size_t i = 0; i < na; ++i) comps.push_back(a.component(i));
    for (std::size_t i = 0; i < nb; ++i) {
        SurgeryComponent c = b.component(i);
        if (c.source.kind == SurgerySource::Kind::derived) c.source.base += static_cast<int>(na);
        comps.push_back(std::move(c));
    }
    std::vector<std::vector<long long>> lk(na + nb, std::vector<long long>(na + nb, 0));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) lk[i][j] = a.linking(i, j);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) lk[na + i][na + j] = b.linking(i, j);
    return SurgeryPresentation(std::move(comps), std::move(lk));
}

// ---------------------------------------------------------------------------
// Overtwisted-disc framing bookkeeping
// ---------------------------------------------------------------------------

// For a presentation whose first two components form the surgery pair
// (L1, L2) = (knot with tb = t, push-off with two zigzags), the candidate
// disc boundary K is the push-off of L1 with one zigzag and one extra
// negative linking with L2: lk(K, L1) = n1 - 1, lk(K, L2) = lk(L1, L2) - 1,
// and the disc gives K the surface framing n1 + 0 - 2. The check succeeds
// when that framing equals the contact framing t - 1 of K and the pair data
// matches the construction.
inline bool overtwisted_framing_check(const SurgeryPresentation& p) {
    if (p.size() < 2) throw MalformedPair("presentation has fewer than two components");
    // locate the pair: the push-off carries a two-zigzag derived tag; fall
    // back to the leading two components when the tags were stripped
    std::size_t i1 = 0, i2 = 1;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const SurgerySource& s = p.component(i).source;
        if (s.kind == SurgerySource::Kind::derived && s.zigzags.size() == 2 && s.base >= 0) {
            i1 = static_cast<std::size_t>(s.base);
            i2 = i;
            break;
        }
    }
    if (i1 >= p.size() || i1 == i2) throw MalformedPair("derived tag points outside presentation");
    const SurgeryComponent& l1 = p.component(i1);
    const SurgeryComponent& l2 = p.component(i2);
    const long long t = l1.tb;
    if (l1.coefficient != 1 || l2.coefficient != 1) return false;
    if (l2.tb != t - 2) return false;
    if (p.framing(i1) != t + 1 || p.framing(i2) != t - 1) return false;
    if (p.linking(i1, i2) != t) return false;
    const long long lk_k_l1 = p.framing(i1) - 1;     // slide of a meridian over L1
    const long long lk_k_l2 = p.linking(i1, i2) - 1; // one extra negative clasp with L2
    const long long disc_framing = p.framing(i1) + 0 - 2;
    const long long contact_framing_k = t - 1; // tb of the one-zigzag push-off K
    return lk_k_l1 == t && lk_k_l2 == t - 1 && disc_framing == contact_framing_k;
}

} // namespace ctsurg
