#pragma once

#include <climits>
#include <optional>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/diagram.hpp"
#include "braidsig/exact_forms.hpp"
#include "braidsig/report.hpp"

namespace braidsig {

struct GoeritzData {
    IntMatrix matrix;               // symmetric, one white region deleted
    long long mu = 0;               // sum of eta over type II crossings
    std::vector<int> region_labels; // white face ids forming the basis
    int deleted_region = -1;        // white face id left out
};

/// White faces in the canonical labeling order: the innermost face first
/// when it is white, then the unbounded face, then the remaining white
/// faces by the word position at which they first appear as a top quadrant.
/// For a connected 4-braid this is [gap-4, unbounded, gap-2 faces in word
/// order with the wraparound face last].
inline std::vector<int> white_face_order(const PlanarDiagram& d, const Coloring& col) {
    std::vector<int> whites;
    for (const Face& f : d.faces())
        if (col.is_white(f.id)) whites.push_back(f.id);

    std::vector<int> head;
    if (col.is_white(d.innermost_face())) head.push_back(d.innermost_face());
    if (col.is_white(d.unbounded_face()) && d.unbounded_face() != d.innermost_face())
        head.push_back(d.unbounded_face());

    auto first_top_pos = [&](int face) {
        for (const auto& c : d.crossings())
            if (d.quadrant_face(c.id, Quadrant::Top) == face) return c.id;
        return INT_MAX;
    };
    std::vector<std::pair<std::pair<int, int>, int>> rest;
    for (int f : whites) {
        if (f == d.innermost_face() || f == d.unbounded_face()) continue;
        rest.push_back({{first_top_pos(f), f}, f});
    }
    std::sort(rest.begin(), rest.end());
    for (auto& r : rest) head.push_back(r.second);
    return head;
}

namespace detail {

/// Goeritz entries over an explicit list of white faces. Diagonal entries
/// account for every white region, including ones not in the list.
inline GoeritzData goeritz_over(const PlanarDiagram& d, const Coloring& col,
                                const std::vector<int>& basis, int deleted) {
    std::vector<int> all_whites;
    for (const Face& f : d.faces())
        if (col.is_white(f.id)) all_whites.push_back(f.id);
    std::vector<int> pos(col.color_of.size(), -1);
    for (std::size_t i = 0; i < all_whites.size(); ++i)
        pos[static_cast<std::size_t>(all_whites[i])] = static_cast<int>(i);

    const std::size_t n = all_whites.size();
    IntMatrix full(n, std::vector<Int>(n, 0));
    long long mu = 0;
    for (const auto& c : d.crossings()) {
        const CrossingClass cc = classify_crossing(d, col, c.id);
        if (cc.type_two) mu += cc.eta;
        int f1, f2;
        if (col.is_white(d.quadrant_face(c.id, Quadrant::Top))) {
            f1 = d.quadrant_face(c.id, Quadrant::Top);
            f2 = d.quadrant_face(c.id, Quadrant::Bottom);
        } else {
            f1 = d.quadrant_face(c.id, Quadrant::Left);
            f2 = d.quadrant_face(c.id, Quadrant::Right);
        }
        if (f1 == f2) continue; // self-touching region: no pairing entry
        const int i = pos[static_cast<std::size_t>(f1)];
        const int j = pos[static_cast<std::size_t>(f2)];
        full[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= cc.eta;
        full[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= cc.eta;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) s += full[i][j];
        full[i][i] = -s;
    }

    GoeritzData g;
    g.mu = mu;
    g.deleted_region = deleted;
    g.region_labels = basis;
    const std::size_t k = basis.size();
    g.matrix.assign(k, std::vector<Int>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            g.matrix[i][j] = full[static_cast<std::size_t>(pos[static_cast<std::size_t>(basis[i])])]
                                 [static_cast<std::size_t>(pos[static_cast<std::size_t>(basis[j])])];
    return g;
}

} // namespace detail

/// Goeritz matrix over the white regions minus one (default: the unbounded
/// face). Works on split diagrams too; callers that need link invariants
/// should decompose first (see signature_gl).
inline GoeritzData goeritz(const PlanarDiagram& d, const Coloring& col,
                           std::optional<int> deleted_region = std::nullopt) {
    const int deleted = deleted_region.value_or(d.unbounded_face());
    if (deleted < 0 || static_cast<std::size_t>(deleted) >= col.color_of.size() ||
        col.color_of[static_cast<std::size_t>(deleted)] != static_cast<int>(FaceColor::White))
        throw RegionNotWhite("deleted region must be a white face");
    std::vector<int> basis;
    for (int f : white_face_order(d, col))
        if (f != deleted) basis.push_back(f);
    return detail::goeritz_over(d, col, basis, deleted);
}

namespace detail {

struct PartInvariants {
    long long sigma = 0;
    Int det = 1;
    int nullity = 0;
};

inline PartInvariants gl_connected(const BraidWord& w) {
    PartInvariants out;
    if (w.strands() == 1) return out; // unknot
    PlanarDiagram d(w);
    Coloring col = checkerboard(d);
    GoeritzData g = goeritz(d, col);
    SignatureTriple t = signature_triple(g.matrix);
    out.sigma = t.sigma() - g.mu;
    out.det = boost::multiprecision::abs(determinant(g.matrix));
    out.nullity = static_cast<int>(t.zeros);
    return out;
}

} // namespace detail

/// Signature report through the Goeritz / Gordon-Litherland route.
/// Split words are decomposed and the parts combined: signatures add, the
/// determinant of a split union is 0, nullity adds plus one per extra part.
inline InvariantReport signature_gl(const BraidWord& w) {
    InvariantReport r;
    r.word = serialize(w);
    r.strands = w.strands();
    r.b1 = betti(w);
    r.components = components(w);
    r.method = "gordon-litherland";
    auto parts = split_decompose(w);
    Int det = 1;
    for (const BraidWord& p : parts) {
        auto inv = detail::gl_connected(p);
        r.sigma += inv.sigma;
        r.nullity += inv.nullity;
        det *= inv.det;
    }
    r.nullity += static_cast<int>(parts.size()) - 1;
    r.det = parts.size() >= 2 ? Int(0) : det;
    return r;
}

struct FirstRowReport {
    GoeritzData g_beta;
    GoeritzData g_alpha;
    bool agree_submatrix = false;      // entries with both indices >= 2 coincide
    long long sigma_g_beta = 0;
    long long sigma_g_alpha = 0;
    bool signature_inequality = false; // -sigma(G_beta) >= -sigma(G_alpha) - 1
};

/// Compare the Goeritz matrices of a 4-braid word and of its a3 -> a1
/// substitution over the aligned basis [gap-4 region, gap-2 wraparound
/// region, interior gap-2 regions in word order], deleting the gap-0 region.
/// The gap-2 regions correspond across the two diagrams because the a2
/// positions are untouched by the substitution.
inline FirstRowReport first_row_comparison(const BraidWord& beta) {
    if (beta.strands() != 4)
        throw PreconditionViolated("first-row comparison requires a 4-braid");
    bool has[4] = {false, false, false, false};
    for (int k : beta.letters()) has[k] = true;
    if (!(has[1] && has[2] && has[3]))
        throw PreconditionViolated("word must use a1, a2 and a3 at least once");

    const BraidWord alpha = substitute_a3_to_a1(beta);
    std::vector<int> a2pos;
    for (std::size_t t = 0; t < beta.length(); ++t)
        if (beta.letters()[t] == 2) a2pos.push_back(static_cast<int>(t));

    auto build = [&](const BraidWord& w) {
        PlanarDiagram d(w);
        Coloring col = checkerboard(d);
        std::vector<int> basis;
        basis.push_back(d.innermost_face());
        basis.push_back(d.quadrant_face(a2pos.back(), Quadrant::Top)); // wraparound
        for (std::size_t i = 0; i + 1 < a2pos.size(); ++i)
            basis.push_back(d.quadrant_face(a2pos[i], Quadrant::Top));
        return detail::goeritz_over(d, col, basis, d.unbounded_face());
    };

    FirstRowReport rep;
    rep.g_beta = build(beta);
    rep.g_alpha = build(alpha);
    const std::size_t k = rep.g_beta.matrix.size();
    rep.agree_submatrix = true;
    for (std::size_t i = 1; i < k && rep.agree_submatrix; ++i)
        for (std::size_t j = 1; j < k; ++j)
            if (rep.g_beta.matrix[i][j] != rep.g_alpha.matrix[i][j]) {
                rep.agree_submatrix = false;
                break;
            }
    rep.sigma_g_beta = signature_triple(rep.g_beta.matrix).sigma();
    rep.sigma_g_alpha = signature_triple(rep.g_alpha.matrix).sigma();
    rep.signature_inequality = (-rep.sigma_g_beta >= -rep.sigma_g_alpha - 1);
    return rep;
}

} // namespace braidsig
