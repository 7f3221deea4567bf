#pragma once

#include <map>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/exact_forms.hpp"
#include "braidsig/report.hpp"

namespace braidsig {

/// One H1 basis loop of the Bennequin surface: the p-th and (p+1)-th
/// occurrence of generator a_k, at word positions t1 < t2.
struct Brick {
    int column = 0;
    int ordinal = 0; // p, 0-based
    int t1 = 0;
    int t2 = 0;
};

struct SeifertData {
    IntMatrix v;              // Seifert matrix, dim = betti(word)
    std::vector<Brick> basis; // column-major brick order
};

/// Seifert matrix of the Bennequin surface in the brick basis. The pairing
/// rules are combinatorial:
///   - each brick pairs with itself as -1 (two positive bands give the core
///     a full negative twist, matching sigma(T(2,n+1) closure) = -n);
///   - consecutive bricks in one column share a band: V[lower][upper] = 1,
///     the transpose entry 0;
///   - bricks in adjacent columns interact only when their position
///     intervals interleave (one endpoint strictly inside the other
///     interval): V[x][y] = 1 when the lower-column brick starts first,
///     V[y][x] = -1 otherwise;
///   - all other pairs are 0 (block-diagonal over split components).
inline SeifertData seifert_matrix(const BraidWord& w) {
    std::map<int, std::vector<int>> columns;
    for (std::size_t t = 0; t < w.length(); ++t)
        columns[w.letters()[t]].push_back(static_cast<int>(t));

    SeifertData data;
    for (const auto& [k, ps] : columns)
        for (std::size_t i = 0; i + 1 < ps.size(); ++i)
            data.basis.push_back({k, static_cast<int>(i), ps[i], ps[i + 1]});

    const std::size_t n = data.basis.size();
    data.v.assign(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        data.v[i][i] = -1;
    for (std::size_t i = 0; i < n; ++i) {
        const Brick& x = data.basis[i];
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const Brick& y = data.basis[j];
            if (y.column == x.column && y.t1 == x.t2)
                data.v[i][j] = 1;
            else if (y.column == x.column + 1) {
                if (x.t1 < y.t1 && y.t1 < x.t2 && x.t2 < y.t2)
                    data.v[i][j] = 1;   // lower column starts first
                else if (y.t1 < x.t1 && x.t1 < y.t2 && y.t2 < x.t2)
                    data.v[j][i] = -1;  // higher column starts first
            }
        }
    }
    return data;
}

inline IntMatrix symmetrized(const IntMatrix& v) {
    const std::size_t n = v.size();
    IntMatrix s(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s[i][j] = v[i][j] + v[j][i];
    return s;
}

/// Signature report through the Seifert / Bennequin-surface route.
inline InvariantReport signature_seifert(const BraidWord& w) {
    InvariantReport r;
    r.word = serialize(w);
    r.strands = w.strands();
    r.b1 = betti(w);
    r.components = components(w);
    r.method = "seifert";
    const SeifertData data = seifert_matrix(w);
    const IntMatrix s = symmetrized(data.v);
    const SignatureTriple t = signature_triple(s);
    const std::size_t parts = split_decompose(w).size();
    r.sigma = t.sigma();
    r.nullity = static_cast<int>(t.zeros) + static_cast<int>(parts) - 1;
    r.det = parts >= 2 ? Int(0) : boost::multiprecision::abs(determinant(s));
    return r;
}

} // namespace braidsig
