#pragma once

#include <array>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidsig/braid.hpp"
#include "braidsig/errors.hpp"

namespace braidsig {

/// Ports name the four strand ends of a crossing:
///   N = upper-left, E = upper-right, S = lower-right, W = lower-left.
/// Strands run upward through the braid, so N and E are outgoing ends and
/// S, W are incoming. Counterclockwise around the crossing: W, S, E, N.
enum class Port : int { N = 0, E = 1, S = 2, W = 3 };

/// Quadrants of a crossing, named by the arrival port of the face walk that
/// traverses them: Top between N and E, Right between E and S, Bottom
/// between S and W, Left between W and N.
enum class Quadrant : int { Top = 0, Right = 1, Bottom = 2, Left = 3 };

struct CrossingInfo {
    int id;       // word position
    int column;   // generator index k: crossing joins strands k, k+1
};

struct PortRef {
    int crossing = -1;
    Port port = Port::N;
};

struct Arc {
    int id = -1;
    bool loop = false;   // crossing-free strand circle
    int column = 0;      // strand column the arc runs along
    bool closure = false;
    PortRef from, to;    // strand direction (upper end -> lower end of the next crossing)
};

struct Face {
    int id = -1;
    bool unbounded = false;
    // boundary walks; each entry is (arc id, forward side?). Nested closure
    // loops produce faces with more than one boundary cycle.
    std::vector<std::vector<std::pair<int, bool>>> cycles;
};

enum class FaceColor : int { White = 0, Shaded = 1 };

struct Coloring {
    std::vector<int> color_of;  // indexed by face id; -1 for non-representative ids
    int unbounded = -1;

    FaceColor at(int face) const { return static_cast<FaceColor>(color_of[static_cast<std::size_t>(face)]); }
    bool is_white(int face) const { return at(face) == FaceColor::White; }
};

struct CrossingClass {
    int crossing = -1;
    bool type_two = false;
    int eta = 0;
};

class PlanarDiagram {
public:
    explicit PlanarDiagram(const BraidWord& w) : word_(w) { build(); }

    const BraidWord& word() const { return word_; }
    const std::vector<CrossingInfo>& crossings() const { return crossings_; }
    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Face>& faces() const { return faces_; }
    int unbounded_face() const { return unbounded_face_; }
    int innermost_face() const { return innermost_face_; }

    /// Final (merged) face occupying the given quadrant of a crossing.
    int quadrant_face(int crossing, Quadrant q) const {
        return find(corner_face_[static_cast<std::size_t>(crossing)][static_cast<int>(q)]);
    }

    int arc_at(int crossing, Port p) const {
        return port_arc_[static_cast<std::size_t>(crossing)][static_cast<int>(p)];
    }

    /// The two final faces on the two sides of an arc.
    std::pair<int, int> arc_faces(int arc) const {
        const Arc& a = arcs_[static_cast<std::size_t>(arc)];
        if (a.loop)
            return {find(loop_faces_[static_cast<std::size_t>(arc)].first),
                    find(loop_faces_[static_cast<std::size_t>(arc)].second)};
        return {find(half_face_[2 * static_cast<std::size_t>(arc)]),
                find(half_face_[2 * static_cast<std::size_t>(arc) + 1])};
    }

    std::string dump() const {
        std::ostringstream os;
        static const char* pn[4] = {"N", "E", "S", "W"};
        for (const auto& c : crossings_) {
            os << 'c' << c.id << " col=" << c.column << " ports=(";
            for (int p = 0; p < 4; ++p) {
                if (p) os << ',';
                os << pn[p] << ":a" << port_arc_[static_cast<std::size_t>(c.id)][p];
            }
            os << ")\n";
        }
        for (const auto& f : faces_) {
            os << 'f' << f.id << " arcs=(";
            bool first = true;
            for (const auto& cyc : f.cycles) {
                if (!first) os << ';';
                first = false;
                for (std::size_t i = 0; i < cyc.size(); ++i) {
                    if (i) os << ',';
                    os << 'a' << cyc[i].first;
                }
            }
            os << ')';
            if (f.unbounded) os << " unbounded";
            os << '\n';
        }
        return os.str();
    }

private:
    BraidWord word_;
    std::vector<CrossingInfo> crossings_;
    std::vector<Arc> arcs_;
    std::vector<std::array<int, 4>> port_arc_;  // arc id at each port
    std::vector<int> half_face_;                // raw face id per half-edge
    std::vector<std::array<int, 4>> corner_face_; // raw face id per arrival port
    std::vector<std::pair<int, int>> loop_faces_; // (inside, outside) per loop arc id
    std::vector<int> face_parent_;              // union-find over raw face ids
    std::vector<Face> faces_;                   // final faces, ids = class reps
    std::vector<std::pair<int, int>> blocks_;   // split blocks as column ranges
    int unbounded_face_ = -1;
    int innermost_face_ = -1;

    int find(int x) const {
        while (face_parent_[static_cast<std::size_t>(x)] != x)
            x = face_parent_[static_cast<std::size_t>(x)];
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        face_parent_[static_cast<std::size_t>(b)] = a; // smallest id is the representative
    }

    // CW successor of a port (rotation is CCW = [W, S, E, N]).
    static Port cw_next(Port p) {
        switch (p) {
            case Port::W: return Port::N;
            case Port::N: return Port::E;
            case Port::E: return Port::S;
            case Port::S: return Port::W;
        }
        return Port::N;
    }

    void build() {
        const auto& letters = word_.letters();
        const int b = word_.strands();
        const int l = static_cast<int>(letters.size());

        crossings_.reserve(static_cast<std::size_t>(l));
        for (int t = 0; t < l; ++t)
            crossings_.push_back({t, letters[static_cast<std::size_t>(t)]});
        port_arc_.assign(static_cast<std::size_t>(l), {-1, -1, -1, -1});

        // arcs per column, bottom to top, then that column's closure arc
        for (int c = 1; c <= b; ++c) {
            std::vector<int> chain; // crossing ids meeting column c, in word order
            for (int t = 0; t < l; ++t) {
                const int k = letters[static_cast<std::size_t>(t)];
                if (k == c || k + 1 == c) chain.push_back(t);
            }
            if (chain.empty()) {
                Arc a;
                a.id = static_cast<int>(arcs_.size());
                a.loop = true;
                a.column = c;
                a.closure = true;
                arcs_.push_back(a);
                continue;
            }
            auto upper_port = [&](int t) {
                return letters[static_cast<std::size_t>(t)] == c ? Port::N : Port::E;
            };
            auto lower_port = [&](int t) {
                return letters[static_cast<std::size_t>(t)] == c ? Port::W : Port::S;
            };
            const std::size_t m = chain.size();
            for (std::size_t i = 0; i < m; ++i) {
                const int t_from = chain[i];
                const int t_to = chain[(i + 1) % m];
                Arc a;
                a.id = static_cast<int>(arcs_.size());
                a.column = c;
                a.closure = (i + 1 == m);
                a.from = {t_from, upper_port(t_from)};
                a.to = {t_to, lower_port(t_to)};
                arcs_.push_back(a);
                port_arc_[static_cast<std::size_t>(t_from)][static_cast<int>(a.from.port)] = a.id;
                port_arc_[static_cast<std::size_t>(t_to)][static_cast<int>(a.to.port)] = a.id;
            }
        }
        for (int t = 0; t < l; ++t)
            for (int p = 0; p < 4; ++p)
                if (port_arc_[static_cast<std::size_t>(t)][p] < 0)
                    throw MalformedDiagram("unmatched port");

        trace_faces();
        merge_blocks();
        collect_faces();
    }

    // out-going half-edge through a port: N/E ports carry the arc's forward
    // half-edge, S/W its backward one.
    int out_half(int crossing, Port p) const {
        const int a = port_arc_[static_cast<std::size_t>(crossing)][static_cast<int>(p)];
        const Arc& arc = arcs_[static_cast<std::size_t>(a)];
        if (arc.from.crossing == crossing && arc.from.port == p)
            return 2 * a;
        return 2 * a + 1;
    }

    void trace_faces() {
        const std::size_t H = 2 * arcs_.size();
        half_face_.assign(H, -1);
        corner_face_.assign(crossings_.size(), {-1, -1, -1, -1});
        loop_faces_.assign(arcs_.size(), {-1, -1});
        int next_face = 0;
        std::vector<std::vector<int>> raw_cycles;

        for (std::size_t h0 = 0; h0 < H; ++h0) {
            if (arcs_[h0 / 2].loop || half_face_[h0] >= 0) continue;
            const int f = next_face++;
            std::vector<int> cyc;
            std::size_t h = h0;
            do {
                half_face_[h] = f;
                cyc.push_back(static_cast<int>(h));
                const Arc& a = arcs_[h / 2];
                const PortRef arrive = (h % 2 == 0) ? a.to : a.from;
                corner_face_[static_cast<std::size_t>(arrive.crossing)]
                            [static_cast<int>(arrive.port)] = f;
                h = static_cast<std::size_t>(
                    out_half(arrive.crossing, cw_next(arrive.port)));
            } while (h != h0);
            raw_cycles.push_back(std::move(cyc));
        }
        // virtual faces for crossing-free strand circles: inside, outside
        for (const Arc& a : arcs_) {
            if (!a.loop) continue;
            loop_faces_[static_cast<std::size_t>(a.id)] = {next_face, next_face + 1};
            next_face += 2;
            raw_cycles.push_back({});
            raw_cycles.push_back({});
        }
        raw_cycles_ = std::move(raw_cycles);
        face_parent_.resize(static_cast<std::size_t>(next_face));
        std::iota(face_parent_.begin(), face_parent_.end(), 0);
    }

    std::vector<std::vector<int>> raw_cycles_;

    // raw outer face (left of the block's first column) and inner face
    // (right of its last column) of one split block
    std::pair<int, int> block_outer_inner(int c1, int c2) const {
        if (c1 == c2) {
            for (const Arc& a : arcs_)
                if (a.loop && a.column == c1)
                    return {loop_faces_[static_cast<std::size_t>(a.id)].second,
                            loop_faces_[static_cast<std::size_t>(a.id)].first};
            throw MalformedDiagram("missing loop arc");
        }
        int outer = -1, inner = -1;
        for (const auto& c : crossings_) {
            if (outer < 0 && c.column == c1)
                outer = corner_face_[static_cast<std::size_t>(c.id)][static_cast<int>(Quadrant::Left)];
            if (inner < 0 && c.column == c2 - 1)
                inner = corner_face_[static_cast<std::size_t>(c.id)][static_cast<int>(Quadrant::Right)];
            if (outer >= 0 && inner >= 0) break;
        }
        if (outer < 0 || inner < 0)
            throw MalformedDiagram("block without boundary crossings");
        return {outer, inner};
    }

    void merge_blocks() {
        const int b = word_.strands();
        std::vector<char> used(static_cast<std::size_t>(b) + 1, 0);
        for (int k : word_.letters()) used[static_cast<std::size_t>(k)] = 1;
        int start = 1;
        for (int k = 1; k < b; ++k)
            if (!used[static_cast<std::size_t>(k)]) {
                blocks_.push_back({start, k});
                start = k + 1;
            }
        blocks_.push_back({start, b});

        int prev_inner = -1;
        for (std::size_t i = 0; i < blocks_.size(); ++i) {
            auto [outer, inner] = block_outer_inner(blocks_[i].first, blocks_[i].second);
            if (i == 0)
                unbounded_face_ = outer;
            else
                unite(prev_inner, outer);
            prev_inner = inner;
        }
        innermost_face_ = find(prev_inner);
        unbounded_face_ = find(unbounded_face_);
    }

    void collect_faces() {
        const std::size_t R = face_parent_.size();
        std::vector<int> rep_index(R, -1);
        for (std::size_t r = 0; r < R; ++r) {
            const int rep = find(static_cast<int>(r));
            if (rep_index[static_cast<std::size_t>(rep)] < 0) {
                rep_index[static_cast<std::size_t>(rep)] = static_cast<int>(faces_.size());
                Face f;
                f.id = rep;
                f.unbounded = (rep == unbounded_face_);
                faces_.push_back(std::move(f));
            }
            Face& f = faces_[static_cast<std::size_t>(rep_index[static_cast<std::size_t>(rep)])];
            if (r < raw_cycles_.size() && !raw_cycles_[r].empty()) {
                std::vector<std::pair<int, bool>> cyc;
                cyc.reserve(raw_cycles_[r].size());
                for (int h : raw_cycles_[r])
                    cyc.push_back({h / 2, h % 2 == 0});
                f.cycles.push_back(std::move(cyc));
            }
        }
        // loop arcs appear as their own (possibly merged) boundary cycles
        for (const Arc& a : arcs_) {
            if (!a.loop) continue;
            auto [in_raw, out_raw] = loop_faces_[static_cast<std::size_t>(a.id)];
            for (int raw : {in_raw, out_raw}) {
                const int rep = find(raw);
                for (Face& f : faces_)
                    if (f.id == rep) {
                        f.cycles.push_back({{a.id, raw == in_raw}});
                        break;
                    }
            }
        }
        validate();
    }

    void validate() const {
        // Euler check on the sphere, counting each strand circle as a vertex
        // with a self-arc and each split block as a component.
        const std::size_t V = crossings_.size() +
            static_cast<std::size_t>(std::count_if(arcs_.begin(), arcs_.end(),
                                                   [](const Arc& a) { return a.loop; }));
        const std::size_t A = arcs_.size();
        const std::size_t C = blocks_.size();
        if (faces_.size() != A - V + 1 + C)
            throw MalformedDiagram("Euler check failed");
    }
};

inline PlanarDiagram closure_diagram(const BraidWord& w) { return PlanarDiagram(w); }

inline const std::vector<Face>& faces(const PlanarDiagram& d) { return d.faces(); }

/// Checkerboard 2-coloring of the faces; the unbounded face is white.
inline Coloring checkerboard(const PlanarDiagram& d) {
    Coloring col;
    std::size_t max_id = 0;
    for (const Face& f : d.faces())
        max_id = std::max(max_id, static_cast<std::size_t>(f.id));
    col.color_of.assign(max_id + 1, -1);
    col.unbounded = d.unbounded_face();

    std::vector<std::vector<int>> adj(max_id + 1);
    for (const Arc& a : d.arcs()) {
        auto [x, y] = d.arc_faces(a.id);
        adj[static_cast<std::size_t>(x)].push_back(y);
        adj[static_cast<std::size_t>(y)].push_back(x);
    }
    col.color_of[static_cast<std::size_t>(col.unbounded)] = static_cast<int>(FaceColor::White);
    std::vector<int> queue{col.unbounded};
    while (!queue.empty()) {
        const int f = queue.back();
        queue.pop_back();
        const int want = 1 - col.color_of[static_cast<std::size_t>(f)];
        for (int other : adj[static_cast<std::size_t>(f)]) {
            int& slot = col.color_of[static_cast<std::size_t>(other)];
            if (slot < 0) {
                slot = want;
                queue.push_back(other);
            } else if (slot != want) {
                throw NotBipartite("checkerboard coloring failed");
            }
        }
    }
    for (const Face& f : d.faces())
        if (col.color_of[static_cast<std::size_t>(f.id)] < 0)
            throw NotBipartite("disconnected face adjacency");
    return col;
}

/// Type and sign of a crossing from the local coloring. For a positive braid
/// crossing the two strands are parallel; the crossing is type II exactly
/// when the shaded quadrants are the top/bottom pair. The sign table is
/// calibrated so that sigma(closure a1^{n+1} in B_2) = -n.
inline CrossingClass classify_crossing(const PlanarDiagram& d, const Coloring& col, int crossing) {
    const int top = d.quadrant_face(crossing, Quadrant::Top);
    const int bottom = d.quadrant_face(crossing, Quadrant::Bottom);
    const int left = d.quadrant_face(crossing, Quadrant::Left);
    const int right = d.quadrant_face(crossing, Quadrant::Right);
    if (col.at(top) != col.at(bottom) || col.at(left) != col.at(right) ||
        col.at(top) == col.at(left))
        throw MalformedDiagram("quadrant coloring is not checkerboard");
    CrossingClass cc;
    cc.crossing = crossing;
    cc.type_two = (col.at(top) == FaceColor::Shaded);
    cc.eta = cc.type_two ? 1 : -1;
    return cc;
}

} // namespace braidsig
