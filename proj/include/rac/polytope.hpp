// The Kerckhoff-Storm right-angled polytope P4 in H4: half-space data,
// exact Gram classification, vertex enumeration, face lattice, combinatorial
// automorphisms and their isometry realizations.

#ifndef RAC_POLYTOPE_HPP
#define RAC_POLYTOPE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>
#include "rac/linalg.hpp"

namespace rac {

using FacetMask = uint32_t;  // bit i = facet i of the 22

struct HalfSpace {
    std::string label;
    LorentzVector normal;
};

struct Polytope {
    std::vector<HalfSpace> halfspaces;

    int index_of(const std::string& label) const {
        for (size_t i = 0; i < halfspaces.size(); ++i)
            if (halfspaces[i].label == label) return static_cast<int>(i);
        return -1;
    }
    size_t facet_count() const { return halfspaces.size(); }
};

/// Table-1 vectors; labels sorted lexicographically (C12..C34, E1..E4', H1..H4').
inline Polytope standard_p4() {
    Polytope p;
    const FieldElement R2 = FieldElement::r2();
    const FieldElement R3 = FieldElement::r3();
    const FieldElement T = FieldElement(Rational(0), Rational(0), Rational(1, 3), Rational(0));  // sqrt3/3
    auto E = [&](int s1, int s2, int s3) {
        return LorentzVector{R2, FieldElement(s1), FieldElement(s2), FieldElement(s3), R3};
    };
    auto Ep = [&](int s1, int s2, int s3) {
        return LorentzVector{R2, FieldElement(-s1), FieldElement(-s2), FieldElement(-s3), -R3};
    };
    auto H = [&](int s1, int s2, int s3) {
        return LorentzVector{R2, FieldElement(-s1), FieldElement(-s2), FieldElement(-s3), T};
    };
    auto Hp = [&](int s1, int s2, int s3) {
        return LorentzVector{R2, FieldElement(s1), FieldElement(s2), FieldElement(s3), -T};
    };
    auto C = [&](int axis, int sgn) {
        LorentzVector v{FieldElement(1), FieldElement(0), FieldElement(0), FieldElement(0), FieldElement(0)};
        v[axis] = sgn > 0 ? R2 : -R2;
        return v;
    };
    const int sg[5][3] = {{0,0,0}, {1,1,1}, {1,-1,-1}, {-1,1,-1}, {-1,-1,1}};
    std::vector<HalfSpace> hs;
    for (int i = 1; i <= 4; ++i) {
        hs.push_back({"E" + std::to_string(i), E(sg[i][0], sg[i][1], sg[i][2])});
        hs.push_back({"E" + std::to_string(i) + "'", Ep(sg[i][0], sg[i][1], sg[i][2])});
        hs.push_back({"H" + std::to_string(i), H(sg[i][0], sg[i][1], sg[i][2])});
        hs.push_back({"H" + std::to_string(i) + "'", Hp(sg[i][0], sg[i][1], sg[i][2])});
    }
    hs.push_back({"C12", C(1, +1)});
    hs.push_back({"C34", C(1, -1)});
    hs.push_back({"C13", C(2, +1)});
    hs.push_back({"C24", C(2, -1)});
    hs.push_back({"C14", C(3, +1)});
    hs.push_back({"C23", C(3, -1)});
    std::sort(hs.begin(), hs.end(),
              [](const HalfSpace& x, const HalfSpace& y) { return x.label < y.label; });
    p.halfspaces = std::move(hs);
    return p;
}

enum class RelationKind { Orthogonal, Tangent, Ultraparallel, Angled };

struct FacetRelation {
    RelationKind kind;
    FieldElement cos2;  // defined unless orthogonal (then 0)
};

/// Exact Gram trichotomy of a facet pair.
inline FacetRelation facet_relation(const Polytope& p, int i, int j) {
    const LorentzVector &u = p.halfspaces[i].normal, &v = p.halfspaces[j].normal;
    FieldElement uv = minkowski_inner(u, v);
    if (uv.is_zero()) return {RelationKind::Orthogonal, FieldElement(0)};
    FieldElement c2 = (uv * uv) / (minkowski_inner(u, u) * minkowski_inner(v, v));
    if (uv.sign() > 0) return {RelationKind::Angled, c2};  // would meet at angle > pi/2
    int s = (c2 - FieldElement(1)).sign();
    if (s == 0) return {RelationKind::Tangent, c2};
    if (s > 0) return {RelationKind::Ultraparallel, c2};
    return {RelationKind::Angled, c2};
}

enum class VertexKind { Finite, Ideal };

struct Vertex {
    LorentzVector rep;   // primitive representative, future pointing
    VertexKind kind;
    FacetMask facets;    // all facets containing it
};

namespace detail {
inline std::string lv_key(const LorentzVector& v) {
    std::string s;
    for (auto& e : v) { s += e.str(); s += ';'; }
    return s;
}
}  // namespace detail

/// All finite and ideal vertices, deduplicated projectively.
/// Right-angled combinatorics: every vertex lies on >= 4 facets whose
/// pairwise relations are orthogonal or tangent, so only such 4-subsets
/// are scanned.
inline std::vector<Vertex> vertices(const Polytope& p) {
    const int n = static_cast<int>(p.facet_count());
    std::vector<std::vector<bool>> ok(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            RelationKind k = facet_relation(p, i, j).kind;
            ok[i][j] = ok[j][i] =
                (k == RelationKind::Orthogonal || k == RelationKind::Tangent);
        }
    std::map<std::string, Vertex> out;
    std::vector<LorentzVector> rows(4);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (!ok[a][b]) continue;
            for (int c = b + 1; c < n; ++c) {
                if (!ok[a][c] || !ok[b][c]) continue;
                for (int d = c + 1; d < n; ++d) {
                    if (!ok[a][d] || !ok[b][d] || !ok[c][d]) continue;
                    rows[0] = p.halfspaces[a].normal;
                    rows[1] = p.halfspaces[b].normal;
                    rows[2] = p.halfspaces[c].normal;
                    rows[3] = p.halfspaces[d].normal;
                    auto ker = solve_linear(rows);
                    if (ker.size() != 1) continue;
                    LorentzVector x = ker[0];
                    FieldElement q = minkowski_inner(x, x);
                    int qs = q.sign();
                    if (qs > 0) continue;
                    int s0 = x[0].sign();
                    if (s0 == 0) continue;
                    if (s0 < 0) x = lv_scale(x, FieldElement(-1));
                    bool inside = true;
                    FacetMask mask = 0;
                    for (int f = 0; f < n; ++f) {
                        int s = minkowski_inner(x, p.halfspaces[f].normal).sign();
                        if (s > 0) { inside = false; break; }
                        if (s == 0) mask |= FacetMask(1) << f;
                    }
                    if (!inside) continue;
                    LorentzVector prim = lv_primitive(x);
                    if (prim[0].sign() < 0) prim = lv_scale(prim, FieldElement(-1));
                    std::string key = detail::lv_key(prim);
                    if (!out.count(key))
                        out[key] = Vertex{prim, qs < 0 ? VertexKind::Finite : VertexKind::Ideal, mask};
                }
            }
        }
    std::vector<Vertex> vs;
    for (auto& [k, v] : out) vs.push_back(v);
    // deterministic order: finite first then by facet mask, key
    std::sort(vs.begin(), vs.end(), [](const Vertex& x, const Vertex& y) {
        if (x.kind != y.kind) return x.kind == VertexKind::Finite;
        if (x.facets != y.facets) return x.facets < y.facets;
        return detail::lv_key(x.rep) < detail::lv_key(y.rep);
    });
    return vs;
}

struct Face {
    int id = -1;
    int dim = 0;
    FacetMask facets = 0;        // facets containing the face
    std::vector<int> verts;      // vertex ids (sorted)
    bool compact = true;
    std::string name;            // sorted facet labels joined by '&' ("P4" for the top face)
};

struct FaceLattice {
    std::vector<Vertex> vertex_list;
    std::vector<Face> faces;                       // all faces, dims 0..4, sorted (dim, name)
    std::map<std::string, int> by_name;
    std::vector<std::vector<int>> subs;            // faces of dim-1 contained in face
    std::vector<std::vector<int>> cofaces;         // faces of dim+1 containing face

    std::vector<int> fvector() const {
        std::vector<int> f(5, 0);
        for (auto& fc : faces) f[fc.dim]++;
        return f;
    }
    const Face& face(const std::string& nm) const { return faces[by_name.at(nm)]; }
};

inline std::string facet_set_name(const Polytope& p, FacetMask m) {
    std::vector<std::string> ls;
    for (size_t i = 0; i < p.facet_count(); ++i)
        if (m & (FacetMask(1) << i)) ls.push_back(p.halfspaces[i].label);
    std::sort(ls.begin(), ls.end());
    std::string s;
    for (auto& l : ls) { if (!s.empty()) s += '&'; s += l; }
    return s.empty() ? std::string("P4") : s;
}

/// Faces as intersection-closure of vertex facet-sets (plus the top face);
/// dimension via exact rank of the defining normals.
inline FaceLattice face_lattice(const Polytope& p, std::vector<Vertex> vs = {}) {
    if (vs.empty()) vs = vertices(p);
    std::set<FacetMask> sets;
    for (auto& v : vs) sets.insert(v.facets);
    // close under pairwise intersection
    std::vector<FacetMask> frontier(sets.begin(), sets.end());
    while (!frontier.empty()) {
        std::vector<FacetMask> next;
        for (FacetMask s : frontier)
            for (FacetMask t : std::vector<FacetMask>(sets.begin(), sets.end())) {
                FacetMask u = s & t;
                if (!sets.count(u)) { sets.insert(u); next.push_back(u); }
            }
        frontier = std::move(next);
    }
    sets.insert(0);
    FaceLattice L;
    L.vertex_list = vs;
    for (FacetMask s : sets) {
        Face f;
        f.facets = s;
        bool any = false;
        for (size_t i = 0; i < vs.size(); ++i)
            if ((s & vs[i].facets) == s) {
                f.verts.push_back(static_cast<int>(i));
                if (vs[i].kind == VertexKind::Ideal) f.compact = false;
                any = true;
            }
        if (!any) continue;
        if (s == 0) f.dim = 4;
        else {
            std::vector<LorentzVector> rows;
            for (size_t i = 0; i < p.facet_count(); ++i)
                if (s & (FacetMask(1) << i)) rows.push_back(p.halfspaces[i].normal);
            f.dim = static_cast<int>(solve_linear(rows).size()) - 1;
        }
        f.name = facet_set_name(p, s);
        L.faces.push_back(std::move(f));
    }
    std::sort(L.faces.begin(), L.faces.end(), [](const Face& a, const Face& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.name < b.name;
    });
    for (size_t i = 0; i < L.faces.size(); ++i) {
        L.faces[i].id = static_cast<int>(i);
        L.by_name[L.faces[i].name] = static_cast<int>(i);
    }
    L.subs.assign(L.faces.size(), {});
    L.cofaces.assign(L.faces.size(), {});
    for (auto& g : L.faces)
        for (auto& f : L.faces) {
            if (f.dim != g.dim - 1) continue;
            // f subface of g iff facets(g) subset facets(f) and verts(f) subset verts(g)
            if ((f.facets & g.facets) != g.facets) continue;
            if (!std::includes(g.verts.begin(), g.verts.end(), f.verts.begin(), f.verts.end()))
                continue;
            L.subs[g.id].push_back(f.id);
            L.cofaces[f.id].push_back(g.id);
        }
    return L;
}

struct RightAngledReport {
    bool right_angled = true;
    std::vector<std::tuple<int, int, RelationKind>> pairs;
};

inline RightAngledReport verify_right_angled(const Polytope& p) {
    RightAngledReport rep;
    const int n = static_cast<int>(p.facet_count());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto r = facet_relation(p, i, j);
            rep.pairs.emplace_back(i, j, r.kind);
            if (r.kind == RelationKind::Angled) rep.right_angled = false;
        }
    return rep;
}

/// The symmetry a(x0, x1..x4) = (x0, -x1..-x4).
inline LorentzVector apply_symmetry_a(const LorentzVector& v) {
    return {v[0], -v[1], -v[2], -v[3], -v[4]};
}

using FacetPerm = std::vector<int>;  // image index per facet index

/// All facet permutations extending to automorphisms of the face lattice.
inline std::vector<FacetPerm> combinatorial_automorphisms(const Polytope& p,
                                                          const FaceLattice& L) {
    const int n = static_cast<int>(p.facet_count());
    // adjacency (share a 2-face) and norm class invariants
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto& f : L.faces)
        if (f.dim == 2) {
            std::vector<int> ids;
            for (int i = 0; i < n; ++i)
                if (f.facets & (FacetMask(1) << i)) ids.push_back(i);
            if (ids.size() == 2) adj[ids[0]][ids[1]] = adj[ids[1]][ids[0]] = true;
        }
    std::vector<std::string> norm_key(n);
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i) {
        norm_key[i] = minkowski_inner(p.halfspaces[i].normal, p.halfspaces[i].normal).str();
        for (int j = 0; j < n; ++j) if (adj[i][j]) deg[i]++;
    }
    std::set<FacetMask> vsets;
    for (auto& v : L.vertex_list) vsets.insert(v.facets);

    std::vector<FacetPerm> result;
    FacetPerm img(n, -1);
    std::vector<bool> used(n, false);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            for (auto& v : L.vertex_list) {
                FacetMask m = 0;
                for (int f = 0; f < n; ++f)
                    if (v.facets & (FacetMask(1) << f)) m |= FacetMask(1) << img[f];
                if (!vsets.count(m)) return;
            }
            result.push_back(img);
            return;
        }
        for (int t = 0; t < n; ++t) {
            if (used[t] || norm_key[i] != norm_key[t] || deg[i] != deg[t]) continue;
            bool fit = true;
            for (int j = 0; j < i; ++j)
                if (adj[i][j] != adj[t][img[j]]) { fit = false; break; }
            if (!fit) continue;
            img[i] = t; used[t] = true;
            self(self, i + 1);
            img[i] = -1; used[t] = false;
        }
    };
    rec(rec, 0);
    std::sort(result.begin(), result.end());
    return result;
}

/// Exact isometry with M v_F = v_{perm(F)} for all facets, if one exists.
inline std::optional<Mat5> realize_automorphism(const Polytope& p, const FacetPerm& perm) {
    // base facets with independent normals
    std::vector<int> base;
    {
        std::vector<LorentzVector> rows;
        for (size_t i = 0; i < p.facet_count() && base.size() < 5; ++i) {
            rows.push_back(p.halfspaces[i].normal);
            if (solve_linear(rows).size() == 5 - rows.size())
                base.push_back(static_cast<int>(i));
            else
                rows.pop_back();
        }
    }
    if (base.size() != 5) return std::nullopt;
    // solve M A = B columnwise: columns of A are the base normals
    // invert A^T-style system exactly
    std::array<std::array<FieldElement, 10>, 5> aug{};
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            aug[i][j] = p.halfspaces[base[j]].normal[i];
            aug[i][5 + j] = (i == j) ? FieldElement(1) : FieldElement(0);
        }
    for (int c = 0; c < 5; ++c) {
        int piv = -1;
        for (int r = c; r < 5; ++r)
            if (!aug[r][c].is_zero()) { piv = r; break; }
        if (piv < 0) return std::nullopt;
        std::swap(aug[piv], aug[c]);
        FieldElement inv = aug[c][c].inverse();
        for (int j = 0; j < 10; ++j) aug[c][j] *= inv;
        for (int r = 0; r < 5; ++r) {
            if (r == c || aug[r][c].is_zero()) continue;
            FieldElement f = aug[r][c];
            for (int j = 0; j < 10; ++j) aug[r][j] -= f * aug[c][j];
        }
    }
    Mat5 ainv;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) ainv.m[i][j] = aug[i][5 + j];
    Mat5 bmat;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) bmat.m[i][j] = p.halfspaces[perm[base[j]]].normal[i];
    Mat5 M = bmat * ainv;
    for (size_t f = 0; f < p.facet_count(); ++f)
        if (!lv_equal(M.apply(p.halfspaces[f].normal), p.halfspaces[perm[f]].normal))
            return std::nullopt;
    if (!M.preserves_minkowski_form()) return std::nullopt;
    if (M.m[0][0].sign() <= 0) return std::nullopt;  // must preserve the upper sheet
    return M;
}

struct FacetClassification {
    std::string bottom;
    std::vector<std::string> vertical;
    std::vector<std::string> top;
};

/// Bottom facet of a face, verticals = facets of it adjacent to the bottom
/// (sharing a codim-2 face of the ambient within the given face), top = rest.
/// `within` names the face playing the role of the polytope (e.g. "P4" or "E1").
inline FacetClassification classify_facets(const FaceLattice& L, const std::string& within,
                                           const std::string& bottom) {
    const Face& W = L.face(within);
    const Face& B = L.face(bottom);
    FacetClassification out;
    out.bottom = bottom;
    // facets of W = faces of dim W.dim-1 whose facet set contains W's and verts inside
    for (auto& f : L.faces) {
        if (f.dim != W.dim - 1 || f.id == B.id) continue;
        if ((f.facets & W.facets) != W.facets) continue;
        if (!std::includes(W.verts.begin(), W.verts.end(), f.verts.begin(), f.verts.end()))
            continue;
        // adjacent to bottom iff exists common subface of dim W.dim-2
        bool adj = false;
        for (int s : L.subs[f.id])
            for (int t : L.subs[B.id])
                if (s == t) { adj = true; break; }
        if (adj) out.vertical.push_back(f.name);
        else out.top.push_back(f.name);
    }
    return out;
}

}  // namespace rac

#endif  // RAC_POLYTOPE_HPP
