// Model polytopes for gluing complexes: P4 itself and its distinguished
// faces P3 = E1 and P2 = E1&E2, each with interned face tables and the
// symmetry actions (from the 48 exact isometries of P4) restricted to them.

#ifndef RAC_MODEL_HPP
#define RAC_MODEL_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <string>
#include <vector>
#include "rac/polytope.hpp"

namespace rac {

struct Symmetry {
    std::string name;
    FacetPerm perm;     // on the 22 facet indices
    Mat5 mat;
    int eta = 1;        // sign of det: -1 for reflections
};

/// Shared exact data for P4: polytope, lattice, automorphisms with canonical
/// names ("identity", "a", "isoNN" otherwise, ordered by facet image tuple).
class P4Data {
public:
    Polytope poly;
    FaceLattice lattice;
    std::vector<Symmetry> syms;
    std::map<std::string, int> sym_by_name;

    static const P4Data& get() {
        static P4Data d;
        return d;
    }

    int facet_index(const std::string& l) const { return poly.index_of(l); }

    const Symmetry& sym(const std::string& name) const {
        return syms[sym_by_name.at(name)];
    }
    int sym_index(const std::string& name) const { return sym_by_name.at(name); }

    /// Composition index: syms[i] after syms[j].
    int compose(int i, int j) const { return comp_[i][j]; }
    int inverse_sym(int i) const { return inv_[i]; }

private:
    std::vector<std::vector<int>> comp_;
    std::vector<int> inv_;

    P4Data() {
        poly = standard_p4();
        lattice = face_lattice(poly);
        auto perms = combinatorial_automorphisms(poly, lattice);
        // canonical order: by image tuple (already sorted by combinatorial_automorphisms)
        int idx = 0;
        for (auto& pm : perms) {
            auto m = realize_automorphism(poly, pm);
            assert(m && "combinatorial automorphism not realizable");
            Symmetry s;
            s.perm = pm;
            s.mat = *m;
            s.eta = m->det().sign();
            bool is_id = true, is_a = true;
            for (size_t f = 0; f < poly.facet_count(); ++f) {
                if (pm[f] != static_cast<int>(f)) is_id = false;
                LorentzVector av = apply_symmetry_a(poly.halfspaces[f].normal);
                if (!lv_equal(av, poly.halfspaces[pm[f]].normal)) is_a = false;
            }
            if (is_id) s.name = "identity";
            else if (is_a) s.name = "a";
            else {
                char buf[16];
                std::snprintf(buf, sizeof buf, "iso%02d", idx);
                s.name = buf;
            }
            syms.push_back(std::move(s));
            ++idx;
        }
        for (size_t i = 0; i < syms.size(); ++i) sym_by_name[syms[i].name] = static_cast<int>(i);
        // composition table
        const int n = static_cast<int>(syms.size());
        comp_.assign(n, std::vector<int>(n, -1));
        inv_.assign(n, -1);
        auto find_perm = [&](const FacetPerm& p) {
            for (int k = 0; k < n; ++k)
                if (syms[k].perm == p) return k;
            return -1;
        };
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                FacetPerm q(poly.facet_count());
                for (size_t f = 0; f < poly.facet_count(); ++f)
                    q[f] = syms[i].perm[syms[j].perm[f]];
                comp_[i][j] = find_perm(q);
                assert(comp_[i][j] >= 0);
            }
        FacetPerm idp(poly.facet_count());
        for (size_t f = 0; f < poly.facet_count(); ++f) idp[f] = static_cast<int>(f);
        int ide = find_perm(idp);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (comp_[i][j] == ide) inv_[i] = j;
    }
};

/// A model polytope (P2, P3 or P4): the faces of P4 containing an anchor set,
/// re-indexed, with face-level symmetry action tables.
class Model {
public:
    std::string name;           // "P2" | "P3" | "P4"
    int dim;
    FacetMask anchor = 0;
    std::vector<int> faces;             // lattice face ids, sorted (dim, name)
    std::vector<int> face_dim;
    std::vector<std::string> face_name;
    std::map<std::string, int> by_name; // model-local index
    std::vector<std::vector<int>> subs, cofaces;   // model-local
    std::vector<int> facets;            // model-local ids of (dim-1)-faces
    std::vector<bool> compact;
    std::vector<int> applicable_syms;   // sym indices fixing the anchor pointwise
    // face action per applicable sym: act[sym][face] = image face (model-local), -1 n/a
    std::map<int, std::vector<int>> act;

    static const Model& P4() { static Model m{make("P4")}; return m; }
    static const Model& P3() { static Model m{make("P3")}; return m; }
    static const Model& P2() { static Model m{make("P2")}; return m; }
    static const Model& by_polytope_name(const std::string& nm) {
        if (nm == "P4") return P4();
        if (nm == "P3") return P3();
        if (nm == "P2") return P2();
        throw std::invalid_argument("unknown model polytope: " + nm);
    }

    int face_index(const std::string& nm) const {
        auto it = by_name.find(nm);
        if (it == by_name.end()) throw std::invalid_argument(name + ": unknown face " + nm);
        return it->second;
    }
    int apply(int symidx, int face) const { return act.at(symidx)[face]; }

private:
    static Model make(const std::string& which) {
        const P4Data& D = P4Data::get();
        Model m;
        m.name = which;
        FacetMask anchor = 0;
        if (which == "P4") { m.dim = 4; }
        else if (which == "P3") {
            m.dim = 3;
            anchor = FacetMask(1) << D.facet_index("E1");
        } else {
            m.dim = 2;
            anchor = (FacetMask(1) << D.facet_index("E1")) | (FacetMask(1) << D.facet_index("E2"));
        }
        m.anchor = anchor;
        const auto& L = D.lattice;
        std::vector<int> sel;
        for (auto& f : L.faces)
            if ((f.facets & anchor) == anchor && f.dim <= m.dim) sel.push_back(f.id);
        // map lattice id -> local
        std::map<int, int> loc;
        for (int id : sel) {
            loc[id] = static_cast<int>(m.faces.size());
            m.faces.push_back(id);
            m.face_dim.push_back(L.faces[id].dim);
            m.face_name.push_back(L.faces[id].name);
            m.compact.push_back(L.faces[id].compact);
            m.by_name[L.faces[id].name] = loc[id];
        }
        m.subs.assign(sel.size(), {});
        m.cofaces.assign(sel.size(), {});
        for (int id : sel) {
            for (int s : L.subs[id])
                if (loc.count(s)) m.subs[loc[id]].push_back(loc[s]);
            for (int c : L.cofaces[id])
                if (loc.count(c) && L.faces[c].dim <= m.dim) m.cofaces[loc[id]].push_back(loc[c]);
        }
        for (size_t i = 0; i < m.faces.size(); ++i)
            if (m.face_dim[i] == m.dim - 1) m.facets.push_back(static_cast<int>(i));
        // symmetries fixing the anchor facets pointwise
        for (size_t k = 0; k < D.syms.size(); ++k) {
            bool fix = true;
            for (size_t f = 0; f < D.poly.facet_count(); ++f)
                if ((anchor & (FacetMask(1) << f)) && D.syms[k].perm[f] != static_cast<int>(f))
                    fix = false;
            if (!fix) continue;
            std::vector<int> a(m.faces.size(), -1);
            bool total = true;
            for (size_t i = 0; i < m.faces.size(); ++i) {
                FacetMask src = L.faces[m.faces[i]].facets;
                FacetMask img = 0;
                for (size_t f = 0; f < D.poly.facet_count(); ++f)
                    if (src & (FacetMask(1) << f)) img |= FacetMask(1) << D.syms[k].perm[f];
                std::string nm = facet_set_name(D.poly, img);
                auto it = m.by_name.find(nm);
                if (it == m.by_name.end()) { total = false; break; }
                a[i] = it->second;
            }
            if (!total) continue;
            m.applicable_syms.push_back(static_cast<int>(k));
            m.act[static_cast<int>(k)] = std::move(a);
        }
        return m;
    }
};

}  // namespace rac

#endif  // RAC_MODEL_HPP
