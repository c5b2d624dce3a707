// Gluing complexes: finitely many copies of a model polytope with facets
// identified in pairs via named isometries. Validation of the right-angled
// corners condition, facet components, embeddedness, orientability, Euler
// characteristics and doubling.

#ifndef RAC_COMPLEX_HPP
#define RAC_COMPLEX_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <memory>
#include <optional>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>
#include "rac/model.hpp"

namespace rac {

struct FaceRef {
    int cell = -1;
    int face = -1;  // model-local face id
    bool operator==(const FaceRef& o) const { return cell == o.cell && face == o.face; }
    bool operator<(const FaceRef& o) const {
        return cell != o.cell ? cell < o.cell : face < o.face;
    }
};

struct FacetPairing {
    FaceRef a, b;
    int sym;  // P4Data symmetry index mapping a's face onto b's
};

class DisjointSets {
public:
    explicit DisjointSets(size_t n) : p_(n) { std::iota(p_.begin(), p_.end(), 0); }
    int find(int x) const {
        while (p_[x] != x) { p_[x] = p_[p_[x]]; x = p_[x]; }
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a != b) p_[std::max(a, b)] = std::min(a, b);
    }
private:
    mutable std::vector<int> p_;
};

struct Stratum {
    bool cycle = false;
    std::vector<FaceRef> faces;        // the codim-2 face copies along the walk
    std::array<FaceRef, 2> end_flanks; // free facets at the two ends (chains only)
    int len() const { return static_cast<int>(faces.size()); }
};

class GluingComplex {
public:
    const Model* model = nullptr;
    int n_cells = 0;
    std::vector<FacetPairing> pairings;

    GluingComplex() = default;
    GluingComplex(const Model& m, int n) : model(&m), n_cells(n) {
        glue_.assign(size_t(n) * m.faces.size(), -1);
    }
    GluingComplex(const GluingComplex& o)
        : model(o.model), n_cells(o.n_cells), pairings(o.pairings), glue_(o.glue_) {}
    GluingComplex& operator=(const GluingComplex& o) {
        model = o.model; n_cells = o.n_cells; pairings = o.pairings; glue_ = o.glue_;
        orbits_.reset(); strata_.reset(); dirty_ = true;
        return *this;
    }
    GluingComplex(GluingComplex&&) = default;
    GluingComplex& operator=(GluingComplex&&) = default;

    int key(const FaceRef& r) const {
        return r.cell * static_cast<int>(model->faces.size()) + r.face;
    }
    FaceRef unkey(int k) const {
        int nf = static_cast<int>(model->faces.size());
        return {k / nf, k % nf};
    }

    bool is_glued(const FaceRef& r) const { return glue_[key(r)] >= 0; }
    const FacetPairing& pairing_at(const FaceRef& r) const { return pairings[glue_[key(r)]]; }

    /// Glue a's facet to b's facet via the named symmetry (must map the faces).
    /// Exact duplicates are ignored; conflicting pairings are an error.
    void pair(FaceRef a, FaceRef b, int sym) {
        const P4Data& D = P4Data::get();
        if (model->face_dim[a.face] != model->dim - 1 || model->face_dim[b.face] != model->dim - 1)
            throw std::invalid_argument("pairing of non-facet faces");
        if (a.cell < 0 || a.cell >= n_cells || b.cell < 0 || b.cell >= n_cells)
            throw std::invalid_argument("pairing cell out of range");
        if (model->apply(sym, a.face) != b.face)
            throw std::invalid_argument("attaching map does not send facet A to facet B");
        if (a == b) throw std::invalid_argument("cannot glue a facet to itself");
        if (is_glued(a) || is_glued(b)) {
            // tolerate exact duplicates (the same identification expressed twice)
            if (is_glued(a)) {
                const auto& ex = pairing_at(a);
                if ((ex.a == a && ex.b == b && ex.sym == sym) ||
                    (ex.a == b && ex.b == a && ex.sym == D.inverse_sym(sym)))
                    return;
            }
            throw std::invalid_argument("facet already glued (conflicting pairing)");
        }
        int id = static_cast<int>(pairings.size());
        pairings.push_back({a, b, sym});
        glue_[key(a)] = id;
        glue_[key(b)] = id;
        dirty_ = true;
    }

    /// Neighbor through a glued facet: returns (cell', image of subface x under the map).
    std::pair<FaceRef, int> across(const FaceRef& facet, int subface) const {
        const P4Data& D = P4Data::get();
        const auto& pr = pairings[glue_[key(facet)]];
        if (pr.a == facet)
            return {{pr.b.cell, model->apply(pr.sym, subface)}, pr.b.face};
        return {{pr.a.cell, model->apply(D.inverse_sym(pr.sym), subface)}, pr.a.face};
    }

    std::vector<FaceRef> free_facets() const {
        std::vector<FaceRef> out;
        for (int c = 0; c < n_cells; ++c)
            for (int f : model->facets)
                if (!is_glued({c, f})) out.push_back({c, f});
        return out;
    }

    /// Union-find over all (cell, face) copies; identifications transported
    /// through the pairings on full subface closures.
    const DisjointSets& face_orbits() const {
        if (!dirty_ && orbits_) return *orbits_;
        orbits_ = std::make_unique<DisjointSets>(size_t(n_cells) * model->faces.size());
        for (const auto& pr : pairings) {
            // walk subface closure of pr.a.face
            std::vector<int> stack{pr.a.face};
            std::vector<bool> seen(model->faces.size(), false);
            seen[pr.a.face] = true;
            while (!stack.empty()) {
                int x = stack.back(); stack.pop_back();
                orbits_->unite(key({pr.a.cell, x}), key({pr.b.cell, model->apply(pr.sym, x)}));
                for (int y : model->subs[x])
                    if (!seen[y]) { seen[y] = true; stack.push_back(y); }
            }
        }
        dirty_ = false;
        strata_.reset();
        return *orbits_;
    }

    const std::vector<Stratum>& codim2_strata() const {
        face_orbits();
        if (strata_) return *strata_;
        strata_ = std::make_unique<std::vector<Stratum>>();
        const int d2 = model->dim - 2;
        // flanking facets of each codim-2 model face
        std::vector<std::array<int, 2>> flank(model->faces.size(), {-1, -1});
        for (size_t f = 0; f < model->faces.size(); ++f) {
            if (model->face_dim[f] != d2) continue;
            int k = 0;
            for (int cf : model->cofaces[f])
                if (model->face_dim[cf] == model->dim - 1) {
                    if (k < 2) flank[f][k] = cf;
                    ++k;
                }
            if (k != 2) throw std::logic_error("codim-2 face without exactly two facet cofaces");
        }
        std::set<int> seen;
        for (int c = 0; c < n_cells; ++c)
            for (size_t f = 0; f < model->faces.size(); ++f) {
                if (model->face_dim[f] != d2) continue;
                FaceRef start{c, static_cast<int>(f)};
                if (seen.count(key(start))) continue;
                Stratum s;
                s.faces.push_back(start);
                seen.insert(key(start));
                int nends = 0;
                bool cyc = false;
                for (int dir = 0; dir < 2 && !cyc; ++dir) {
                    FaceRef cur = start;
                    int wall = flank[f][dir ? 0 : 1];
                    while (true) {
                        FaceRef wref{cur.cell, wall};
                        if (!is_glued(wref)) {
                            s.end_flanks[nends++] = wref;
                            break;
                        }
                        auto [nxt, wfac] = across(wref, cur.face);
                        int g1 = flank[nxt.face][0], g2 = flank[nxt.face][1];
                        int nwall = (g1 == wfac) ? g2 : g1;
                        if (nxt == start) { cyc = true; break; }
                        seen.insert(key(nxt));
                        if (dir == 0) s.faces.push_back(nxt);
                        else s.faces.insert(s.faces.begin(), nxt);
                        cur = nxt; wall = nwall;
                    }
                }
                s.cycle = cyc;
                strata_->push_back(std::move(s));
            }
        return *strata_;
    }

    /// Strata violating the right-angled corners condition
    /// (interior cycles of length != 4 or boundary chains longer than 2).
    std::vector<const Stratum*> corner_failures() const {
        std::vector<const Stratum*> bad;
        for (const auto& s : codim2_strata()) {
            if (s.cycle ? s.len() != 4 : s.len() > 2) bad.push_back(&s);
        }
        return bad;
    }
    bool validate_corners() const { return corner_failures().empty(); }

    /// Connected components of the free facets, merged across boundary chains
    /// of length 2 (angle pi: the two outer flanks continue one facet).
    std::map<int, std::vector<FaceRef>> facet_components() const {
        DisjointSets dsu(size_t(n_cells) * model->faces.size());
        for (const auto& s : codim2_strata()) {
            if (!s.cycle && s.len() == 2)
                dsu.unite(key(s.end_flanks[0]), key(s.end_flanks[1]));
        }
        std::map<int, std::vector<FaceRef>> comp;
        for (auto& fr : free_facets()) comp[dsu.find(key(fr))].push_back(fr);
        return comp;
    }

    /// Corners (length-1 chains) whose two flanks lie in the same facet component.
    std::vector<const Stratum*> embedded_facet_failures() const {
        DisjointSets dsu(size_t(n_cells) * model->faces.size());
        for (const auto& s : codim2_strata())
            if (!s.cycle && s.len() == 2)
                dsu.unite(key(s.end_flanks[0]), key(s.end_flanks[1]));
        std::vector<const Stratum*> bad;
        for (const auto& s : codim2_strata())
            if (!s.cycle && s.len() == 1 &&
                dsu.find(key(s.end_flanks[0])) == dsu.find(key(s.end_flanks[1])))
                bad.push_back(&s);
        return bad;
    }
    bool embedded_facets() const { return embedded_facet_failures().empty(); }

    /// Orientation assignment (+-1 per cell) if one exists: a gluing via an
    /// orientation-preserving isometry (eta = +1) must reverse cell signs.
    std::optional<std::vector<int>> orientation() const {
        const P4Data& D = P4Data::get();
        std::vector<int> col(n_cells, 0);
        for (int c0 = 0; c0 < n_cells; ++c0) {
            if (col[c0]) continue;
            col[c0] = 1;
            std::vector<int> stack{c0};
            while (!stack.empty()) {
                int c = stack.back(); stack.pop_back();
                for (int f : model->facets) {
                    FaceRef r{c, f};
                    if (!is_glued(r)) continue;
                    const auto& pr = pairing_at(r);
                    int other = pr.a.cell == c ? pr.b.cell : pr.a.cell;
                    int want = -D.syms[pr.sym].eta * col[c];
                    if (!col[other]) { col[other] = want; stack.push_back(other); }
                    else if (col[other] != want) return std::nullopt;
                }
            }
        }
        return col;
    }
    bool orientable() const { return orientation().has_value(); }

    bool connected() const {
        if (n_cells == 0) return true;
        std::vector<bool> vis(n_cells, false);
        vis[0] = true;
        std::vector<int> stack{0};
        int cnt = 1;
        while (!stack.empty()) {
            int c = stack.back(); stack.pop_back();
            for (int f : model->facets) {
                FaceRef r{c, f};
                if (!is_glued(r)) continue;
                const auto& pr = pairing_at(r);
                int other = pr.a.cell == c ? pr.b.cell : pr.a.cell;
                if (!vis[other]) { vis[other] = true; ++cnt; stack.push_back(other); }
            }
        }
        return cnt == n_cells;
    }

    enum class IdealPolicy { ExcludeIdeal, IncludeAll };

    /// Alternating sum of identified-face-orbit counts (+ cells on top).
    long euler_characteristic(IdealPolicy policy = IdealPolicy::ExcludeIdeal) const {
        const auto& dsu = face_orbits();
        std::map<int, FaceRef> reps;
        for (int c = 0; c < n_cells; ++c)
            for (size_t f = 0; f < model->faces.size(); ++f) {
                if (model->face_dim[f] >= model->dim) continue;
                int r = dsu.find(key({c, static_cast<int>(f)}));
                if (!reps.count(r)) reps[r] = {c, static_cast<int>(f)};
            }
        long chi = (model->dim % 2 == 0) ? n_cells : -n_cells;
        for (auto& [r, fr] : reps) {
            int d = model->face_dim[fr.face];
            if (policy == IdealPolicy::ExcludeIdeal && d == 0 && !model->compact[fr.face])
                continue;
            chi += (d % 2 == 0) ? 1 : -1;
        }
        return chi;
    }

    /// Connected components of the boundary (free facets joined across every
    /// boundary chain, corners included).
    std::map<int, std::vector<FaceRef>> boundary_components() const {
        DisjointSets dsu(size_t(n_cells) * model->faces.size());
        for (const auto& s : codim2_strata())
            if (!s.cycle)
                dsu.unite(key(s.end_flanks[0]), key(s.end_flanks[1]));
        std::map<int, std::vector<FaceRef>> comp;
        for (auto& fr : free_facets()) comp[dsu.find(key(fr))].push_back(fr);
        return comp;
    }

private:
    std::vector<int> glue_;
    mutable std::unique_ptr<DisjointSets> orbits_;
    mutable std::unique_ptr<std::vector<Stratum>> strata_;
    mutable bool dirty_ = true;
};

/// Double of c along one facet component: two copies of every cell, the
/// component's free facets glued across the copies by the identity.
inline GluingComplex double_complex(const GluingComplex& c,
                                    const std::vector<FaceRef>& component) {
    const P4Data& D = P4Data::get();
    int idsym = D.sym_index("identity");
    GluingComplex d(*c.model, 2 * c.n_cells);
    for (const auto& pr : c.pairings) {
        d.pair(pr.a, pr.b, pr.sym);
        d.pair({pr.a.cell + c.n_cells, pr.a.face}, {pr.b.cell + c.n_cells, pr.b.face}, pr.sym);
    }
    for (const auto& fr : component)
        d.pair(fr, {fr.cell + c.n_cells, fr.face}, idsym);
    return d;
}

struct DoublingStep {
    int cells;
    long chi_exclude, chi_include;
    size_t free_facets;
};

/// Materializes k successive doublings, doubling along (all copies of) the
/// first remaining facet component each time. Guarded by a cell cap.
inline std::vector<DoublingStep> doubling_schedule(const GluingComplex& c0, int k,
                                                   int max_cells = 1000000) {
    std::vector<DoublingStep> steps;
    GluingComplex c = c0;
    steps.push_back({c.n_cells, c.euler_characteristic(GluingComplex::IdealPolicy::ExcludeIdeal),
                     c.euler_characteristic(GluingComplex::IdealPolicy::IncludeAll),
                     c.free_facets().size()});
    for (int i = 0; i < k; ++i) {
        auto comps = c.facet_components();
        if (comps.empty()) break;
        if (c.n_cells * 2 > max_cells) break;
        c = double_complex(c, comps.begin()->second);
        steps.push_back({c.n_cells, c.euler_characteristic(GluingComplex::IdealPolicy::ExcludeIdeal),
                         c.euler_characteristic(GluingComplex::IdealPolicy::IncludeAll),
                         c.free_facets().size()});
    }
    return steps;
}

}  // namespace rac

#endif  // RAC_COMPLEX_HPP
