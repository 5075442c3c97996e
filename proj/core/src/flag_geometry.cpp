#include "flagpos/flag_geometry.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "flagpos/necklace.hpp"

namespace flagpos {

namespace {

QVec flag_point(int n, std::span<const Mask> flag) {
    QVec p(static_cast<std::size_t>(n), Rat(0));
    for (Mask b : flag)
        for (int e : mask_elements(b)) p[static_cast<std::size_t>(e) - 1] += 1;
    return p;
}

}  // namespace

FlagPolytope flag_polytope(const FlagMatroid& fm) {
    FlagPolytope fp;
    fp.fm = fm;
    fp.flags = flags_of(fm.constituents);
    if (fp.flags.empty()) throw invalid_input("flag matroid with no flags");
    const int n = fm.n();
    std::map<QVec, int> seen;
    for (const auto& flag : fp.flags) {
        QVec p = flag_point(n, flag);
        if (!seen.emplace(p, 1).second)
            throw internal_error("two flags share one Minkowski vertex; weight assignment would be ambiguous");
        fp.vertices.push_back(std::move(p));
    }
    return fp;
}

std::vector<QVec> hypersimplex_vertices(int d, int n) {
    if (d <= 0 || d >= n) throw invalid_input("hypersimplex needs 0 < d < n");
    std::vector<QVec> out;
    for (Mask s : combinations(n, d)) out.push_back(flag_point(n, std::vector<Mask>{s}));
    return out;
}

std::vector<QVec> permutohedron_vertices(int n) {
    FlagMatroid fm;
    for (int d = 1; d <= n; ++d) fm.constituents.push_back(uniform_matroid(d, n));
    return flag_polytope(fm).vertices;
}

Polytope hypersimplex(int d, int n) { return hull_faces(hypersimplex_vertices(d, n)); }

Polytope permutohedron(int n) { return hull_faces(permutohedron_vertices(n)); }

MuSubdivision subdivision_from_mu(const FlagTropVec& mu) {
    MuSubdivision ms;
    FlagMatroid fm;
    for (const TropVec& w : mu.mus) {
        Matroid m(w.n(), w.support());
        if (!Matroid::is_matroid_bases(m.n(), m.bases()))
            throw invalid_input("subdivision_from_mu: a support is not a matroid");
        fm.constituents.push_back(std::move(m));
    }
    if (fm.constituents.size() > 1 && !is_flag_matroid(fm.constituents))
        throw invalid_input("subdivision_from_mu: support is not a flag matroid");
    ms.fp = flag_polytope(fm);

    std::vector<Rat> weights;
    weights.reserve(ms.fp.flags.size());
    for (const auto& flag : ms.fp.flags) {
        Rat w(0);
        for (std::size_t i = 0; i < flag.size(); ++i) {
            const TropVal& t = mu.mus[i].at(flag[i]);
            if (!t.finite) throw internal_error("flag of the support hit an infinite coordinate");
            w += t.v;
        }
        weights.push_back(std::move(w));
    }
    ms.sub = regular_subdivision(ms.fp.vertices, weights);
    return ms;
}

std::vector<Matroid> face_flag_matroid(const FlagPolytope& fp, std::span<const int> vertex_ids) {
    if (vertex_ids.empty()) throw invalid_input("face_flag_matroid: empty face");
    const std::size_t k = fp.fm.constituents.size();
    const int n = fp.fm.n();
    std::vector<std::set<Mask>> per(k);
    for (int v : vertex_ids) {
        const auto& flag = fp.flags.at(static_cast<std::size_t>(v));
        for (std::size_t i = 0; i < k; ++i) per[i].insert(flag[i]);
    }
    std::vector<Matroid> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.emplace_back(n, std::vector<Mask>(per[i].begin(), per[i].end()));
    return out;
}

bool flag_positroid_certified(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("flag_positroid_certified: empty sequence");
    for (std::size_t i = 1; i < seq.size(); ++i)
        if (seq[i].rank() != seq[i - 1].rank() + 1)
            throw invalid_input("flag_positroid_certified: ranks must be consecutive");

    bool constituents_ok = true;
    for (const Matroid& m : seq)
        if (!Matroid::is_matroid_bases(m.n(), m.bases())) constituents_ok = false;

    bool via_necklace = constituents_ok && is_flag_positroid_consecutive(seq);
    bool via_relations = constituents_ok && pom_check(seq);
    if (via_necklace != via_relations)
        throw internal_error("flag positroid certifiers disagree on a sequence");
    return via_necklace;
}

bool all_cells_flag_positroid(const MuSubdivision& ms) {
    for (const auto& cell : ms.sub.cells) {
        if (!flag_positroid_certified(face_flag_matroid(ms.fp, cell))) return false;
    }
    return true;
}

TwoFaceReport twod_faces_flag_positroid(const MuSubdivision& ms) {
    for (const auto& face : ms.sub.complex) {
        if (face.dim > 2) continue;
        if (!flag_positroid_certified(face_flag_matroid(ms.fp, face.pts))) return {false, face.pts};
    }
    return {true, {}};
}

bool flag_matroid_polytope_criterion(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("empty sequence");
    const int n = seq.front().n();
    for (const Matroid& m : seq)
        if (m.n() != n || m.ground() != full_mask(n)) throw invalid_input("criterion needs matroids on [n]");

    // candidate Minkowski points: sums over arbitrary basis tuples
    std::vector<QVec> cand{QVec(static_cast<std::size_t>(n), Rat(0))};
    for (const Matroid& m : seq) {
        std::vector<QVec> next;
        std::set<QVec> dedup;
        for (const QVec& p : cand)
            for (Mask b : m.bases()) {
                QVec q = p;
                for (int e : mask_elements(b)) q[static_cast<std::size_t>(e) - 1] += 1;
                if (dedup.insert(q).second) next.push_back(std::move(q));
            }
        cand = std::move(next);
    }

    // Nested tuples realize the largest possible norm: with ranks
    // r_1 < ... < r_k, a chain vertex has r_1 coordinates equal to k,
    // r_2 - r_1 equal to k-1, and so on.  Every vertex of the sum must
    // attain exactly this norm.
    const int k = static_cast<int>(seq.size());
    Rat rstar(0);
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        const long level = k - i;
        rstar += Rat(level * level) * Rat(seq[static_cast<std::size_t>(i)].rank() - prev);
        prev = seq[static_cast<std::size_t>(i)].rank();
    }

    std::vector<Rat> norms;
    norms.reserve(cand.size());
    for (const QVec& p : cand) {
        Rat s(0);
        for (const Rat& x : p) s += x * x;
        if (s > rstar) throw internal_error("Minkowski candidate above the chain norm");
        norms.push_back(s);
    }
    // points strictly below the chain norm must be non-extreme; points on
    // the sphere are automatically extreme
    for (std::size_t i = 0; i < cand.size(); ++i) {
        if (norms[i] == rstar) continue;
        std::vector<QVec> others;
        others.reserve(cand.size() - 1);
        for (std::size_t j = 0; j < cand.size(); ++j)
            if (j != i) others.push_back(cand[j]);
        if (!in_convex_hull(cand[i], others)) return false;
    }
    return true;
}

bool matroid_edge_criterion(int n, const std::vector<Mask>& bases) {
    std::vector<QVec> pts;
    pts.reserve(bases.size());
    std::set<Mask> dedup(bases.begin(), bases.end());
    for (Mask b : dedup) pts.push_back(flag_point(n, std::vector<Mask>{b}));
    if (pts.size() == 1) return true;
    Polytope poly = hull_faces(pts);
    for (const auto& edge : poly.lattice.by_dim[1]) {
        const QVec& a = poly.points[edge.front()];
        const QVec& b = poly.points[edge.back()];
        int plus = 0, minus = 0, other = 0;
        for (int c = 0; c < n; ++c) {
            Rat d = a[static_cast<std::size_t>(c)] - b[static_cast<std::size_t>(c)];
            if (d == 1)
                ++plus;
            else if (d == -1)
                ++minus;
            else if (d != 0)
                ++other;
        }
        if (!(other == 0 && plus == 1 && minus == 1)) return false;
    }
    return true;
}

}  // namespace flagpos
