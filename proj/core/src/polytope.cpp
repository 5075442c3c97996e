#include "flagpos/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "flagpos/errors.hpp"

namespace flagpos {

namespace {

// ---------------------------------------------------------------------------
// small exact linear algebra helpers
// ---------------------------------------------------------------------------

int affine_rank(const std::vector<QVec>& pts) {
    if (pts.empty()) return -1;
    const std::size_t amb = pts[0].size();
    std::vector<QVec> rref;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec v(amb);
        for (std::size_t c = 0; c < amb; ++c) v[c] = pts[i][c] - pts[0][c];
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]] / rref[r][pivots[r]];
            for (std::size_t c = 0; c < amb; ++c) v[c] -= f * rref[r][c];
        }
        std::size_t pc = amb;
        for (std::size_t c = 0; c < amb; ++c)
            if (v[c] != 0) {
                pc = c;
                break;
            }
        if (pc < amb) {
            rref.push_back(std::move(v));
            pivots.push_back(pc);
        }
    }
    return static_cast<int>(rref.size());
}

// ---------------------------------------------------------------------------
// facet search kernel, templated over the integer type
// ---------------------------------------------------------------------------

template <class I>
struct IntOps;

template <>
struct IntOps<long long> {
    using Wide = __int128;
    static long long to_ll(const mpz_class& z) { return static_cast<long long>(z.get_si()); }
    static Wide dot(const std::vector<long long>& a, const std::vector<long long>& b) {
        Wide s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<Wide>(a[i]) * b[i];
        return s;
    }
};

template <>
struct IntOps<mpz_class> {
    using Wide = mpz_class;
    static Wide dot(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
        return s;
    }
};

template <class I>
I det_rec(const std::vector<std::vector<I>>& rows, const std::vector<int>& use_rows, unsigned col_mask, int r) {
    // cofactor expansion along the first remaining row
    const int row = use_rows[r];
    if (r + 1 == static_cast<int>(use_rows.size())) {
        for (int c = 0; c < 32; ++c)
            if (col_mask & (1u << c)) return rows[row][c];
    }
    I acc = 0;
    int sign = 1;
    for (int c = 0; c < 32; ++c) {
        if (!(col_mask & (1u << c))) continue;
        const I& entry = rows[row][c];
        if (entry != 0) {
            I sub = det_rec(rows, use_rows, col_mask & ~(1u << c), r + 1);
            if (sign > 0)
                acc += entry * sub;
            else
                acc -= entry * sub;
        }
        sign = -sign;
    }
    return acc;
}

template <class I>
Rat rat_of(const I& x) {
    if constexpr (std::is_same_v<I, long long>)
        return Rat(static_cast<long>(x));
    else
        return Rat(x);
}

template <class I>
std::vector<FacetData> facets_impl(const std::vector<std::vector<I>>& pts, int d) {
    using Wide = typename IntOps<I>::Wide;
    const int n_pts = static_cast<int>(pts.size());
    std::vector<FacetData> out;
    std::set<std::vector<int>> seen;

    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < n_pts; ++i) {
            if (pts[i][0] < pts[lo][0]) lo = i;
            if (pts[i][0] > pts[hi][0]) hi = i;
        }
        FacetData fl;
        fl.onset = {lo};
        fl.normal = {Rat(-1)};
        fl.offset = -rat_of(pts[lo][0]);
        FacetData fh;
        fh.onset = {hi};
        fh.normal = {Rat(1)};
        fh.offset = rat_of(pts[hi][0]);
        out.push_back(std::move(fl));
        out.push_back(std::move(fh));
        return out;
    }

    std::vector<int> idx(d);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<I>> diffs(d - 1, std::vector<I>(d));
    std::vector<int> all_rows(d - 1);
    std::iota(all_rows.begin(), all_rows.end(), 0);
    std::vector<I> normal(d);

    while (true) {
        for (int r = 0; r < d - 1; ++r)
            for (int c = 0; c < d; ++c) diffs[r][c] = pts[idx[r + 1]][c] - pts[idx[0]][c];
        bool nonzero = false;
        const unsigned full_cols = (1u << d) - 1;
        int sign = 1;
        for (int c = 0; c < d; ++c) {
            normal[c] = det_rec(diffs, all_rows, full_cols & ~(1u << c), 0);
            if (sign < 0) normal[c] = -normal[c];
            sign = -sign;
            nonzero = nonzero || normal[c] != 0;
        }
        if (nonzero) {
            Wide c0 = IntOps<I>::dot(normal, pts[idx[0]]);
            bool above = false, below = false;
            for (int i = 0; i < n_pts && !(above && below); ++i) {
                Wide v = IntOps<I>::dot(normal, pts[i]);
                if (v > c0)
                    above = true;
                else if (v < c0)
                    below = true;
            }
            if (!(above && below)) {
                if (above) {  // flip so the inside is <= offset
                    for (I& x : normal) x = -x;
                    c0 = -c0;
                }
                std::vector<int> onset;
                for (int i = 0; i < n_pts; ++i)
                    if (IntOps<I>::dot(normal, pts[i]) == c0) onset.push_back(i);
                if (seen.insert(onset).second) {
                    FacetData f;
                    f.normal.reserve(d);
                    for (const I& x : normal) f.normal.push_back(rat_of(x));
                    f.offset = 0;
                    for (int c = 0; c < d; ++c) f.offset += f.normal[c] * rat_of(pts[onset.front()][c]);
                    f.onset = std::move(onset);
                    out.push_back(std::move(f));
                }
            }
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && idx[i] == n_pts - d + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

bool fits_int64(const std::vector<std::vector<mpz_class>>& coords, int d) {
    long double amax = 1;
    for (const auto& row : coords)
        for (const auto& z : row) {
            long double a = std::abs(z.get_d());
            if (a > amax) amax = a;
        }
    long double fact = 1;
    for (int k = 2; k <= d - 1; ++k) fact *= k;
    long double minor_bound = fact;
    for (int k = 0; k < d - 1; ++k) minor_bound *= amax;
    if (minor_bound > 1.0e18L) return false;                      // minors must fit int64
    if (minor_bound * amax * d > 1.0e37L) return false;           // dots must fit __int128
    return true;
}

}  // namespace

ReducedPoints affine_reduce(const std::vector<QVec>& pts) {
    if (pts.empty()) throw invalid_input("affine_reduce: no points");
    const std::size_t amb = pts[0].size();
    for (const QVec& p : pts)
        if (p.size() != amb) throw invalid_input("affine_reduce: mixed ambient dimensions");

    // row-reduce difference vectors, remembering pivot columns
    std::vector<QVec> rref;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec v(amb);
        for (std::size_t c = 0; c < amb; ++c) v[c] = pts[i][c] - pts[0][c];
        for (std::size_t r = 0; r < rref.size(); ++r) {
            if (v[pivots[r]] == 0) continue;
            Rat f = v[pivots[r]] / rref[r][pivots[r]];
            for (std::size_t c = 0; c < amb; ++c) v[c] -= f * rref[r][c];
        }
        std::size_t pc = amb;
        for (std::size_t c = 0; c < amb; ++c)
            if (v[c] != 0) {
                pc = c;
                break;
            }
        if (pc < amb) {
            rref.push_back(std::move(v));
            pivots.push_back(pc);
        }
    }
    const int d = static_cast<int>(rref.size());
    if (d > kMaxIntrinsicDim)
        throw invalid_input("point configuration exceeds the intrinsic dimension cap of " +
                            std::to_string(kMaxIntrinsicDim));

    // Projection onto the pivot columns is an affine isomorphism of the hull,
    // so the pivot-column differences serve directly as coordinates.
    std::sort(pivots.begin(), pivots.end());
    std::vector<QVec> raw(pts.size(), QVec(d));
    mpz_class den(1);
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int c = 0; c < d; ++c) {
            raw[i][c] = pts[i][pivots[c]] - pts[0][pivots[c]];
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), raw[i][c].get_den().get_mpz_t());
        }
    ReducedPoints rp;
    rp.dim = d;
    rp.coords.assign(pts.size(), std::vector<mpz_class>(d));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int c = 0; c < d; ++c) {
            Rat scaled = raw[i][c] * Rat(den);
            rp.coords[i][c] = scaled.get_num();  // denominator is 1 after scaling
        }
    return rp;
}

std::vector<FacetData> facet_enumeration(const ReducedPoints& rp) {
    if (rp.dim < 1) return {};
    if (static_cast<int>(rp.coords.size()) > kMaxHullPoints)
        throw invalid_input("facet_enumeration: too many points");
    if (fits_int64(rp.coords, rp.dim)) {
        std::vector<std::vector<long long>> p(rp.coords.size(), std::vector<long long>(rp.dim));
        for (std::size_t i = 0; i < rp.coords.size(); ++i)
            for (int c = 0; c < rp.dim; ++c) p[i][c] = rp.coords[i][c].get_si();
        return facets_impl<long long>(p, rp.dim);
    }
    return facets_impl<mpz_class>(rp.coords, rp.dim);
}

bool in_convex_hull(const QVec& p, const std::vector<QVec>& pts) {
    if (pts.empty()) return false;
    const std::size_t amb = p.size();
    for (const QVec& q : pts)
        if (q.size() != amb) throw invalid_input("in_convex_hull: mixed ambient dimensions");
    const std::size_t rows = amb + 1, cols = pts.size();

    // phase-1 simplex with artificial variables and Bland's rule
    std::vector<QVec> t(rows, QVec(cols + rows + 1));
    for (std::size_t r = 0; r < amb; ++r) {
        for (std::size_t j = 0; j < cols; ++j) t[r][j] = pts[j][r];
        t[r][cols + rows] = p[r];
    }
    for (std::size_t j = 0; j < cols; ++j) t[amb][j] = 1;
    t[amb][cols + rows] = 1;
    for (std::size_t r = 0; r < rows; ++r) {
        if (t[r][cols + rows] < 0)
            for (auto& x : t[r]) x = -x;
        t[r][cols + r] = 1;
    }
    std::vector<std::size_t> basis(rows);
    for (std::size_t r = 0; r < rows; ++r) basis[r] = cols + r;

    QVec z(cols + rows + 1);  // phase-1 objective row (to be minimized)
    for (std::size_t j = 0; j <= cols + rows; ++j) {
        Rat s = 0;
        for (std::size_t r = 0; r < rows; ++r) s += t[r][j];
        z[j] = -s;
    }
    for (std::size_t r = 0; r < rows; ++r) z[cols + r] = 0;

    while (true) {
        std::size_t enter = cols + rows;
        for (std::size_t j = 0; j < cols + rows; ++j)
            if (z[j] < 0) {
                enter = j;
                break;
            }
        if (enter == cols + rows) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t r = 0; r < rows; ++r) {
            if (t[r][enter] <= 0) continue;
            Rat ratio = t[r][cols + rows] / t[r][enter];
            if (leave == rows || ratio < best || (ratio == best && basis[r] < basis[leave])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave == rows) throw internal_error("phase-1 LP unbounded");
        Rat piv = t[leave][enter];
        for (auto& x : t[leave]) x /= piv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == leave || t[r][enter] == 0) continue;
            Rat f = t[r][enter];
            for (std::size_t j = 0; j <= cols + rows; ++j) t[r][j] -= f * t[leave][j];
        }
        if (z[enter] != 0) {
            Rat f = z[enter];
            for (std::size_t j = 0; j <= cols + rows; ++j) z[j] -= f * t[leave][j];
        }
        basis[leave] = enter;
    }
    return z[cols + rows] == 0;
}

// ---------------------------------------------------------------------------
// recursive face lattice
// ---------------------------------------------------------------------------

namespace {

struct LatticeBuilder {
    const std::vector<QVec>& pts;
    std::map<std::vector<int>, int> id_of_onset;
    struct Rec {
        std::vector<int> onset;
        std::vector<int> vertices;
        int dim = 0;
    };
    std::vector<Rec> recs;

    explicit LatticeBuilder(const std::vector<QVec>& p) : pts(p) {}

    int build(std::vector<int> onset) {
        std::sort(onset.begin(), onset.end());
        auto it = id_of_onset.find(onset);
        if (it != id_of_onset.end()) return it->second;

        std::vector<QVec> sub;
        sub.reserve(onset.size());
        for (int i : onset) sub.push_back(pts[i]);
        ReducedPoints rp = affine_reduce(sub);

        Rec rec;
        rec.onset = onset;
        rec.dim = rp.dim;
        if (rp.dim == 0) {
            rec.vertices = onset;
        } else {
            std::set<int> verts;
            for (const FacetData& f : facet_enumeration(rp)) {
                std::vector<int> child;
                child.reserve(f.onset.size());
                for (int local : f.onset) child.push_back(onset[local]);
                int cid = build(std::move(child));
                for (int v : recs[cid].vertices) verts.insert(v);
            }
            rec.vertices.assign(verts.begin(), verts.end());
        }
        int id = static_cast<int>(recs.size());
        recs.push_back(std::move(rec));
        id_of_onset.emplace(recs.back().onset, id);
        return id;
    }
};

void check_distinct(const std::vector<QVec>& pts) {
    std::set<QVec> seen;
    for (const QVec& p : pts)
        if (!seen.insert(p).second) throw invalid_input("duplicate points in configuration");
}

}  // namespace

Polytope hull_faces(const std::vector<QVec>& pts) {
    if (pts.empty()) throw invalid_input("hull_faces: no points");
    if (static_cast<int>(pts.size()) > kMaxHullPoints) throw invalid_input("hull_faces: too many points");
    check_distinct(pts);

    LatticeBuilder lb(pts);
    std::vector<int> all(pts.size());
    std::iota(all.begin(), all.end(), 0);
    int top = lb.build(all);

    Polytope poly;
    poly.points = pts;
    poly.dim = lb.recs[top].dim;
    poly.vertices = lb.recs[top].vertices;
    poly.lattice.dim = poly.dim;
    poly.lattice.by_dim.assign(static_cast<std::size_t>(poly.dim) + 1, {});
    std::set<std::vector<int>> dedup;
    for (const auto& rec : lb.recs) {
        if (dedup.insert(rec.vertices).second) poly.lattice.by_dim[rec.dim].push_back(rec.vertices);
    }
    for (auto& faces : poly.lattice.by_dim) std::sort(faces.begin(), faces.end());
    poly.fvector.clear();
    for (int d = 0; d < poly.dim; ++d) poly.fvector.push_back(static_cast<int>(poly.lattice.by_dim[d].size()));

    // Euler relation sanity: sum (-1)^d f_d = 1 - (-1)^dim over proper faces
    long euler = 0;
    for (int d = 0; d < poly.dim; ++d) euler += (d % 2 == 0 ? 1 : -1) * poly.fvector[d];
    long expect = 1 - ((poly.dim % 2 == 0) ? 1 : -1);
    if (poly.dim >= 1 && euler != expect) throw internal_error("face lattice violates the Euler relation");
    return poly;
}

Subdivision regular_subdivision(const std::vector<QVec>& pts, const std::vector<Rat>& weights) {
    if (pts.size() != weights.size()) throw invalid_input("regular_subdivision: size mismatch");
    if (pts.empty()) throw invalid_input("regular_subdivision: no points");
    if (static_cast<int>(pts.size()) > kMaxHullPoints) throw invalid_input("regular_subdivision: too many points");
    check_distinct(pts);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<QVec> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!others.empty() && in_convex_hull(pts[i], others))
            throw invalid_input("regular_subdivision: input point is not extreme");
    }

    ReducedPoints base = affine_reduce(pts);
    Subdivision sub;
    sub.points = pts;
    sub.cell_dim = base.dim;

    // lift: x-reduced coordinates plus the integerized weight column
    mpz_class wden(1);
    for (const Rat& w : weights) mpz_lcm(wden.get_mpz_t(), wden.get_mpz_t(), w.get_den().get_mpz_t());
    std::vector<QVec> lifted_q(pts.size(), QVec(base.dim + 1));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (int c = 0; c < base.dim; ++c) lifted_q[i][c] = Rat(base.coords[i][c]);
        lifted_q[i][base.dim] = weights[i] * Rat(wden);
    }
    const int lifted_rank = affine_rank(lifted_q);

    if (lifted_rank <= base.dim) {
        // weights affine in the points: trivial subdivision
        std::vector<int> all(pts.size());
        std::iota(all.begin(), all.end(), 0);
        sub.cells.push_back(all);
    } else {
        ReducedPoints lifted;
        lifted.dim = base.dim + 1;
        lifted.coords.assign(pts.size(), std::vector<mpz_class>(lifted.dim));
        for (std::size_t i = 0; i < pts.size(); ++i) {
            for (int c = 0; c < base.dim; ++c) lifted.coords[i][c] = base.coords[i][c];
            Rat scaled = weights[i] * Rat(wden);
            lifted.coords[i][base.dim] = scaled.get_num();
        }
        for (const FacetData& f : facet_enumeration(lifted)) {
            if (f.normal.back() < 0) sub.cells.push_back(f.onset);
        }
        std::sort(sub.cells.begin(), sub.cells.end());
        std::vector<bool> covered(pts.size(), false);
        for (const auto& cell : sub.cells)
            for (int i : cell) covered[i] = true;
        for (bool c : covered)
            if (!c) throw internal_error("regular_subdivision: lower hull does not cover a vertex");
    }

    // complex = all faces of all cells, deduplicated by vertex set
    std::map<std::vector<int>, int> face_dim;
    std::vector<std::set<std::vector<int>>> faces_per_cell(sub.cells.size());
    for (std::size_t ci = 0; ci < sub.cells.size(); ++ci) {
        const auto& cell = sub.cells[ci];
        std::vector<QVec> cpts;
        cpts.reserve(cell.size());
        for (int i : cell) cpts.push_back(pts[i]);
        LatticeBuilder lb(cpts);
        std::vector<int> all(cpts.size());
        std::iota(all.begin(), all.end(), 0);
        lb.build(all);
        for (const auto& rec : lb.recs) {
            std::vector<int> global;
            global.reserve(rec.vertices.size());
            for (int local : rec.vertices) global.push_back(cell[local]);
            std::sort(global.begin(), global.end());
            faces_per_cell[ci].insert(global);
            face_dim.emplace(std::move(global), rec.dim);
        }
    }
    for (auto& [verts, dim] : face_dim) sub.complex.push_back({verts, dim});

    // cells of a coherent subdivision meet in common faces
    for (std::size_t a = 0; a < sub.cells.size(); ++a)
        for (std::size_t b = a + 1; b < sub.cells.size(); ++b) {
            std::vector<int> inter;
            std::set_intersection(sub.cells[a].begin(), sub.cells[a].end(), sub.cells[b].begin(),
                                  sub.cells[b].end(), std::back_inserter(inter));
            if (inter.empty()) continue;
            if (!faces_per_cell[a].count(inter) || !faces_per_cell[b].count(inter))
                throw internal_error("regular_subdivision: cells do not meet in a common face");
        }
    return sub;
}

std::vector<int> subdivision_fvector(const Subdivision& sub) {
    std::vector<int> f(static_cast<std::size_t>(sub.cell_dim) + 1, 0);
    for (const auto& face : sub.complex) ++f[face.dim];
    return f;
}

}  // namespace flagpos
