#pragma once

#include <vector>

#include "flagpos/rational.hpp"

namespace flagpos {

/**
 * Exact-rational polyhedral kernel for small configurations: facet
 * enumeration by supporting-hyperplane search, recursive face lattices,
 * point-in-hull tests by rational LP, and regular subdivisions via lifted
 * lower hulls.  Ambient dimension is capped at kMaxIntrinsicDim after affine
 * reduction; point counts stay small (tens) throughout.
 */

constexpr int kMaxIntrinsicDim = 6;
constexpr int kMaxHullPoints = 120;

/** Points expressed in integer coordinates on their affine hull. */
struct ReducedPoints {
    int dim = 0;                                 // intrinsic (affine) dimension
    std::vector<std::vector<mpz_class>> coords;  // one row per input point, dim columns
};

ReducedPoints affine_reduce(const std::vector<QVec>& pts);

struct FacetData {
    std::vector<int> onset;          // indices of all points on the hyperplane
    std::vector<Rat> normal;         // outward normal in reduced coordinates
    Rat offset;                      // normal · x = offset on the facet, < offset inside
};

/**
 * All facets of conv(pts) where pts are full-dimensional in reduced
 * coordinates.  Brute-force over dim-subsets with exact arithmetic.
 */
std::vector<FacetData> facet_enumeration(const ReducedPoints& rp);

/** Exact feasibility LP: is p a convex combination of pts? */
bool in_convex_hull(const QVec& p, const std::vector<QVec>& pts);

struct FaceLattice {
    int dim = 0;                                        // dimension of the polytope
    std::vector<std::vector<std::vector<int>>> by_dim;  // by_dim[d] = faces of dim d as sorted point-index lists
};

struct Polytope {
    std::vector<QVec> points;   // input configuration
    std::vector<int> vertices;  // indices of extreme points
    FaceLattice lattice;        // face lists refer to input indices
    std::vector<int> fvector;   // proper faces only, dims 0..dim-1
    int dim = 0;
};

/**
 * Convex hull with full face lattice.  Duplicate input points are rejected;
 * non-extreme input points are tolerated and simply never show up as
 * vertices.  The Euler relation is asserted on the resulting f-vector.
 */
Polytope hull_faces(const std::vector<QVec>& pts);

struct Subdivision {
    std::vector<QVec> points;
    std::vector<std::vector<int>> cells;  // maximal cells, sorted point-index lists
    int cell_dim = 0;

    struct Face {
        std::vector<int> pts;
        int dim = 0;
    };
    std::vector<Face> complex;  // all faces of all cells, deduplicated, cells included
};

/**
 * Regular subdivision of a point configuration induced by lifting weights:
 * cells are the projections of the lower facets of conv{(p_i, w_i)}.  Every
 * input point must be extreme (these configurations are vertex sets of
 * polytopes).  The produced cells are checked to intersect pairwise in
 * common faces.
 */
Subdivision regular_subdivision(const std::vector<QVec>& pts, const std::vector<Rat>& weights);

/** Complex f-vector: face counts by dimension 0..cell_dim, empty face excluded. */
std::vector<int> subdivision_fvector(const Subdivision& sub);

}  // namespace flagpos
