#pragma once

#include <optional>
#include <span>
#include <vector>

#include "flagpos/matroid.hpp"
#include "flagpos/polytope.hpp"
#include "flagpos/tropical.hpp"

namespace flagpos {

/**
 * Flag matroid polytope with vertex labels: vertex i is e_{B_1}+...+e_{B_k}
 * for the flag flags[i].  The builder checks that distinct flags give
 * distinct points, i.e. every Minkowski vertex has a unique flag
 * decomposition.
 */
struct FlagPolytope {
    FlagMatroid fm;
    std::vector<std::vector<Mask>> flags;
    std::vector<QVec> vertices;
};

FlagPolytope flag_polytope(const FlagMatroid& fm);

std::vector<QVec> hypersimplex_vertices(int d, int n);
std::vector<QVec> permutohedron_vertices(int n);

Polytope hypersimplex(int d, int n);
Polytope permutohedron(int n);

/** Coherent subdivision of the flag polytope of the support induced by mu. */
struct MuSubdivision {
    FlagPolytope fp;
    Subdivision sub;
};

MuSubdivision subdivision_from_mu(const FlagTropVec& mu);

/**
 * The flag matroid carried by a face: constituent i collects the i-th
 * members of the flag labels over the face's vertices.
 */
std::vector<Matroid> face_flag_matroid(const FlagPolytope& fp, std::span<const int> vertex_ids);

/**
 * Dual-route flag positroid certification: the necklace-quotient route and
 * the 0/inf relation route must agree, otherwise internal_error is thrown.
 * Ranks must be consecutive.
 */
bool flag_positroid_certified(std::span<const Matroid> seq);

bool all_cells_flag_positroid(const MuSubdivision& ms);

struct TwoFaceReport {
    bool ok = true;
    std::vector<int> witness;  // a failing face (vertex ids) when !ok
};

TwoFaceReport twod_faces_flag_positroid(const MuSubdivision& ms);

/**
 * Polytopal flag matroid criterion used as an independent oracle: all
 * extreme points of the Minkowski-sum vertex candidates share one squared
 * norm.  Exact; intended for small ground sets.
 */
bool flag_matroid_polytope_criterion(std::span<const Matroid> seq);

/** Edge criterion for matroids: every hull edge parallel to some e_i - e_j. */
bool matroid_edge_criterion(int n, const std::vector<Mask>& bases);

}  // namespace flagpos
