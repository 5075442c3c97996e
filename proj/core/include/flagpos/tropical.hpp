#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "flagpos/matroid.hpp"
#include "flagpos/rational.hpp"

namespace flagpos {

/** Element of the tropical semifield T = Q ∪ {inf} under (min, +). */
struct TropVal {
    bool finite = false;
    Rat v;  // meaningful only when finite

    static TropVal inf() { return TropVal{}; }
    static TropVal of(Rat x) { return TropVal{true, std::move(x)}; }

    friend TropVal operator+(const TropVal& a, const TropVal& b) {
        if (!a.finite || !b.finite) return inf();
        return of(a.v + b.v);
    }
    friend bool operator==(const TropVal& a, const TropVal& b) {
        if (a.finite != b.finite) return false;
        return !a.finite || a.v == b.v;
    }
    friend bool operator<(const TropVal& a, const TropVal& b) {
        if (!b.finite) return a.finite;
        if (!a.finite) return false;
        return a.v < b.v;
    }
    static TropVal min(const TropVal& a, const TropVal& b) { return b < a ? b : a; }
};

/**
 * Valuated Plücker vector: a map from r-subsets of [n] to T, not identically
 * inf, considered projectively (two vectors are equal when they differ by a
 * global finite additive shift).
 */
class TropVec {
  public:
    TropVec(int n, int r, std::vector<TropVal> coords);  // coords in lex order

    static TropVec indicator(const Matroid& m);  // 0 on bases, inf elsewhere
    static TropVec constant_zero(int n, int r);

    int n() const { return n_; }
    int r() const { return r_; }
    const std::vector<TropVal>& coords() const { return c_; }
    const TropVal& at(Mask s) const { return c_[lex_rank(n_, r_, s)]; }

    std::vector<Mask> support() const;
    Matroid support_matroid() const;  // throws when support fails the exchange axiom

    TropVec dual() const;              // w^perp(I) = w([n] \ I)
    TropVec initial_part() const;      // 0 at global minima, inf elsewhere
    TropVec affine_shift(const Rat& c0, const QVec& c) const;  // add c0 + sum_{i in S} c_i
    TropVec scaled(const Rat& c) const;                        // multiply finite entries by c >= 0

    /** Entrywise tropical sum with another vector of the same shape (ordinary +). */
    TropVec plus(const TropVec& other) const;

    TropVec normalized() const;  // subtract the minimum finite coordinate
    bool proj_equal(const TropVec& other) const;

  private:
    int n_ = 0, r_ = 0;
    std::vector<TropVal> c_;
};

/** Tuple of valuated Plücker vectors of strictly increasing ranks. */
struct FlagTropVec {
    std::vector<TropVec> mus;

    int n() const { return mus.empty() ? 0 : mus.front().n(); }
    std::vector<int> ranks() const;
    bool consecutive_ranks() const;
    const TropVec& by_rank(int r) const;
};

enum class RelKind { kGrassmannPluecker, kIncidence };

/**
 * Three-term relation with sign pattern (+, -, +):
 *   GP:        x_{Sij} x_{Skl} - x_{Sik} x_{Sjl} + x_{Sil} x_{Sjk}
 *   incidence: x_{Si} x_{Sjk}  - x_{Sj} x_{Sik}  + x_{Sk} x_{Sij}
 * Each monomial stores its two index subsets; for incidence relations the
 * first factor has rank r and the second rank r+1.
 */
struct ThreeTerm {
    RelKind kind = RelKind::kGrassmannPluecker;
    Mask s = 0;
    std::array<int, 4> tail{};  // i<j<k(<l); tail[3] unused for incidence
    std::array<std::pair<Mask, Mask>, 3> mono;
};

/** Every three-term relation of the given kind; see the count formulas in tests. */
std::vector<ThreeTerm> gen_three_term(int n, int r, RelKind kind);

TropVal eval_monomial(const TropVec& w, const std::pair<Mask, Mask>& mono);
TropVal eval_monomial(const FlagTropVec& mu, const std::pair<Mask, Mask>& mono);

/** Min over the three monomials, if finite, is attained at least twice. */
bool satisfies_tropical(const TropVec& w, const ThreeTerm& rel);
bool satisfies_tropical(const FlagTropVec& mu, const ThreeTerm& rel);

/**
 * Positive-tropical satisfaction: the negative middle monomial equals the
 * minimum of the two outer ones (all-inf included).
 */
bool satisfies_positive_tropical(const TropVec& w, const ThreeTerm& rel);
bool satisfies_positive_tropical(const FlagTropVec& mu, const ThreeTerm& rel);

/** All three-term relations relevant to a rank vector (GP per rank, incidence per adjacent pair). */
std::vector<ThreeTerm> three_terms_for_ranks(int n, std::span<const int> ranks);

/**
 * Nonnegative flag Dressian membership for consecutive ranks: the support is
 * a flag matroid and every three-term relation holds positive-tropically.
 * A single rank degenerates to nonnegative Dressian membership.
 */
bool in_fldr_nonneg(const FlagTropVec& mu);

/** Plain (tropical) flag Dressian membership through the same three-term route. */
bool in_fldr_tropical(const FlagTropVec& mu);

/** 0/inf embedding of a matroid sequence: positively oriented flag matroid test. */
bool pom_check(std::span<const Matroid> seq);

/**
 * Valuated minor: restrict to `keep`, contract `contract` (independent in the
 * support), relabel onto a dense ground set.  Coordinates are inherited from
 * the corresponding bases; a deleted coloop re-enters every remaining basis.
 */
TropVec valuated_minor(const TropVec& w, Mask keep, Mask contract);

/**
 * Single-exchange Plücker relation of type (r,s;n):
 *   sum_{j in J \ I} sign(j,I,J) x_{I∪j} x_{J∖j},
 * sign(j,I,J) = (-1)^{#{k in J : k<j} + #{i in I : j<i}}.  The full family is
 * generated only for small-n validation of the three-term route.
 */
struct MultiTerm {
    int rlow = 0, rhigh = 0;
    std::vector<std::pair<Mask, Mask>> monos;
    std::vector<int> signs;  // +1 / -1
};

std::vector<MultiTerm> gen_pluecker_family(int n, int r, int s);

bool satisfies_tropical(const FlagTropVec& mu, const MultiTerm& rel);
bool satisfies_positive_tropical(const FlagTropVec& mu, const MultiTerm& rel);

/**
 * Experimental membership report for non-consecutive ranks: checks the
 * adjacent-pair single-exchange families positively, reporting relation
 * satisfaction only (no realizability claim).
 */
bool experimental_nonconsecutive_relations(const FlagTropVec& mu);

}  // namespace flagpos
