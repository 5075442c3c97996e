#include "flagpos/tropical.hpp"

#include <algorithm>

namespace flagpos {

TropVec::TropVec(int n, int r, std::vector<TropVal> coords) : n_(n), r_(r), c_(std::move(coords)) {
    if (n < 1 || n > kMaxGround || r < 0 || r > n) throw invalid_input("tropical vector shape out of range");
    if (c_.size() != binom(n, r)) throw invalid_input("tropical vector has wrong coordinate count");
    bool any = false;
    for (const TropVal& t : c_) any = any || t.finite;
    if (!any) throw invalid_input("tropical vector identically infinite");
}

TropVec TropVec::indicator(const Matroid& m) {
    if (m.ground() != full_mask(m.n())) throw invalid_input("indicator vector needs a matroid on [n]");
    std::vector<TropVal> c(binom(m.n(), m.rank()), TropVal::inf());
    for (Mask b : m.bases()) c[lex_rank(m.n(), m.rank(), b)] = TropVal::of(0);
    return TropVec(m.n(), m.rank(), std::move(c));
}

TropVec TropVec::constant_zero(int n, int r) {
    return TropVec(n, r, std::vector<TropVal>(binom(n, r), TropVal::of(0)));
}

std::vector<Mask> TropVec::support() const {
    std::vector<Mask> out;
    std::size_t idx = 0;
    for (Mask s : combinations(n_, r_)) {
        if (c_[idx].finite) out.push_back(s);
        ++idx;
    }
    return out;
}

Matroid TropVec::support_matroid() const { return Matroid(n_, support(), Matroid::Verify::kExchange); }

TropVec TropVec::dual() const {
    const Mask full = full_mask(n_);
    std::vector<TropVal> c(binom(n_, n_ - r_), TropVal::inf());
    std::size_t idx = 0;
    for (Mask s : combinations(n_, r_)) {
        c[lex_rank(n_, n_ - r_, full & ~s)] = c_[idx];
        ++idx;
    }
    return TropVec(n_, n_ - r_, std::move(c));
}

TropVec TropVec::initial_part() const {
    TropVal best = TropVal::inf();
    for (const TropVal& t : c_) best = TropVal::min(best, t);
    std::vector<TropVal> c(c_.size(), TropVal::inf());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] == best) c[i] = TropVal::of(0);
    return TropVec(n_, r_, std::move(c));
}

TropVec TropVec::affine_shift(const Rat& c0, const QVec& coeff) const {
    if (static_cast<int>(coeff.size()) != n_) throw invalid_input("affine shift needs one coefficient per element");
    std::vector<TropVal> c = c_;
    std::size_t idx = 0;
    for (Mask s : combinations(n_, r_)) {
        if (c[idx].finite) {
            Rat add = c0;
            for (int e : mask_elements(s)) add += coeff[static_cast<std::size_t>(e) - 1];
            c[idx].v += add;
        }
        ++idx;
    }
    return TropVec(n_, r_, std::move(c));
}

TropVec TropVec::scaled(const Rat& k) const {
    if (k < 0) throw invalid_input("tropical scaling needs a nonnegative factor");
    std::vector<TropVal> c = c_;
    for (TropVal& t : c)
        if (t.finite) t.v *= k;
    return TropVec(n_, r_, std::move(c));
}

TropVec TropVec::plus(const TropVec& other) const {
    if (n_ != other.n_ || r_ != other.r_) throw invalid_input("adding tropical vectors of different shapes");
    std::vector<TropVal> c(c_.size(), TropVal::inf());
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i].finite && other.c_[i].finite) c[i] = TropVal::of(c_[i].v + other.c_[i].v);
    return TropVec(n_, r_, std::move(c));
}

TropVec TropVec::normalized() const {
    TropVal best = TropVal::inf();
    for (const TropVal& t : c_) best = TropVal::min(best, t);
    std::vector<TropVal> c = c_;
    for (TropVal& t : c)
        if (t.finite) t.v -= best.v;
    return TropVec(n_, r_, std::move(c));
}

bool TropVec::proj_equal(const TropVec& other) const {
    if (n_ != other.n_ || r_ != other.r_) return false;
    return normalized().coords() == other.normalized().coords();
}

std::vector<int> FlagTropVec::ranks() const {
    std::vector<int> out;
    out.reserve(mus.size());
    for (const TropVec& m : mus) out.push_back(m.r());
    return out;
}

bool FlagTropVec::consecutive_ranks() const {
    for (std::size_t i = 1; i < mus.size(); ++i)
        if (mus[i].r() != mus[i - 1].r() + 1) return false;
    return !mus.empty();
}

const TropVec& FlagTropVec::by_rank(int r) const {
    for (const TropVec& m : mus)
        if (m.r() == r) return m;
    throw invalid_input("flag vector has no constituent of rank " + std::to_string(r));
}

std::vector<ThreeTerm> gen_three_term(int n, int r, RelKind kind) {
    std::vector<ThreeTerm> out;
    if (kind == RelKind::kGrassmannPluecker) {
        if (r < 2 || n - r < 2) return out;
        for (Mask s : combinations(n, r - 2)) {
            std::vector<int> rest;
            for (int e = 1; e <= n; ++e)
                if (!mask_has(s, e)) rest.push_back(e);
            const int m = static_cast<int>(rest.size());
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c)
                        for (int d = c + 1; d < m; ++d) {
                            ThreeTerm t;
                            t.kind = kind;
                            t.s = s;
                            t.tail = {rest[a], rest[b], rest[c], rest[d]};
                            const Mask bi = mask_bit(rest[a]), bj = mask_bit(rest[b]);
                            const Mask bk = mask_bit(rest[c]), bl = mask_bit(rest[d]);
                            t.mono = {{{s | bi | bj, s | bk | bl},
                                       {s | bi | bk, s | bj | bl},
                                       {s | bi | bl, s | bj | bk}}};
                            out.push_back(t);
                        }
        }
    } else {
        if (r < 1 || n - r < 2) return out;
        for (Mask s : combinations(n, r - 1)) {
            std::vector<int> rest;
            for (int e = 1; e <= n; ++e)
                if (!mask_has(s, e)) rest.push_back(e);
            const int m = static_cast<int>(rest.size());
            for (int a = 0; a < m; ++a)
                for (int b = a + 1; b < m; ++b)
                    for (int c = b + 1; c < m; ++c) {
                        ThreeTerm t;
                        t.kind = kind;
                        t.s = s;
                        t.tail = {rest[a], rest[b], rest[c], 0};
                        const Mask bi = mask_bit(rest[a]), bj = mask_bit(rest[b]), bk = mask_bit(rest[c]);
                        t.mono = {{{s | bi, s | bj | bk}, {s | bj, s | bi | bk}, {s | bk, s | bi | bj}}};
                        out.push_back(t);
                    }
        }
    }
    return out;
}

TropVal eval_monomial(const TropVec& w, const std::pair<Mask, Mask>& mono) {
    return w.at(mono.first) + w.at(mono.second);
}

TropVal eval_monomial(const FlagTropVec& mu, const std::pair<Mask, Mask>& mono) {
    return mu.by_rank(mask_size(mono.first)).at(mono.first) + mu.by_rank(mask_size(mono.second)).at(mono.second);
}

namespace {

bool tropical_of(const TropVal& m0, const TropVal& m1, const TropVal& m2) {
    TropVal best = TropVal::min(m0, TropVal::min(m1, m2));
    if (!best.finite) return true;
    int hits = static_cast<int>(m0 == best) + static_cast<int>(m1 == best) + static_cast<int>(m2 == best);
    return hits >= 2;
}

// The middle monomial carries the negative sign, so positive-tropical
// satisfaction amounts to mid = min(outer0, outer2) in T.
bool positive_of(const TropVal& m0, const TropVal& m1, const TropVal& m2) {
    return m1 == TropVal::min(m0, m2);
}

}  // namespace

bool satisfies_tropical(const TropVec& w, const ThreeTerm& rel) {
    return tropical_of(eval_monomial(w, rel.mono[0]), eval_monomial(w, rel.mono[1]), eval_monomial(w, rel.mono[2]));
}

bool satisfies_tropical(const FlagTropVec& mu, const ThreeTerm& rel) {
    return tropical_of(eval_monomial(mu, rel.mono[0]), eval_monomial(mu, rel.mono[1]), eval_monomial(mu, rel.mono[2]));
}

bool satisfies_positive_tropical(const TropVec& w, const ThreeTerm& rel) {
    return positive_of(eval_monomial(w, rel.mono[0]), eval_monomial(w, rel.mono[1]), eval_monomial(w, rel.mono[2]));
}

bool satisfies_positive_tropical(const FlagTropVec& mu, const ThreeTerm& rel) {
    return positive_of(eval_monomial(mu, rel.mono[0]), eval_monomial(mu, rel.mono[1]), eval_monomial(mu, rel.mono[2]));
}

std::vector<ThreeTerm> three_terms_for_ranks(int n, std::span<const int> ranks) {
    std::vector<ThreeTerm> out;
    for (int r : ranks) {
        auto gp = gen_three_term(n, r, RelKind::kGrassmannPluecker);
        out.insert(out.end(), gp.begin(), gp.end());
    }
    for (std::size_t i = 1; i < ranks.size(); ++i) {
        if (ranks[i] != ranks[i - 1] + 1) continue;
        auto inc = gen_three_term(n, ranks[i - 1], RelKind::kIncidence);
        out.insert(out.end(), inc.begin(), inc.end());
    }
    return out;
}

namespace {

std::vector<Matroid> support_sequence(const FlagTropVec& mu) {
    std::vector<Matroid> seq;
    seq.reserve(mu.mus.size());
    for (const TropVec& w : mu.mus) seq.emplace_back(w.n(), w.support());
    return seq;
}

bool support_is_flag_matroid(const FlagTropVec& mu) {
    const auto seq = support_sequence(mu);
    for (const Matroid& m : seq)
        if (!Matroid::is_matroid_bases(m.n(), m.bases())) return false;
    if (seq.size() == 1) return true;
    return is_flag_matroid(seq);
}

void require_consecutive(const FlagTropVec& mu) {
    if (mu.mus.empty()) throw invalid_input("empty flag vector");
    if (!mu.consecutive_ranks()) throw invalid_input("ranks must be consecutive; see the experimental non-consecutive checker");
}

}  // namespace

bool in_fldr_nonneg(const FlagTropVec& mu) {
    require_consecutive(mu);
    if (!support_is_flag_matroid(mu)) return false;
    const auto ranks = mu.ranks();
    for (const ThreeTerm& rel : three_terms_for_ranks(mu.n(), ranks))
        if (!satisfies_positive_tropical(mu, rel)) return false;
    return true;
}

bool in_fldr_tropical(const FlagTropVec& mu) {
    require_consecutive(mu);
    if (!support_is_flag_matroid(mu)) return false;
    const auto ranks = mu.ranks();
    for (const ThreeTerm& rel : three_terms_for_ranks(mu.n(), ranks))
        if (!satisfies_tropical(mu, rel)) return false;
    return true;
}

bool pom_check(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("pom_check: empty sequence");
    FlagTropVec mu;
    for (const Matroid& m : seq) {
        const Matroid dense = (m.ground() == full_mask(m.n())) ? m : m.relabeled_dense();
        mu.mus.push_back(TropVec::indicator(dense));
    }
    for (std::size_t i = 1; i < mu.mus.size(); ++i)
        if (mu.mus[i].n() != mu.mus[0].n()) throw invalid_input("pom_check: ground sizes differ");
    return in_fldr_nonneg(mu);
}

TropVec valuated_minor(const TropVec& w, Mask keep, Mask contract) {
    const Mask full = full_mask(w.n());
    if ((contract & ~keep) != 0 || (keep & ~full) != 0) throw invalid_input("valuated_minor: need contract ⊆ keep ⊆ [n]");

    // Work with explicit labels; delete [n]\keep one element at a time, then
    // contract.  A deleted coloop is re-attached to every surviving basis.
    std::vector<int> labels = mask_elements(full);
    TropVec cur = w;

    auto drop_label = [&](int e) {
        labels.erase(std::find(labels.begin(), labels.end(), e));
    };
    auto local_bit = [&](int e) {
        auto it = std::find(labels.begin(), labels.end(), e);
        return mask_bit(static_cast<int>(it - labels.begin()) + 1);
    };
    auto rebuild = [&](int new_r, auto&& coord_of) {
        const int m = static_cast<int>(labels.size());
        std::vector<TropVal> c;
        c.reserve(binom(m, new_r));
        for (Mask b : combinations(m, new_r)) c.push_back(coord_of(b));
        return TropVec(m, new_r, std::move(c));
    };
    auto old_mask_of = [&](Mask local, const std::vector<int>& lab) {
        Mask out = 0;
        for (int e : mask_elements(local)) out |= mask_bit(lab[static_cast<std::size_t>(e) - 1]);
        return out;
    };

    auto delete_one = [&](int e) {
        const Mask bit = local_bit(e);
        bool coloop = true;
        std::size_t idx = 0;
        for (Mask s : combinations(static_cast<int>(labels.size()), cur.r())) {
            if (cur.coords()[idx].finite && !(s & bit)) coloop = false;
            ++idx;
        }
        std::vector<int> old_labels = labels;
        drop_label(e);
        const int new_r = coloop ? cur.r() - 1 : cur.r();
        TropVec old = cur;
        cur = rebuild(new_r, [&](Mask b) {
            Mask lifted = old_mask_of(b, labels);  // labels already shrunk
            Mask query = coloop ? (lifted | mask_bit(e)) : lifted;
            // translate to the previous local indexing
            Mask prev = 0;
            for (int x : mask_elements(query)) {
                auto it = std::find(old_labels.begin(), old_labels.end(), x);
                prev |= mask_bit(static_cast<int>(it - old_labels.begin()) + 1);
            }
            return old.at(prev);
        });
    };

    auto contract_one = [&](int e) {
        const Mask bit = local_bit(e);
        std::vector<int> old_labels = labels;
        drop_label(e);
        TropVec old = cur;
        cur = rebuild(cur.r() - 1, [&](Mask b) {
            Mask lifted = old_mask_of(b, labels) ;
            Mask prev = 0;
            for (int x : mask_elements(lifted)) {
                auto it = std::find(old_labels.begin(), old_labels.end(), x);
                prev |= mask_bit(static_cast<int>(it - old_labels.begin()) + 1);
            }
            prev |= bit;
            return old.at(prev);
        });
    };

    for (int e : mask_elements(full & ~keep)) delete_one(e);
    for (int e : mask_elements(contract)) {
        // the element must not be a loop of the current support
        bool loop = true;
        std::size_t idx = 0;
        const Mask bit = local_bit(e);
        for (Mask s : combinations(static_cast<int>(labels.size()), cur.r())) {
            if (cur.coords()[idx].finite && (s & bit)) loop = false;
            ++idx;
        }
        if (loop) throw invalid_input("valuated_minor: contracting a loop of the support");
        contract_one(e);
    }
    return cur;
}

std::vector<MultiTerm> gen_pluecker_family(int n, int r, int s) {
    if (!(0 < r && r <= s && s < n)) throw invalid_input("gen_pluecker_family: need 0 < r <= s < n");
    std::vector<MultiTerm> out;
    for (Mask im : combinations(n, r - 1)) {
        for (Mask jm : combinations(n, s + 1)) {
            MultiTerm f;
            f.rlow = r;
            f.rhigh = s;
            for (int j : mask_elements(jm & ~im)) {
                int below = 0, above = 0;
                for (int k : mask_elements(jm))
                    if (k < j) ++below;
                for (int i : mask_elements(im))
                    if (j < i) ++above;
                f.monos.emplace_back(im | mask_bit(j), jm & ~mask_bit(j));
                f.signs.push_back(((below + above) % 2 == 0) ? 1 : -1);
            }
            if (!f.monos.empty()) out.push_back(std::move(f));
        }
    }
    return out;
}

namespace {

bool multiterm_check(const FlagTropVec& mu, const MultiTerm& rel, bool positive) {
    TropVal best = TropVal::inf();
    std::vector<TropVal> vals;
    vals.reserve(rel.monos.size());
    for (const auto& mono : rel.monos) {
        vals.push_back(eval_monomial(mu, mono));
        best = TropVal::min(best, vals.back());
    }
    if (!best.finite) return true;
    bool plus = false, minus = false;
    int hits = 0;
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (vals[i] == best) {
            ++hits;
            (rel.signs[i] > 0 ? plus : minus) = true;
        }
    }
    if (positive) return plus && minus;
    return hits >= 2;
}

}  // namespace

bool satisfies_tropical(const FlagTropVec& mu, const MultiTerm& rel) { return multiterm_check(mu, rel, false); }

bool satisfies_positive_tropical(const FlagTropVec& mu, const MultiTerm& rel) { return multiterm_check(mu, rel, true); }

bool experimental_nonconsecutive_relations(const FlagTropVec& mu) {
    if (mu.mus.empty()) throw invalid_input("empty flag vector");
    const int n = mu.n();
    const auto ranks = mu.ranks();
    for (std::size_t i = 1; i < ranks.size(); ++i)
        if (ranks[i] <= ranks[i - 1]) throw invalid_input("ranks must strictly increase");
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] >= 1 && ranks[i] < n)
            for (const MultiTerm& rel : gen_pluecker_family(n, ranks[i], ranks[i]))
                if (!satisfies_positive_tropical(mu, rel)) return false;
        if (i + 1 < ranks.size())
            for (const MultiTerm& rel : gen_pluecker_family(n, ranks[i], ranks[i + 1]))
                if (!satisfies_positive_tropical(mu, rel)) return false;
    }
    return true;
}

}  // namespace flagpos
