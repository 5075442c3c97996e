#include "flagpos/bruhat_interval.hpp"

#include <algorithm>
#include <set>

#include "flagpos/gale.hpp"

namespace flagpos {

BruhatInterval::BruhatInterval(Perm a, Perm b) : u(std::move(a)), v(std::move(b)) {
    if (!bruhat_leq(u, v)) throw invalid_input("Bruhat interval needs u <= v");
}

std::vector<QVec> bip_vertices(const Perm& u, const Perm& v) {
    std::vector<QVec> out;
    for (const Perm& z : bruhat_interval(u, v)) {
        QVec p;
        p.reserve(static_cast<std::size_t>(z.n()));
        for (int i = 1; i <= z.n(); ++i) p.emplace_back(z(i));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<QVec> twisted_bip_vertices(const Perm& u, const Perm& v) {
    std::vector<QVec> out;
    const int n = u.n();
    for (const Perm& z : bruhat_interval(u, v)) {
        const Perm zi = z.inverse();
        QVec p;
        p.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) p.emplace_back(n + 1 - zi(i));
        out.push_back(std::move(p));
    }
    return out;
}

std::vector<Mask> flag_of_perm(const Perm& z) {
    std::vector<Mask> flag;
    flag.reserve(static_cast<std::size_t>(z.n()));
    for (int d = 1; d <= z.n(); ++d) flag.push_back(z.image_prefix(d));
    return flag;
}

Perm perm_of_flag(std::span<const Mask> flag) {
    const int n = static_cast<int>(flag.size());
    std::vector<int> img(static_cast<std::size_t>(n));
    Mask prev = 0;
    for (int d = 1; d <= n; ++d) {
        Mask cur = flag[static_cast<std::size_t>(d) - 1];
        Mask added = cur & ~prev;
        if (mask_size(cur) != d || mask_size(added) != 1)
            throw invalid_input("perm_of_flag: not a complete flag chain");
        img[static_cast<std::size_t>(d) - 1] = mask_elements(added).front();
        prev = cur;
    }
    if (prev != full_mask(n)) throw invalid_input("perm_of_flag: top of chain is not [n]");
    return Perm(std::move(img));
}

FlagMatroid interval_flag_matroid(const Perm& u, const Perm& v) {
    const int n = u.n();
    const std::vector<Perm> zs = bruhat_interval(u, v);
    FlagMatroid fm;
    for (int d = 1; d <= n; ++d) {
        std::set<Mask> bases;
        for (const Perm& z : zs) bases.insert(z.image_prefix(d));
        fm.constituents.emplace_back(n, std::vector<Mask>(bases.begin(), bases.end()));
    }
    return fm;
}

namespace {

// Gale order on complete flags: F <=_j G iff F_d <=_j G_d for every rank d.
bool flag_gale_leq(const Perm& a, const Perm& b, int j, int n) {
    for (int d = 1; d < n; ++d)
        if (!gale_leq(a.image_prefix(d), b.image_prefix(d), j, n)) return false;
    return true;
}

}  // namespace

std::vector<Necklace> constituent_necklaces(const Perm& u, const Perm& v) {
    const int n = u.n();
    const std::vector<Perm> zs = bruhat_interval(u, v);

    // reassemble z^{(j)} from the per-rank Gale minima ...
    std::vector<Perm> gale_min_perm;
    gale_min_perm.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        std::vector<Mask> flag;
        flag.reserve(static_cast<std::size_t>(n));
        for (int d = 1; d <= n; ++d) {
            std::vector<Mask> layer;
            layer.reserve(zs.size());
            for (const Perm& z : zs) layer.push_back(z.image_prefix(d));
            std::sort(layer.begin(), layer.end());
            layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
            flag.push_back(gale_min_checked(layer, j, n));
        }
        Perm zj = perm_of_flag(flag);
        if (!bruhat_leq(u, zj) || !bruhat_leq(zj, v))
            throw internal_error("reassembled Gale-minimal flag left the interval");
        // ... and validate against a direct search over the interval
        for (const Perm& z : zs)
            if (!flag_gale_leq(zj, z, j, n))
                throw internal_error("reassembled flag is not the Gale minimum of the interval");
        gale_min_perm.push_back(std::move(zj));
    }

    std::vector<Necklace> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int d = 1; d <= n; ++d) {
        Necklace nk{n, d, {}};
        nk.sets.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) nk.sets.push_back(gale_min_perm[static_cast<std::size_t>(i) - 1].image_prefix(d));
        out.push_back(std::move(nk));
    }
    return out;
}

std::pair<Perm, Perm> envelope_of_perms(std::span<const Perm> perms) {
    if (perms.empty()) throw invalid_input("envelope of an empty set");
    const Perm* lo = nullptr;
    const Perm* hi = nullptr;
    for (const Perm& z : perms) {
        bool is_lo = true, is_hi = true;
        for (const Perm& w : perms) {
            if (!bruhat_leq(z, w)) is_lo = false;
            if (!bruhat_leq(w, z)) is_hi = false;
            if (!is_lo && !is_hi) break;
        }
        if (is_lo) lo = &z;
        if (is_hi) hi = &z;
    }
    if (!lo || !hi)
        throw invalid_input("flag collection has no Bruhat minimum/maximum; not a flag matroid");
    return {*lo, *hi};
}

std::pair<Perm, Perm> envelope(const FlagMatroid& fm) {
    if (!fm.complete()) throw invalid_input("envelope needs a complete flag matroid");
    std::vector<Perm> perms;
    for (const auto& flag : flags_of(fm.constituents)) perms.push_back(perm_of_flag(flag));
    return envelope_of_perms(perms);
}

bool is_interval_flag_matroid(const FlagMatroid& fm) {
    auto [u, v] = envelope(fm);
    const FlagMatroid ifm = interval_flag_matroid(u, v);
    if (ifm.constituents.size() != fm.constituents.size()) return false;
    for (std::size_t i = 0; i < fm.constituents.size(); ++i)
        if (!ifm.constituents[i].same_as(fm.constituents[i])) return false;
    return true;
}

std::pair<Perm, Perm> uv_from_flag_positroid(std::span<const Matroid> seq) {
    if (seq.empty()) throw invalid_input("empty sequence");
    const int n = seq.front().n();
    if (static_cast<int>(seq.size()) != n) throw invalid_input("uv_from_flag_positroid needs ranks 1..n");
    if (!is_flag_positroid_consecutive(seq)) throw invalid_input("not a complete flag positroid");

    std::vector<int> uimg(static_cast<std::size_t>(n)), vimg(static_cast<std::size_t>(n));
    Mask prev_min = 0, prev_max = 0;
    for (int d = 1; d <= n; ++d) {
        Mask bmin = gale_min_checked(seq[static_cast<std::size_t>(d) - 1].bases(), 1, n);
        Mask bmax = gale_max_checked(seq[static_cast<std::size_t>(d) - 1].bases(), 1, n);
        Mask du = bmin & ~prev_min, dv = bmax & ~prev_max;
        if (mask_size(du) != 1 || mask_size(dv) != 1)
            throw internal_error("Gale-extremal bases of a flag positroid do not chain");
        uimg[static_cast<std::size_t>(d) - 1] = mask_elements(du).front();
        vimg[static_cast<std::size_t>(d) - 1] = mask_elements(dv).front();
        prev_min = bmin;
        prev_max = bmax;
    }
    return {Perm(std::move(uimg)), Perm(std::move(vimg))};
}

}  // namespace flagpos
