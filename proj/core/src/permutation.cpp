#include "flagpos/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace flagpos {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
    const int n = static_cast<int>(img_.size());
    if (n > kMaxGround) throw invalid_input("permutation too large");
    Mask seen = 0;
    for (int v : img_) {
        if (v < 1 || v > n || mask_has(seen, v)) throw invalid_input("not a permutation of 1..n");
        seen |= mask_bit(v);
    }
}

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Perm(std::move(v));
}

Perm Perm::longest(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    return Perm(std::move(v));
}

Perm Perm::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 1; i <= n(); ++i) inv[img_[i - 1] - 1] = i;
    return Perm(std::move(inv));
}

Perm Perm::compose(const Perm& other) const {
    if (n() != other.n()) throw invalid_input("composing permutations of different sizes");
    std::vector<int> out(img_.size());
    for (int i = 1; i <= n(); ++i) out[i - 1] = (*this)(other(i));
    return Perm(std::move(out));
}

Mask Perm::image_prefix(int d) const {
    Mask m = 0;
    for (int i = 0; i < d; ++i) m |= mask_bit(img_[i]);
    return m;
}

int Perm::length() const {
    int inv = 0;
    for (int i = 0; i < n(); ++i)
        for (int j = i + 1; j < n(); ++j)
            if (img_[i] > img_[j]) ++inv;
    return inv;
}

std::string Perm::str() const {
    std::string s;
    for (int i = 0; i < n(); ++i) {
        if (n() > 9 && i) s += ",";
        s += std::to_string(img_[i]);
    }
    return s;
}

bool bruhat_leq(const Perm& u, const Perm& v) {
    if (u.n() != v.n()) throw invalid_input("bruhat_leq: size mismatch");
    const int n = u.n();
    // Tableau criterion: sorted u([d]) is componentwise <= sorted v([d]) for
    // every d.  Prefixes are maintained incrementally by insertion.
    std::vector<int> su, sv;
    su.reserve(n);
    sv.reserve(n);
    for (int d = 1; d < n; ++d) {
        su.insert(std::upper_bound(su.begin(), su.end(), u(d)), u(d));
        sv.insert(std::upper_bound(sv.begin(), sv.end(), v(d)), v(d));
        for (int l = 0; l < d; ++l)
            if (su[l] > sv[l]) return false;
    }
    return true;
}

std::vector<Perm> bruhat_interval(const Perm& u, const Perm& v) {
    if (!bruhat_leq(u, v)) throw invalid_input("bruhat_interval: u is not below v");
    std::vector<Perm> out;
    for (const Perm& z : all_perms(u.n()))
        if (bruhat_leq(u, z) && bruhat_leq(z, v)) out.push_back(z);
    return out;
}

std::vector<Perm> all_perms(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::vector<Perm> out;
    do {
        out.emplace_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

}  // namespace flagpos
