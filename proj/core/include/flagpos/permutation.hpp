#pragma once

#include <compare>
#include <string>
#include <vector>

#include "flagpos/combinat.hpp"

namespace flagpos {

/** Permutation of [n] in 1-based one-line notation. */
class Perm {
  public:
    Perm() = default;
    explicit Perm(std::vector<int> one_line);

    static Perm identity(int n);
    static Perm longest(int n);  // w0 = (n, n-1, ..., 1)

    int n() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i - 1]; }
    const std::vector<int>& one_line() const { return img_; }

    Perm inverse() const;
    Perm compose(const Perm& other) const;  // (this o other)(i) = this(other(i))

    /** Image z([d]) = {z(1),...,z(d)} as a subset mask. */
    Mask image_prefix(int d) const;

    int length() const;  // number of inversions

    std::string str() const;  // "2413"-style for n <= 9, else comma separated

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

  private:
    std::vector<int> img_;
};

/** Bruhat order via the tableau criterion on sorted prefixes. */
bool bruhat_leq(const Perm& u, const Perm& v);

/** All z with u <= z <= v; throws invalid_input when u is not below v. */
std::vector<Perm> bruhat_interval(const Perm& u, const Perm& v);

std::vector<Perm> all_perms(int n);

}  // namespace flagpos
