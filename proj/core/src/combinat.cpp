#include "flagpos/combinat.hpp"

#include <array>
#include <string>

namespace flagpos {

std::vector<int> mask_elements(Mask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(mask_size(m)));
    while (m) {
        int b = std::countr_zero(m);
        out.push_back(b + 1);
        m &= m - 1;
    }
    return out;
}

Mask mask_of(const std::vector<int>& elems, int n) {
    Mask m = 0;
    for (int e : elems) {
        if (e < 1 || e > n) throw invalid_input("element out of range 1..n");
        Mask b = mask_bit(e);
        if (m & b) throw invalid_input("repeated element in subset");
        m |= b;
    }
    return m;
}

namespace {

constexpr int kBinomMax = 65;

const std::array<std::array<std::uint64_t, kBinomMax>, kBinomMax>& binom_table() {
    static const auto table = [] {
        std::array<std::array<std::uint64_t, kBinomMax>, kBinomMax> t{};
        for (int n = 0; n < kBinomMax; ++n) {
            t[n][0] = 1;
            for (int k = 1; k <= n; ++k) {
                std::uint64_t a = t[n - 1][k - 1];
                std::uint64_t b = (k < kBinomMax) ? t[n - 1][k] : 0;
                t[n][k] = a + b;
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

std::uint64_t binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return binom_table()[n][k];
}

std::vector<Mask> combinations(int n, int k) {
    std::vector<Mask> out;
    if (k < 0 || k > n) return out;
    out.reserve(binom(n, k));
    if (k == 0) {
        out.push_back(0);
        return out;
    }
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        Mask m = 0;
        for (int e : c) m |= mask_bit(e);
        out.push_back(m);
        // next lex combination
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + 1 + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

std::size_t lex_rank(int n, int k, Mask m) {
    if (mask_size(m) != k) throw invalid_input("lex_rank: wrong cardinality");
    std::size_t rank = 0;
    int prev = 0, t = 1;
    for (int e : mask_elements(m)) {
        for (int c = prev + 1; c < e; ++c) rank += binom(n - c, k - t);
        prev = e;
        ++t;
    }
    return rank;
}

Mask lex_unrank(int n, int k, std::size_t idx) {
    Mask m = 0;
    int c = 1;
    for (int t = 1; t <= k; ++t) {
        while (true) {
            std::uint64_t block = binom(n - c, k - t);
            if (idx < block) break;
            idx -= block;
            ++c;
        }
        m |= mask_bit(c);
        ++c;
    }
    if (idx != 0) throw invalid_input("lex_unrank: index out of range");
    return m;
}

std::string subset_to_string(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : mask_elements(m)) {
        if (!first) s += ",";
        s += std::to_string(e);
        first = false;
    }
    s += "}";
    return s;
}

}  // namespace flagpos
