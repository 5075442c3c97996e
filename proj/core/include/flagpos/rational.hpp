#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "flagpos/errors.hpp"

namespace flagpos {

/** Exact rational scalar.  All geometry and all tropical values use this. */
using Rat = mpq_class;

using QVec = std::vector<Rat>;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw invalid_input("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/** Parses "p", "-p" or "p/q".  Throws invalid_input on malformed text. */
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw invalid_input("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) throw invalid_input("malformed rational literal: " + s);
    if (q.get_den() == 0) throw invalid_input("rational with zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace flagpos
