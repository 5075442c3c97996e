#pragma once

#include <string>
#include <vector>

#include "flagpos/json_io.hpp"

namespace flagpos {

/**
 * Regression harness recomputing the library's worked examples, the two-cell
 * hypersimplex/permutohedron pictures, and the catalogued Perm4 subdivisions
 * from their printed height functions, against golden JSON files.
 */

struct ReproLine {
    std::string label;
    bool pass = false;
    std::string detail;  // diff text when failing
};

struct ReproReport {
    std::vector<ReproLine> lines;
    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
};

/** Cell label conventions relating a cell's flag envelope (u,v) to a printed P_{a,b}. */
enum class LabelConvention { kTwisted, kTwistedInverse, kUntwisted, kUntwistedInverse };

std::string to_string(LabelConvention c);
LabelConvention label_convention_from_string(const std::string& s);

ReproReport reproduce_figure1(const Json& golden);
ReproReport reproduce_table(const Json& golden, bool check_finest, int jobs);
ReproReport reproduce_examples(const Json& golden);

/** Loads a golden file from the data directory. */
Json load_golden(const std::string& dir, const std::string& name);

/** Default golden directory: FLAGPOS_DATA_DIR env var or a relative fallback. */
std::string default_golden_dir();

}  // namespace flagpos
