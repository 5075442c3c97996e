#include "flagpos/reproduce.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "flagpos/flag_geometry.hpp"
#include "flagpos/parallel.hpp"

namespace flagpos {

std::string to_string(LabelConvention c) {
    switch (c) {
        case LabelConvention::kTwisted: return "twisted";
        case LabelConvention::kTwistedInverse: return "twisted_inverse";
        case LabelConvention::kUntwisted: return "untwisted";
        case LabelConvention::kUntwistedInverse: return "untwisted_inverse";
    }
    return "?";
}

LabelConvention label_convention_from_string(const std::string& s) {
    if (s == "twisted") return LabelConvention::kTwisted;
    if (s == "twisted_inverse") return LabelConvention::kTwistedInverse;
    if (s == "untwisted") return LabelConvention::kUntwisted;
    if (s == "untwisted_inverse") return LabelConvention::kUntwistedInverse;
    throw invalid_input("unknown label convention: " + s);
}

namespace {

using LabelPair = std::pair<std::vector<int>, std::vector<int>>;

std::pair<Perm, Perm> apply_convention(const Perm& u, const Perm& v, LabelConvention c) {
    const Perm w0 = Perm::longest(u.n());
    switch (c) {
        case LabelConvention::kTwisted: return {u, v};
        case LabelConvention::kTwistedInverse: return {u.inverse(), v.inverse()};
        case LabelConvention::kUntwisted: return {w0.compose(v.inverse()), w0.compose(u.inverse())};
        case LabelConvention::kUntwistedInverse: return {v.compose(w0), u.compose(w0)};
    }
    throw internal_error("unreachable");
}

std::string labels_to_text(const std::multiset<LabelPair>& labels) {
    std::ostringstream os;
    for (const auto& [u, v] : labels) {
        os << " P[";
        for (int x : u) os << x;
        os << ",";
        for (int x : v) os << x;
        os << "]";
    }
    return os.str();
}

struct TableRow {
    FlagTropVec mu;
    std::multiset<LabelPair> printed;
    std::vector<int> fvector;
};

TableRow parse_row(const Json& j, const std::string& ptr) {
    TableRow row;
    const Json& h = j.at("heights");
    if (!h.is_array() || h.size() != 3) throw json_error("heights must hold three rank blocks", ptr + "/heights");
    const int n = 4;
    for (int r = 1; r <= 3; ++r) {
        const Json& block = h[static_cast<std::size_t>(r - 1)];
        const auto subsets = combinations(n, r);
        if (!block.is_array() || block.size() != subsets.size())
            throw json_error("height block has the wrong length", ptr + "/heights");
        std::vector<TropVal> coords;
        coords.reserve(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            coords.push_back(TropVal::of(make_rat(block[i].get<long>())));
        row.mu.mus.emplace_back(n, r, std::move(coords));
    }
    row.mu.mus.emplace_back(n, n, std::vector<TropVal>{TropVal::of(0)});
    for (const Json& cell : j.at("cells")) {
        LabelPair lp{cell.at(0).get<std::vector<int>>(), cell.at(1).get<std::vector<int>>()};
        row.printed.insert(std::move(lp));
    }
    row.fvector = j.at("fvector").get<std::vector<int>>();
    return row;
}

struct ComputedRow {
    std::vector<std::pair<Perm, Perm>> envelopes;  // one per cell
    std::vector<int> fvector;
    std::vector<std::vector<int>> cells;  // vertex-index lists, canonical order
    bool cells_are_intervals = true;
    bool cells_certified = true;
};

ComputedRow compute_row(const FlagTropVec& mu) {
    ComputedRow out;
    MuSubdivision ms = subdivision_from_mu(mu);
    out.cells = ms.sub.cells;
    out.fvector = subdivision_fvector(ms.sub);
    for (const auto& cell : ms.sub.cells) {
        std::vector<Perm> perms;
        perms.reserve(cell.size());
        for (int vid : cell) perms.push_back(perm_of_flag(ms.fp.flags[static_cast<std::size_t>(vid)]));
        auto [u, v] = envelope_of_perms(perms);
        const auto cell_fm = face_flag_matroid(ms.fp, cell);
        const FlagMatroid ifm = interval_flag_matroid(u, v);
        for (std::size_t i = 0; i < cell_fm.size(); ++i)
            if (!ifm.constituents[i].same_as(cell_fm[i])) out.cells_are_intervals = false;
        if (!flag_positroid_certified(cell_fm)) out.cells_certified = false;
        out.envelopes.emplace_back(std::move(u), std::move(v));
    }
    return out;
}

std::multiset<LabelPair> labels_under(const ComputedRow& row, LabelConvention conv) {
    std::multiset<LabelPair> out;
    for (const auto& [u, v] : row.envelopes) {
        auto [a, b] = apply_convention(u, v, conv);
        out.insert({a.one_line(), b.one_line()});
    }
    return out;
}

}  // namespace

ReproReport reproduce_table(const Json& golden, bool check_finest, int jobs) {
    ReproReport rep;
    const LabelConvention conv = label_convention_from_string(golden.at("label_convention").get<std::string>());
    const bool derive = golden.value("derive_convention", false);
    const Json& jrows = golden.at("rows");
    std::vector<TableRow> rows;
    for (std::size_t i = 0; i < jrows.size(); ++i) rows.push_back(parse_row(jrows[i], "/rows/" + std::to_string(i)));

    std::vector<ComputedRow> computed(rows.size());
    parallel_for(rows.size(), jobs, [&](std::size_t i) { computed[i] = compute_row(rows[i].mu); });

    if (derive && !rows.empty()) {
        std::vector<LabelConvention> matching;
        for (LabelConvention c : {LabelConvention::kTwisted, LabelConvention::kTwistedInverse,
                                  LabelConvention::kUntwisted, LabelConvention::kUntwistedInverse}) {
            if (labels_under(computed[0], c) == rows[0].printed) matching.push_back(c);
        }
        ReproLine line;
        line.label = "label convention determined on row 1";
        line.pass = matching.size() == 1 && matching.front() == conv;
        if (!line.pass) {
            line.detail = "matched conventions:";
            for (auto c : matching) line.detail += " " + to_string(c);
            line.detail += "; recorded: " + to_string(conv);
        } else {
            line.detail = to_string(conv);
        }
        rep.lines.push_back(std::move(line));
    }

    for (std::size_t i = 0; i < rows.size(); ++i) {
        ReproLine line;
        line.label = "row " + std::to_string(i + 1);
        const auto got = labels_under(computed[i], conv);
        bool ok = got == rows[i].printed;
        std::string detail;
        if (!ok) detail += "cells: got" + labels_to_text(got) + " expected" + labels_to_text(rows[i].printed) + "; ";
        if (computed[i].fvector != rows[i].fvector) {
            ok = false;
            detail += "f-vector mismatch; ";
        }
        if (!computed[i].cells_are_intervals) {
            ok = false;
            detail += "a cell is not the flag matroid of its envelope; ";
        }
        if (!computed[i].cells_certified) {
            ok = false;
            detail += "a cell failed flag positroid certification; ";
        }
        if (check_finest) {
            for (const auto& [u, v] : computed[i].envelopes)
                if (v.length() - u.length() != 3) {
                    ok = false;
                    detail += "cell with length gap != 3; ";
                }
        }
        line.pass = ok;
        line.detail = detail;
        rep.lines.push_back(std::move(line));
    }

    // subdivisions must be pairwise distinct across rows
    std::set<std::vector<std::vector<int>>> distinct;
    for (const auto& c : computed) distinct.insert(c.cells);
    ReproLine dline;
    dline.label = "rows pairwise distinct";
    dline.pass = distinct.size() == computed.size();
    rep.lines.push_back(std::move(dline));
    return rep;
}

namespace {

std::set<std::set<std::vector<int>>> cells_as_subset_families(const MuSubdivision& ms) {
    // single-rank case: each vertex corresponds to one basis
    std::set<std::set<std::vector<int>>> out;
    for (const auto& cell : ms.sub.cells) {
        std::set<std::vector<int>> fam;
        for (int vid : cell) fam.insert(mask_elements(ms.fp.flags[static_cast<std::size_t>(vid)].front()));
        out.insert(std::move(fam));
    }
    return out;
}

std::set<std::set<std::vector<int>>> cells_as_point_families(const MuSubdivision& ms) {
    std::set<std::set<std::vector<int>>> out;
    for (const auto& cell : ms.sub.cells) {
        std::set<std::vector<int>> fam;
        for (int vid : cell) {
            std::vector<int> coords;
            for (const Rat& q : ms.fp.vertices[static_cast<std::size_t>(vid)])
                coords.push_back(static_cast<int>(q.get_num().get_si()));
            fam.insert(std::move(coords));
        }
        out.insert(std::move(fam));
    }
    return out;
}

std::set<std::set<std::vector<int>>> family_from_json(const Json& j) {
    std::set<std::set<std::vector<int>>> out;
    for (const Json& cell : j) {
        std::set<std::vector<int>> fam;
        for (const Json& v : cell) fam.insert(v.get<std::vector<int>>());
        out.insert(std::move(fam));
    }
    return out;
}

void push(ReproReport& rep, const std::string& label, bool pass, const std::string& detail = "") {
    rep.lines.push_back({label, pass, detail});
}

}  // namespace

ReproReport reproduce_figure1(const Json& golden) {
    ReproReport rep;

    {  // left panel: two square pyramids inside the octahedron
        const TropVec w = tropvec_from_json(golden.at("left").at("weight"), "/left/weight");
        const int n = 4;
        auto val = [&](const std::vector<int>& s) { return w.at(mask_of(s, n)); };
        const bool ineq = val({1, 3}) + val({2, 4}) == val({1, 4}) + val({2, 3}) &&
                          val({1, 3}) + val({2, 4}) < val({1, 2}) + val({3, 4});
        push(rep, "figure1 left weight satisfies mu13+mu24 = mu14+mu23 < mu12+mu34", ineq);

        FlagTropVec mu;
        mu.mus.push_back(w);
        MuSubdivision ms = subdivision_from_mu(mu);
        push(rep, "figure1 left cells", cells_as_subset_families(ms) == family_from_json(golden.at("left").at("cells")));
        push(rep, "figure1 left cells are positroid polytopes", all_cells_flag_positroid(ms));
    }

    {  // right panel: hexagon split into two Bruhat interval quadrilaterals
        const FlagTropVec mu = flagvec_from_json(golden.at("right").at("mu"), "/right/mu");
        auto v1 = [&](int e) { return mu.by_rank(1).at(mask_bit(e)); };
        auto v2 = [&](int a, int b) { return mu.by_rank(2).at(mask_bit(a) | mask_bit(b)); };
        const bool ineq = v1(2) + v2(1, 3) == v1(1) + v2(2, 3) && v1(2) + v2(1, 3) < v1(3) + v2(1, 2);
        push(rep, "figure1 right weight satisfies mu2+mu13 = mu1+mu23 < mu3+mu12", ineq);

        MuSubdivision ms = subdivision_from_mu(mu);
        push(rep, "figure1 right cells", cells_as_point_families(ms) == family_from_json(golden.at("right").at("cells")));
        push(rep, "figure1 right cells are flag positroid polytopes", all_cells_flag_positroid(ms));
    }
    return rep;
}

ReproReport reproduce_examples(const Json& golden) {
    ReproReport rep;

    {  // the rank-(1..4) interval example on [4]
        const Json& jx = golden.at("interval_example");
        const Perm u = perm_from_json(jx.at("u"), "/interval_example/u");
        const Perm v = perm_from_json(jx.at("v"), "/interval_example/v");
        const int n = u.n();

        std::set<std::vector<int>> want_elems;
        for (const Json& e : jx.at("elements")) want_elems.insert(e.get<std::vector<int>>());
        std::set<std::vector<int>> got_elems;
        for (const Perm& z : bruhat_interval(u, v)) got_elems.insert(z.one_line());
        push(rep, "interval elements", got_elems == want_elems);

        const FlagMatroid fm = interval_flag_matroid(u, v);
        bool bases_ok = true;
        const Json& jb = jx.at("constituent_bases");
        for (int d = 1; d <= n; ++d) {
            std::set<std::vector<int>> want;
            for (const Json& b : jb[static_cast<std::size_t>(d - 1)]) want.insert(b.get<std::vector<int>>());
            std::set<std::vector<int>> got;
            for (Mask b : fm.constituents[static_cast<std::size_t>(d - 1)].bases()) got.insert(mask_elements(b));
            bases_ok = bases_ok && want == got;
        }
        push(rep, "constituent bases", bases_ok);

        const auto necks = constituent_necklaces(u, v);
        bool necks_ok = true;
        const Json& jn = jx.at("necklaces");
        for (int d = 1; d <= n; ++d) {
            const Necklace want = necklace_from_json(jn[static_cast<std::size_t>(d - 1)], "");
            necks_ok = necks_ok && necks[static_cast<std::size_t>(d - 1)] == want;
            necks_ok = necks_ok && necklace_of(fm.constituents[static_cast<std::size_t>(d - 1)]) == want;
        }
        push(rep, "constituent necklaces (both routes)", necks_ok);

        std::set<QVec> got_tw;
        for (const QVec& p : twisted_bip_vertices(u, v)) got_tw.insert(p);
        std::set<QVec> want_tw;
        for (const Json& p : jx.at("twisted_vertices")) {
            QVec q;
            for (const Json& x : p) q.emplace_back(x.get<long>());
            want_tw.insert(q);
        }
        push(rep, "twisted BIP vertices", got_tw == want_tw);

        const Perm u2 = perm_from_json(jx.at("untwisted_equal").at("u"), "");
        const Perm v2 = perm_from_json(jx.at("untwisted_equal").at("v"), "");
        std::set<QVec> plain;
        for (const QVec& p : bip_vertices(u2, v2)) plain.insert(p);
        push(rep, "twisted polytope equals relabeled plain interval polytope", got_tw == plain);

        auto [eu, ev] = envelope(fm);
        push(rep, "envelope roundtrip", eu == u && ev == v && is_interval_flag_matroid(fm));

        auto [ru, rv] = uv_from_flag_positroid(fm.constituents);
        push(rep, "interval recovered from Gale-extremal bases", ru == u && rv == v);
    }

    {  // adjacent-rank quotient example on [6]
        const Json& jq = golden.at("quotient_example");
        const Necklace bad = necklace_from_json(jq.at("low_fail"), "/quotient_example/low_fail");
        const Necklace good = necklace_from_json(jq.at("low_pass"), "/quotient_example/low_pass");
        const Necklace high = necklace_from_json(jq.at("high"), "/quotient_example/high");
        const auto rbad = quotient_test_necklaces(bad, high);
        push(rep, "quotient example fails condition 3", !rbad.ok && rbad.failed_condition == 3);
        const auto rgood = quotient_test_necklaces(good, high);
        push(rep, "corrected quotient example passes", rgood.ok);
        if (rgood.ok) {
            const auto [k1, k2] = delete_contract_necklaces(pair_to_necklace(good, high));
            push(rep, "construction roundtrip is the identity", k1 == good && k2 == high);
        }
    }

    {  // rank-(1,2) pair on [3]: positroid constituents, yet not a flag positroid
        const Json& je = golden.at("notreal");
        const Matroid m1 = matroid_from_json(je.at("low"), "/notreal/low");
        const Matroid m2 = matroid_from_json(je.at("high"), "/notreal/high");
        push(rep, "notreal: constituents are positroids forming a flag matroid",
             is_positroid(m1) && is_positroid(m2) && is_quotient(m1, m2));
        std::vector<Matroid> seq{m1, m2};
        push(rep, "notreal: fails the relation route", !pom_check(seq));
        push(rep, "notreal: fails the necklace route", !quotient_test(m1, m2).ok);
    }

    {  // ranks (1,3) on [4]: no rank-2 positroid completes the pair
        const Json& jc = golden.at("cantcomplete");
        const Matroid low = matroid_from_json(jc.at("low"), "/cantcomplete/low");
        const Matroid high = matroid_from_json(jc.at("high"), "/cantcomplete/high");
        int witnesses = 0;
        for (const Necklace& nk : enumerate_necklaces(low.n(), 2)) {
            const Matroid mid = positroid_of(nk);
            if (quotient_test(low, mid).ok && quotient_test(mid, high).ok) ++witnesses;
        }
        push(rep, "cantcomplete: no intermediate rank-2 positroid", witnesses == 0,
             witnesses ? "found " + std::to_string(witnesses) : "");
    }

    {  // ranks (1,2,3) on [3]: flag positroid with no rank-3 preimage on [5]
        const Json& jl = golden.at("cantlift");
        const Matroid m1 = matroid_from_json(jl.at("m1"), "/cantlift/m1");
        const Matroid m2 = matroid_from_json(jl.at("m2"), "/cantlift/m2");
        const Matroid m3 = matroid_from_json(jl.at("m3"), "/cantlift/m3");
        std::vector<Matroid> seq{m1, m2, m3};
        push(rep, "cantlift: the triple is a flag positroid", is_flag_positroid_consecutive(seq));
        const Mask b4 = mask_bit(4), b5 = mask_bit(5);
        int witnesses = 0;
        for (const Necklace& nk : enumerate_necklaces(5, 3)) {
            const Matroid mp = positroid_of(nk);
            if (mp.rank_of(b4 | b5) != 2) continue;  // contraction by {4,5} must reach rank 1
            if (!mp.contracted(b4 | b5).relabeled_dense().same_as(m1)) continue;
            if (!mp.deleted(b4).contracted(b5).relabeled_dense().same_as(m2)) continue;
            if (!mp.deleted(b4 | b5).relabeled_dense().same_as(m3)) continue;
            ++witnesses;
        }
        push(rep, "cantlift: no rank-3 positroid on [5] matches the three minors", witnesses == 0,
             witnesses ? "found " + std::to_string(witnesses) : "");
    }
    return rep;
}

Json load_golden(const std::string& dir, const std::string& name) {
    const std::string path = dir + "/" + name + ".json";
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open golden file " + path);
    Json j;
    in >> j;
    return j;
}

std::string default_golden_dir() {
    if (const char* env = std::getenv("FLAGPOS_DATA_DIR")) return env;
#ifdef FLAGPOS_DATA_DIR_DEFAULT
    return FLAGPOS_DATA_DIR_DEFAULT;
#else
    return "data/golden/v1";
#endif
}

}  // namespace flagpos
