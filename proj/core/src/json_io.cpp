#include "flagpos/json_io.hpp"

#include <algorithm>

namespace flagpos {

namespace {

const Json& need(const Json& j, const char* key, const std::string& ptr) {
    if (!j.is_object()) throw json_error("expected an object", ptr);
    auto it = j.find(key);
    if (it == j.end()) throw json_error(std::string("missing field '") + key + "'", ptr);
    return *it;
}

int need_int(const Json& j, const std::string& ptr) {
    if (!j.is_number_integer()) throw json_error("expected an integer", ptr);
    return j.get<int>();
}

std::string idx(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }

}  // namespace

Mask subset_from_json(const Json& j, int n, const std::string& ptr) {
    if (!j.is_array()) throw json_error("expected an array of elements", ptr);
    std::vector<int> elems;
    for (std::size_t i = 0; i < j.size(); ++i) elems.push_back(need_int(j[i], idx(ptr, i)));
    try {
        return mask_of(elems, n);
    } catch (const invalid_input& e) {
        throw json_error(e.what(), ptr);
    }
}

Json subset_to_json(Mask m) { return Json(mask_elements(m)); }

Matroid matroid_from_json(const Json& j, const std::string& ptr) {
    const int n = need_int(need(j, "n", ptr), ptr + "/n");
    const int rank = need_int(need(j, "rank", ptr), ptr + "/rank");
    const Json& jb = need(j, "bases", ptr);
    if (!jb.is_array() || jb.empty()) throw json_error("expected a nonempty array of bases", ptr + "/bases");
    std::vector<Mask> bases;
    for (std::size_t i = 0; i < jb.size(); ++i) {
        Mask b = subset_from_json(jb[i], n, idx(ptr + "/bases", i));
        if (mask_size(b) != rank) throw json_error("basis cardinality differs from rank", idx(ptr + "/bases", i));
        bases.push_back(b);
    }
    try {
        return Matroid(n, std::move(bases));
    } catch (const invalid_input& e) {
        throw json_error(e.what(), ptr);
    }
}

Json matroid_to_json(const Matroid& m) {
    Json j;
    j["n"] = m.n();
    j["rank"] = m.rank();
    Json bases = Json::array();
    for (Mask b : m.bases()) bases.push_back(subset_to_json(b));
    j["bases"] = bases;
    return j;
}

Necklace necklace_from_json(const Json& j, const std::string& ptr) {
    Necklace nk;
    nk.n = need_int(need(j, "n", ptr), ptr + "/n");
    nk.d = need_int(need(j, "d", ptr), ptr + "/d");
    const Json& js = need(j, "sets", ptr);
    if (!js.is_array()) throw json_error("expected an array of subsets", ptr + "/sets");
    if (static_cast<int>(js.size()) != nk.n) throw json_error("necklace needs exactly n entries", ptr + "/sets");
    for (std::size_t i = 0; i < js.size(); ++i) {
        Mask s = subset_from_json(js[i], nk.n, idx(ptr + "/sets", i));
        if (mask_size(s) != nk.d) throw json_error("entry cardinality differs from d", idx(ptr + "/sets", i));
        nk.sets.push_back(s);
    }
    return nk;
}

Json necklace_to_json(const Necklace& nk) {
    Json j;
    j["n"] = nk.n;
    j["d"] = nk.d;
    Json sets = Json::array();
    for (Mask s : nk.sets) sets.push_back(subset_to_json(s));
    j["sets"] = sets;
    return j;
}

TropVec tropvec_from_json(const Json& j, const std::string& ptr) {
    const int n = need_int(need(j, "n", ptr), ptr + "/n");
    const int r = need_int(need(j, "r", ptr), ptr + "/r");
    if (n < 1 || n > kMaxGround || r < 0 || r > n) throw json_error("invalid (n, r)", ptr);
    const Json& jc = need(j, "coords", ptr);
    if (!jc.is_object()) throw json_error("expected an object keyed by sorted subsets", ptr + "/coords");
    std::vector<TropVal> coords(binom(n, r), TropVal::inf());
    for (auto it = jc.begin(); it != jc.end(); ++it) {
        const std::string cptr = ptr + "/coords/" + it.key();
        // parse "1,3" style keys
        std::vector<int> elems;
        const std::string& key = it.key();
        std::size_t pos = 0;
        while (pos < key.size()) {
            std::size_t next = key.find(',', pos);
            if (next == std::string::npos) next = key.size();
            try {
                elems.push_back(std::stoi(key.substr(pos, next - pos)));
            } catch (...) {
                throw json_error("malformed subset key", cptr);
            }
            pos = next + 1;
        }
        if (r == 0 && !key.empty() && key != "") throw json_error("rank-0 key must be empty", cptr);
        Mask m;
        try {
            m = mask_of(elems, n);
        } catch (const invalid_input& e) {
            throw json_error(e.what(), cptr);
        }
        if (mask_size(m) != r) throw json_error("subset key cardinality differs from r", cptr);
        if (!it.value().is_string()) throw json_error("coordinate must be \"p/q\" or \"inf\"", cptr);
        const std::string val = it.value().get<std::string>();
        if (val == "inf")
            coords[lex_rank(n, r, m)] = TropVal::inf();
        else {
            try {
                coords[lex_rank(n, r, m)] = TropVal::of(rat_from_string(val));
            } catch (const invalid_input& e) {
                throw json_error(e.what(), cptr);
            }
        }
    }
    try {
        return TropVec(n, r, std::move(coords));
    } catch (const invalid_input& e) {
        throw json_error(e.what(), ptr);
    }
}

Json tropvec_to_json(const TropVec& w) {
    Json j;
    j["n"] = w.n();
    j["r"] = w.r();
    Json coords = Json::object();
    std::size_t i = 0;
    for (Mask s : combinations(w.n(), w.r())) {
        std::string key;
        for (int e : mask_elements(s)) {
            if (!key.empty()) key += ",";
            key += std::to_string(e);
        }
        const TropVal& t = w.coords()[i++];
        coords[key] = t.finite ? rat_to_string(t.v) : "inf";
    }
    j["coords"] = coords;
    return j;
}

FlagTropVec flagvec_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw json_error("expected a nonempty array of valuated vectors", ptr);
    FlagTropVec mu;
    for (std::size_t i = 0; i < j.size(); ++i) mu.mus.push_back(tropvec_from_json(j[i], idx(ptr, i)));
    for (std::size_t i = 0; i < mu.mus.size(); ++i) {
        if (mu.mus[i].n() != mu.mus[0].n()) throw json_error("constituents live on different ground sets", idx(ptr, i));
        if (i > 0 && mu.mus[i].r() <= mu.mus[i - 1].r()) throw json_error("ranks must strictly increase", idx(ptr, i));
    }
    return mu;
}

Json flagvec_to_json(const FlagTropVec& mu) {
    Json j = Json::array();
    for (const TropVec& w : mu.mus) j.push_back(tropvec_to_json(w));
    return j;
}

Perm perm_from_json(const Json& j, const std::string& ptr) {
    if (!j.is_array() || j.empty()) throw json_error("expected a one-line permutation array", ptr);
    std::vector<int> img;
    for (std::size_t i = 0; i < j.size(); ++i) img.push_back(need_int(j[i], idx(ptr, i)));
    try {
        return Perm(std::move(img));
    } catch (const invalid_input& e) {
        throw json_error(e.what(), ptr);
    }
}

Json perm_to_json(const Perm& z) { return Json(z.one_line()); }

std::vector<Matroid> matroid_sequence_from_json(const Json& j, const std::string& ptr) {
    const Json& jm = need(j, "matroids", ptr);
    if (!jm.is_array() || jm.empty()) throw json_error("expected a nonempty array of matroids", ptr + "/matroids");
    std::vector<Matroid> seq;
    for (std::size_t i = 0; i < jm.size(); ++i) seq.push_back(matroid_from_json(jm[i], idx(ptr + "/matroids", i)));
    return seq;
}

}  // namespace flagpos
