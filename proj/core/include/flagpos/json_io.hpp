#pragma once

#include <string>

#include <json.hpp>

#include "flagpos/bruhat_interval.hpp"
#include "flagpos/matroid.hpp"
#include "flagpos/necklace.hpp"
#include "flagpos/polytope.hpp"
#include "flagpos/tropical.hpp"

namespace flagpos {

using Json = nlohmann::json;

/** Input validation failure with a JSON-pointer path to the offending node. */
class json_error : public invalid_input {
  public:
    json_error(const std::string& what, std::string pointer)
        : invalid_input(what + " (at " + (pointer.empty() ? "/" : pointer) + ")"), pointer_(std::move(pointer)) {}
    const std::string& pointer() const { return pointer_; }

  private:
    std::string pointer_;
};

Matroid matroid_from_json(const Json& j, const std::string& ptr = "");
Json matroid_to_json(const Matroid& m);

Necklace necklace_from_json(const Json& j, const std::string& ptr = "");
Json necklace_to_json(const Necklace& nk);

TropVec tropvec_from_json(const Json& j, const std::string& ptr = "");
Json tropvec_to_json(const TropVec& w);

FlagTropVec flagvec_from_json(const Json& j, const std::string& ptr = "");
Json flagvec_to_json(const FlagTropVec& mu);

Perm perm_from_json(const Json& j, const std::string& ptr = "");
Json perm_to_json(const Perm& z);

std::vector<Matroid> matroid_sequence_from_json(const Json& j, const std::string& ptr = "");

/** Subset list helper shared by several schemas. */
Mask subset_from_json(const Json& j, int n, const std::string& ptr);
Json subset_to_json(Mask m);

}  // namespace flagpos
