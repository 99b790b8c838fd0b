#pragma once

#include "gtable/repkit.hpp"

#include <json.hpp>

namespace gtable::detail {

using ojson = nlohmann::ordered_json;

ojson irrep_json(const rep::IrrepId& id);
rep::IrrepId irrep_from_json(const ojson& j);

}  // namespace gtable::detail
