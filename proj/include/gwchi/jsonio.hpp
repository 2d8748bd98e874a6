#pragma once

#include "gwchi/integers.hpp"

#include <json.hpp>

namespace gwchi {

using Json = nlohmann::ordered_json;

// Integers render as JSON numbers while they are exactly representable by
// readers that parse into doubles; beyond 2^53 they render as decimal strings.
inline Json int_json(const Int& v) {
    static const Int kSafe = (Int(1) << 53) - 1;
    if (v <= kSafe && v >= -kSafe) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

}  // namespace gwchi
