#pragma once

#include <span>

#include "spinel/digest.hpp"
#include "spinel/mat4.hpp"

namespace spinel {

// The 512-bit walk hash: serialize(walk(encode_message(data))).
Digest hash(std::span<const std::uint8_t> data);

}  // namespace spinel
