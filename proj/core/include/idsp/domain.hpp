#pragma once

#include <cstdint>

namespace idsp {

enum class Domain : std::uint8_t { Source, Target };

}  // namespace idsp
