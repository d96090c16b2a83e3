#pragma once

#include <cstdint>
#include <string>

#include "numdup/errors.hpp"

namespace numdup::detail {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(errc::overflow, "integer addition overflowed");
    return out;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(errc::overflow, "integer multiplication overflowed");
    return out;
}

}  // namespace numdup::detail
