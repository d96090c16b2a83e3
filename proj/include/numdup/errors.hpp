#pragma once

#include <stdexcept>
#include <string>

namespace numdup {

/// Failure classes surfaced by the library. Everything that can go wrong on
/// well-formed API usage maps to one of these; malformed arguments (negative
/// generator, empty option string, ...) throw std::invalid_argument instead.
enum class errc {
    empty_generators,
    gcd_not_one,
    overflow,
    not_member,
    ambient_mismatch,
    not_nested,
    even_b,
    b_not_in_semigroup,
    ideal_not_integral,
    not_almost_gorenstein,
    internal_mismatch,  // two provably equal quantities disagreed: a bug, never bad input
    improper_semigroup,
    not_intermediate,
    not_integral_shift,
    budget_exceeded,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const { return code_; }

private:
    errc code_;
};

}  // namespace numdup
