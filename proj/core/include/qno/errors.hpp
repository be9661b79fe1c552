// errors.hpp — Error taxonomy shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace qno {

enum class errc {
    // parameter validation
    non_positive_frequency,
    negative_nonlinearity,
    negative_damping,
    ground_level_undefined,
    // spectrum / state construction
    truncation_leak,
    degenerate_match_ambiguity,
    resonant_denominator,
    // dynamics
    step_size_too_large,
    degenerate_rate_denominator,
    zero_discriminant,
    window_too_short,
    // configuration / I/O
    config_parse,
    config_validation,
    io_failure,
};

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

// Exit-code buckets used by the CLI: 1 config, 2 validation, 3 numeric.
inline int exit_code_for(errc c) {
    switch (c) {
    case errc::config_parse:
    case errc::io_failure:
        return 1;
    case errc::config_validation:
    case errc::non_positive_frequency:
    case errc::negative_nonlinearity:
    case errc::negative_damping:
    case errc::ground_level_undefined:
        return 2;
    default:
        return 3;
    }
}

} // namespace qno
