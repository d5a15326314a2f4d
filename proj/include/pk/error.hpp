#pragma once

#include <stdexcept>
#include <string>

namespace pk {

// Base for everything the library throws on bad input. The CLI maps these
// to exit code 2; anything else (logic_error etc.) is an internal failure.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position, std::string token)
        : error(what + " (token '" + token + "' at position " + std::to_string(position) + ")"),
          position(position),
          token(std::move(token)) {}
    std::size_t position;
    std::string token;
};

struct ring_mismatch : error {
    using error::error;
};

// Violated operation precondition: non-Poisson structure, non-closed form,
// observable outside the normalizer, and so on.
struct precondition_error : error {
    using error::error;
};

}  // namespace pk
