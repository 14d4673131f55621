#pragma once

#include <stdexcept>
#include <string>

namespace tableaux {

/// Malformed input: bad JSON, out-of-range parameters, ill-formed encodings.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition or structural invariant does not hold (e.g. a tableau that
/// is not semistandard where one is required, or a step record that is not in
/// the image of the forward map).
struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tableaux
