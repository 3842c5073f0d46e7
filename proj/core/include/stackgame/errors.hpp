#pragma once

#include <stdexcept>
#include <string>

namespace stackgame {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shape mismatches: wrong input length, layer dims out of sync, grid on n > 3.
struct DimensionError : Error {
    using Error::Error;
};

/// Loss misuse: gradients of adv01, Lipschitz constant of adv01, m < 2 for margin losses.
struct LossError : Error {
    using Error::Error;
};

/// Invalid scalar arguments: negative attack radius, empty pools, bad config values.
struct ValueError : Error {
    using Error::Error;
};

/// Malformed persisted files; messages carry the offending line where applicable.
struct ParseError : Error {
    using Error::Error;
};

/// Well-formed input that violates a domain contract (labels out of range, entries outside [0,1]).
struct ValidationError : Error {
    using Error::Error;
};

/// Artifacts combined across mismatched contexts (bundle vs dataset, records over different games).
struct BindingError : Error {
    using Error::Error;
};

/// Training payoff became non-finite.
struct DivergenceError : Error {
    using Error::Error;
};

}  // namespace stackgame
