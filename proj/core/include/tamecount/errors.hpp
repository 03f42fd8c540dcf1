#ifndef TAMECOUNT_ERRORS_HPP
#define TAMECOUNT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tamecount {

struct ProductMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BasisMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotStronglyConnected : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// singleton graphs have no MAX-SINK sorting
struct TooSmall : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotCoprime : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadOrder : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadArguments : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotMonicOriginal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct BadDivisor : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSwapExists : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotACollision : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// enumeration oracles fail hard instead of truncating
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct WildCharacteristic : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace tamecount

#endif
