#pragma once

#include <stdexcept>

namespace psm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotHermitian : Error {
    using Error::Error;
};
struct SingularMatrix : Error {
    using Error::Error;
};
struct UnsupportedOrder : Error {
    using Error::Error;
};
struct InvalidDimensions : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct RankDeficientChannel : Error {
    using Error::Error;
};
struct NoFeasiblePattern : Error {
    using Error::Error;
};
struct UnsupportedKind : Error {
    using Error::Error;
};
struct IoError : Error {
    using Error::Error;
};

} // namespace psm
