#pragma once

#include <stdexcept>
#include <string>

namespace stronggenus {

enum class Errc {
    MalformedInput,
    VertexOutOfRange,
    LoopRejected,
    DegenerateCycle,
    SameVertex,
    InvalidCycle,
    InvalidParameter,
    OddGirthUnsupported,
    LayeringDegenerate,
    ExtractionFailed,
    OddCharacteristicOrientable,
    InternalError,
};

/// All library failures carry a machine-checkable code plus a human message.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace stronggenus
