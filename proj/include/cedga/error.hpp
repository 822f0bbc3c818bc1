#pragma once

#include <stdexcept>
#include <string>

namespace cedga {

enum class ErrorCode {
    RingMismatch,
    UndeclaredGenerator,
    InvalidPoint,
    NonPlanar,
    MultiComponent,
    NonPositiveLength,
    InvalidDiagram,
    ResourceLimit,
    EmptyInventory,
    NotInRegime,
    InvalidLoop,
    InternalConsistency,
    Format,
    VersionMismatch,
    VerificationFailed,
    Unsupported,
    AugmentationMismatch,
    NotChainMap,
    UnknownEntry,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace cedga
