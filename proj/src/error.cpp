#include "cedga/error.hpp"

namespace cedga {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::RingMismatch: return "ring-mismatch";
    case ErrorCode::UndeclaredGenerator: return "undeclared-generator";
    case ErrorCode::InvalidPoint: return "invalid-point";
    case ErrorCode::NonPlanar: return "non-planar";
    case ErrorCode::MultiComponent: return "multi-component";
    case ErrorCode::NonPositiveLength: return "non-positive-length";
    case ErrorCode::InvalidDiagram: return "invalid-diagram";
    case ErrorCode::ResourceLimit: return "resource-limit";
    case ErrorCode::EmptyInventory: return "empty-inventory";
    case ErrorCode::NotInRegime: return "not-in-regime";
    case ErrorCode::InvalidLoop: return "invalid-loop";
    case ErrorCode::InternalConsistency: return "internal-consistency";
    case ErrorCode::Format: return "format";
    case ErrorCode::VersionMismatch: return "version-mismatch";
    case ErrorCode::VerificationFailed: return "verification-failed";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::AugmentationMismatch: return "augmentation-mismatch";
    case ErrorCode::NotChainMap: return "not-chain-map";
    case ErrorCode::UnknownEntry: return "unknown-entry";
    }
    return "unknown";
}

} // namespace cedga
