#pragma once

// Verifiable witness objects.  A Certificate is emitted only after its
// verifier re-checks every equality with exact arithmetic; `verified` records
// that the re-check pass ran and succeeded.

#include <posring/budget.hpp>

#include <json.hpp>

namespace posring {

enum class CertKind {
    NotHF,
    NotLF,
    AccpFailChain,
    NonBFFamily,
    NonFFFamily,
    HFLinearFunctional,
    AtomListing,
};

inline std::string to_string(CertKind k) {
    switch (k) {
        case CertKind::NotHF: return "NotHF";
        case CertKind::NotLF: return "NotLF";
        case CertKind::AccpFailChain: return "AccpFailChain";
        case CertKind::NonBFFamily: return "NonBFFamily";
        case CertKind::NonFFFamily: return "NonFFFamily";
        case CertKind::HFLinearFunctional: return "HFLinearFunctional";
        case CertKind::AtomListing: return "AtomListing";
    }
    return "?";
}

struct Certificate {
    CertKind kind;
    nlohmann::json payload;  // kind-specific witness data
    bool verified = false;

    nlohmann::json to_json() const {
        nlohmann::json j = payload;
        j["kind"] = to_string(kind);
        j["verified"] = verified;
        return j;
    }
};

}  // namespace posring
