#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ptab/enumerate.hpp"
#include "ptab/io.hpp"

namespace ptab {

class UnknownIdentity : public std::invalid_argument {
public:
    explicit UnknownIdentity(const std::string& name) : std::invalid_argument("unknown identity '" + name + "'") {}
};

struct VerifyParams {
    std::string identity;
    int n = 0;
    /// GF_PT only: check every coefficient up to x^order instead of one n.
    std::optional<int> order;
    int jobs = 1;
    /// How PT(n) / PTB(n) are produced for sums and per-tableau checks.
    Method method = Method::Bijection;
    Limits limits{};
};

/// For sum identities left/right are the two exact values; for property
/// identities left counts the checks that held and right the checks made.
struct VerifyReport {
    std::string identity;
    int n = 0;
    std::string left;
    std::string right;
    bool pass = false;
    std::uint64_t count = 0;  // objects visited
    double ms = 0;

    [[nodiscard]] Json to_json() const;
};

/// All supported identity names.
const std::vector<std::string>& identity_names();

/// Throws UnknownIdentity, LimitExceeded, or std::invalid_argument for an
/// n the identity is not stated for.
VerifyReport verify(const VerifyParams& params);

}  // namespace ptab
