#pragma once

#include <cstdint>
#include <string>

namespace qhflow::testing {

struct PropertyOutcome {
    std::string name;
    int instances = 0;
    int failures = 0;
    std::string first_failure;
    bool ok() const { return failures == 0; }
};

// Each suite draws `count` random instances (polynomials of total degree <= 8).
PropertyOutcome prop_splitting_roundtrip(std::uint64_t seed, int count);
PropertyOutcome prop_bracket_identities(std::uint64_t seed, int count);
PropertyOutcome prop_euler_identity(std::uint64_t seed, int count);
PropertyOutcome prop_cyclicity(std::uint64_t seed, int count);
PropertyOutcome prop_normal_form_idempotence(std::uint64_t seed, int count);
PropertyOutcome prop_scale_equivariance(std::uint64_t seed, int count);

}  // namespace qhflow::testing
