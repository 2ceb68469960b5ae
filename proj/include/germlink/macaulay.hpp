#pragma once

// Independent codimension oracle: dim O/(I + m^(d+1)) by exact row
// reduction over the truncated ring. Shares nothing with the standard
// basis machinery beyond raw polynomial arithmetic, so the two routes
// cross-check each other.

#include "germlink/groebner.hpp"

namespace germlink {

struct OracleResult {
    bool stable = false;     // value agreed between cap-1 and cap
    unsigned long value = 0; // dim at the cap (the codim when stable)
    unsigned cap = 0;

    std::string str() const {
        return stable ? std::to_string(value) : "UNSTABLE(cap " + std::to_string(cap) + ")";
    }
};

// default cap 12; cap must be >= 1
OracleResult macaulay_codim_oracle(const Ideal& I, unsigned cap = 12);

} // namespace germlink
