#pragma once

// Built-in catalog of map germs used by the CLI and across the test suite.

#include "germlink/germ.hpp"

#include <array>
#include <string>
#include <vector>

namespace germlink {

struct GermSource {
    enum class Provenance { normal_form, derived, user };

    std::string name;
    // one entry per branch: its three coordinate expressions in (s, t)
    std::vector<std::array<std::string, 3>> branches;
    Provenance provenance = Provenance::user;

    // assembled description, ready for parse_germ
    std::string text() const;
    // parsed germ, labeled by the catalog name
    MapGerm germ() const;
};

std::string provenance_str(GermSource::Provenance p);

const std::vector<GermSource>& catalog();

// nullptr when the name is not a catalog entry
const GermSource* find_catalog(const std::string& name);

} // namespace germlink
