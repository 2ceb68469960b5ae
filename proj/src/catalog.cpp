#include "germlink/catalog.hpp"

#include <sstream>

namespace germlink {

std::string GermSource::text() const {
    std::ostringstream os;
    for (size_t b = 0; b < branches.size(); ++b) {
        if (b) os << "; ";
        os << "Phi(s,t) = (" << branches[b][0] << ", " << branches[b][1] << ", "
           << branches[b][2] << ")";
    }
    return os.str();
}

MapGerm GermSource::germ() const {
    MapGerm g = parse_germ(text());
    g.label = name;
    return g;
}

std::string provenance_str(GermSource::Provenance p) {
    switch (p) {
        case GermSource::Provenance::normal_form: return "normal-form";
        case GermSource::Provenance::derived: return "derived";
        default: return "user";
    }
}

const std::vector<GermSource>& catalog() {
    using P = GermSource::Provenance;
    static const std::vector<GermSource> entries = {
        {"umbrella", {{{"s^2", "s*t", "t"}}}, P::normal_form},
        {"triple",
         {{{"0", "s", "t"}}, {{"t", "0", "s"}}, {{"s", "t", "0"}}},
         P::normal_form},
        {"double-cover", {{{"s^2", "t^2", "s*t"}}}, P::normal_form},
        {"cuspidal-edge", {{{"s", "t^2", "t^3"}}}, P::derived},
        {"family-1", {{{"s", "t^2", "t^3 + s^2*t"}}}, P::derived},
        {"family-2", {{{"s", "t^2", "t^3 + s^3*t"}}}, P::derived},
        {"family-3", {{{"s", "t^2", "t^3 + s^4*t"}}}, P::derived},
    };
    return entries;
}

const GermSource* find_catalog(const std::string& name) {
    for (const GermSource& g : catalog())
        if (g.name == name) return &g;
    return nullptr;
}

} // namespace germlink
