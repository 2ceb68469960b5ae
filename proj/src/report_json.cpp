#include "germlink/report_json.hpp"

#include "germlink/catalog.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace germlink {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json doc_head() {
    ordered_json j;
    j["schema"] = report_schema;
    j["tool"] = {{"name", tool_name}, {"version", tool_version}};
    return j;
}

ordered_json germ_echo(const InvariantReport& r, const std::string& name,
                       const std::string& provenance) {
    ordered_json j;
    j["name"] = name;
    j["text"] = print_germ(r.germ);
    j["provenance"] = provenance;
    return j;
}

ordered_json codim_json(const Codim& c) {
    if (!c.finite) return ordered_json("infinite");
    return ordered_json(static_cast<long long>(c.value));
}

ordered_json opt_codim_json(const std::optional<Codim>& c) {
    if (!c) return nullptr;
    return codim_json(*c);
}

ordered_json opt_poly_json(const std::optional<Poly>& p) {
    if (!p) return nullptr;
    return ordered_json(p->str());
}

ordered_json opt_str_json(const std::string& s) {
    if (s.empty()) return nullptr;
    return ordered_json(s);
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// text helpers

std::string codim_or(const std::optional<Codim>& c, const std::string& err) {
    if (c) return c->str();
    return "unavailable (" + err + ")";
}

std::string branch_d_text(const BranchReport& br) {
    if (!br.d) return "unavailable (" + br.d_error + ")";
    std::string out = br.d->str();
    if (br.d_empty) out += " (empty)";
    else if (br.d_squarefree) out += " (squarefree)";
    else out += " (not squarefree)";
    return out;
}

void append_branches_text(std::ostringstream& os, const InvariantReport& r) {
    for (size_t i = 0; i < r.branches.size(); ++i) {
        const BranchReport& br = r.branches[i];
        const std::string tag = "branch " + std::to_string(i + 1);
        os << tag << ": corank " << br.corank << ", C " << br.C.str() << "\n";
        if (br.image) os << tag << " image: " << br.image->str() << "\n";
        os << tag << " d: " << branch_d_text(br) << "\n";
    }
}

void append_oracle_text(std::ostringstream& os, const InvariantReport& r) {
    for (const OracleCheck& oc : r.oracle_checks)
        os << "oracle " << oc.subject << ": local " << oc.local.str() << ", oracle "
           << oc.oracle.str() << "\n";
}

ordered_json branches_json(const InvariantReport& r) {
    ordered_json arr = ordered_json::array();
    for (const BranchReport& br : r.branches) {
        ordered_json b;
        b["corank"] = br.corank;
        b["immersive"] = br.immersive;
        b["C"] = codim_json(br.C);
        b["image"] = opt_poly_json(br.image);
        b["d"] = opt_poly_json(br.d);
        b["d_squarefree"] = br.d ? ordered_json(br.d_squarefree) : ordered_json(nullptr);
        b["d_empty"] = br.d ? ordered_json(br.d_empty) : ordered_json(nullptr);
        b["d_resultant"] = opt_poly_json(br.d_resultant);
        b["d_elimination"] = opt_poly_json(br.d_elimination);
        b["d_error"] = opt_str_json(br.d_error);
        b["triple_codim"] = opt_codim_json(br.triple_codim);
        arr.push_back(std::move(b));
    }
    return arr;
}

ordered_json oracle_json(const InvariantReport& r) {
    ordered_json arr = ordered_json::array();
    for (const OracleCheck& oc : r.oracle_checks) {
        ordered_json o;
        o["subject"] = oc.subject;
        o["local"] = codim_json(oc.local);
        o["oracle"] = {{"stable", oc.oracle.stable},
                       {"value", static_cast<long long>(oc.oracle.value)},
                       {"cap", oc.oracle.cap}};
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json presentation_json(const Presentation& P) {
    ordered_json j;
    ordered_json blocks = ordered_json::array();
    for (const PresentationBlock& bl : P.blocks) {
        ordered_json b;
        ordered_json gens = ordered_json::array();
        for (const Poly& g : bl.gens) gens.push_back(g.str());
        b["generators"] = std::move(gens);
        b["det"] = bl.det.str();
        b["image"] = bl.image.str();
        b["cover_degree"] = bl.cover_degree;
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    ordered_json rows = ordered_json::array();
    for (const auto& row : P.lambda) {
        ordered_json jr = ordered_json::array();
        for (const Poly& e : row) jr.push_back(e.str());
        rows.push_back(std::move(jr));
    }
    j["lambda"] = std::move(rows);
    j["det"] = P.det.str();
    j["image"] = P.image.str();
    return j;
}

ordered_json table_json(const SignTable& t) {
    ordered_json j;
    j["scenario"] = t.scenario;
    ordered_json entries = ordered_json::array();
    for (const SignEntry& e : t.entries) {
        ordered_json je;
        je["membrane"] = e.membrane;
        je["sheet"] = e.sheet;
        je["sign"] = e.sign;
        je["point"] = {e.point[0].str(), e.point[1].str(), e.point[2].str()};
        je["rule"] = e.rule;
        entries.push_back(std::move(je));
    }
    j["entries"] = std::move(entries);
    j["total"] = t.total;
    j["cross_checked"] = t.cross_checked;
    j["shift_independent"] = t.shift_independent;
    j["notes"] = t.notes;
    return j;
}

} // namespace

std::string serialize_report(const InvariantReport& r, ReportFormat fmt,
                             const std::string& name, const std::string& provenance) {
    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        j["germ"] = germ_echo(r, name, provenance);
        j["corank"] = r.corank >= 0 ? ordered_json(r.corank) : ordered_json(nullptr);
        j["C"] = codim_json(r.C);
        j["T"] = opt_codim_json(r.T);
        j["T_fitting"] = opt_codim_json(r.T_fitting);
        j["T_fitting_error"] = opt_str_json(r.T_fitting_error);
        j["T_triple_space"] = opt_codim_json(r.T_triple);
        j["T_triple_space_error"] = opt_str_json(r.T_triple_error);
        j["L"] = r.L ? ordered_json(*r.L) : ordered_json(nullptr);
        j["verdict"] = verdict_str(r.verdict);
        j["reason"] = r.verdict_reason;
        j["image"] = opt_poly_json(r.image);
        j["image_error"] = opt_str_json(r.image_error);
        j["branches"] = branches_json(r);
        j["presentation"] = r.presentation ? presentation_json(*r.presentation)
                                           : ordered_json(nullptr);
        j["presentation_error"] = opt_str_json(r.presentation_error);
        j["oracle"] = oracle_json(r);
        return dump(j);
    }

    std::ostringstream os;
    os << "name: " << name << "\n";
    os << "germ: " << print_germ(r.germ) << "\n";
    os << "provenance: " << provenance << "\n";
    if (r.corank >= 0) os << "corank: " << r.corank << "\n";
    os << "C: " << r.C.str() << "\n";
    os << "T(fitting): " << codim_or(r.T_fitting, r.T_fitting_error) << "\n";
    os << "T(triple space): " << codim_or(r.T_triple, r.T_triple_error) << "\n";
    os << "T: " << (r.T ? r.T->str() : "unknown") << "\n";
    os << "L: " << (r.L ? std::to_string(*r.L) : "undefined") << "\n";
    if (r.image) os << "image: " << r.image->str() << "\n";
    else os << "image: unavailable (" << r.image_error << ")\n";
    os << "verdict: " << verdict_str(r.verdict) << "\n";
    os << "reason: " << r.verdict_reason << "\n";
    append_branches_text(os, r);
    if (r.presentation) {
        const Presentation& P = *r.presentation;
        os << "presentation: " << P.m << " generators";
        if (P.blocks.size() == 1) os << ", cover degree " << P.blocks[0].cover_degree;
        else os << " in " << P.blocks.size() << " blocks";
        os << "\n";
        os << "det(lambda): " << P.det.str() << "\n";
    } else {
        os << "presentation: unavailable (" << r.presentation_error << ")\n";
    }
    append_oracle_text(os, r);
    return os.str();
}

std::string serialize_check(const InvariantReport& r, ReportFormat fmt,
                            const std::string& name, const std::string& provenance) {
    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        j["germ"] = germ_echo(r, name, provenance);
        j["verdict"] = verdict_str(r.verdict);
        j["reason"] = r.verdict_reason;
        j["C"] = codim_json(r.C);
        j["T"] = opt_codim_json(r.T);
        j["L"] = r.L ? ordered_json(*r.L) : ordered_json(nullptr);
        ordered_json ds = ordered_json::array();
        for (const BranchReport& br : r.branches) {
            ordered_json b;
            b["d"] = opt_poly_json(br.d);
            b["d_squarefree"] = br.d ? ordered_json(br.d_squarefree) : ordered_json(nullptr);
            b["d_error"] = opt_str_json(br.d_error);
            ds.push_back(std::move(b));
        }
        j["branches"] = std::move(ds);
        return dump(j);
    }

    std::ostringstream os;
    os << "name: " << name << "\n";
    os << "germ: " << print_germ(r.germ) << "\n";
    os << "verdict: " << verdict_str(r.verdict) << "\n";
    os << "reason: " << r.verdict_reason << "\n";
    os << "C: " << r.C.str() << "\n";
    os << "T: " << (r.T ? r.T->str() : "unknown") << "\n";
    os << "L: " << (r.L ? std::to_string(*r.L) : "undefined") << "\n";
    for (size_t i = 0; i < r.branches.size(); ++i)
        os << "branch " << i + 1 << " d: " << branch_d_text(r.branches[i]) << "\n";
    return os.str();
}

std::string serialize_presentation(const InvariantReport& r, ReportFormat fmt,
                                   const std::string& name, const std::string& provenance) {
    if (!r.presentation) throw error("presentation unavailable: " + r.presentation_error);
    const Presentation& P = *r.presentation;

    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        j["germ"] = germ_echo(r, name, provenance);
        j["presentation"] = presentation_json(P);
        ordered_json fit;
        for (unsigned k = 0; k <= 2; ++k) {
            Ideal F = fitting_ideal(P, k);
            ordered_json gens = ordered_json::array();
            for (const Poly& g : F.gens) gens.push_back(g.str());
            fit["F" + std::to_string(k)] = std::move(gens);
        }
        j["fitting"] = std::move(fit);
        return dump(j);
    }

    std::ostringstream os;
    os << "name: " << name << "\n";
    os << "germ: " << print_germ(r.germ) << "\n";
    os << "generators: ";
    for (size_t b = 0; b < P.blocks.size(); ++b) {
        if (b) os << "; ";
        const std::vector<Poly>& gens = P.blocks[b].gens;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (i) os << ", ";
            os << gens[i].str();
        }
    }
    os << "\n";
    os << "lambda:\n";
    for (const auto& row : P.lambda) {
        os << "  [";
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ", ";
            os << row[i].str();
        }
        os << "]\n";
    }
    os << "det: " << P.det.str() << "\n";
    os << "image: " << P.image.str() << "\n";
    os << "cover degree: ";
    for (size_t b = 0; b < P.blocks.size(); ++b) {
        if (b) os << "; ";
        os << P.blocks[b].cover_degree;
    }
    os << "\n";
    for (unsigned k = 0; k <= 2; ++k) {
        Ideal F = fitting_ideal(P, k);
        os << "F" << k << ":";
        for (size_t i = 0; i < F.gens.size(); ++i)
            os << (i ? ", " : " ") << F.gens[i].str();
        os << "\n";
    }
    return os.str();
}

std::string serialize_oracle(const InvariantReport& r, ReportFormat fmt,
                             const std::string& name, const std::string& provenance) {
    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        j["germ"] = germ_echo(r, name, provenance);
        j["oracle"] = oracle_json(r);
        return dump(j);
    }
    std::ostringstream os;
    os << "name: " << name << "\n";
    os << "germ: " << print_germ(r.germ) << "\n";
    append_oracle_text(os, r);
    os << "all truncation checks consistent\n";
    return os.str();
}

std::string serialize_tables(const std::vector<SignTable>& tables, ReportFormat fmt) {
    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        ordered_json arr = ordered_json::array();
        for (const SignTable& t : tables) arr.push_back(table_json(t));
        j["tables"] = std::move(arr);
        return dump(j);
    }
    std::ostringstream os;
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i) os << "\n";
        os << format_sign_table(tables[i]);
    }
    return os.str();
}

std::string serialize_catalog(ReportFormat fmt) {
    const std::vector<GermSource>& cat = catalog();
    if (fmt == ReportFormat::json) {
        ordered_json j = doc_head();
        ordered_json arr = ordered_json::array();
        for (const GermSource& g : cat) {
            ordered_json e;
            e["name"] = g.name;
            e["text"] = g.text();
            e["provenance"] = provenance_str(g.provenance);
            arr.push_back(std::move(e));
        }
        j["germs"] = std::move(arr);
        return dump(j);
    }
    size_t wname = 0, wtext = 0;
    for (const GermSource& g : cat) {
        wname = std::max(wname, g.name.size());
        wtext = std::max(wtext, g.text().size());
    }
    std::ostringstream os;
    for (const GermSource& g : cat) {
        std::string name = g.name, text = g.text();
        name.resize(wname + 2, ' ');
        text.resize(wtext + 2, ' ');
        os << name << text << provenance_str(g.provenance) << "\n";
    }
    return os.str();
}

} // namespace germlink
