#include "germlink/invariants.hpp"

#include "germlink/resultant.hpp"

#include <sstream>

namespace germlink {

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "undetermined";
    }
}

Codim invariant_C(const MapGerm& g) {
    unsigned long total = 0;
    for (const Branch& b : g.branches) {
        Codim c = local_codim(ramification_ideal(b));
        if (!c.finite) return Codim::inf();
        total += c.value;
    }
    return Codim::of(total);
}

Codim invariant_T_fitting(const Presentation& P) {
    return local_codim(fitting_ideal(P, 2));
}

Codim invariant_T_fitting(const MapGerm& g) {
    return invariant_T_fitting(presentation_matrix(g));
}

Ideal triple_cross_ideal(const MapGerm& g) {
    if (g.branches.size() != 3)
        throw not_supported("triple_cross_ideal: needs exactly three branches");
    const Ring& src = g.branches[0].source;
    const std::string sv = src.var(0), tv = src.var(1);

    std::string sep;
    std::vector<std::string> names;
    while (true) {
        names.clear();
        for (int i = 1; i <= 3; ++i) {
            names.push_back(sv + sep + std::to_string(i));
            names.push_back(tv + sep + std::to_string(i));
        }
        bool distinct = true;
        for (size_t a = 0; a < names.size(); ++a)
            for (size_t b = a + 1; b < names.size(); ++b)
                if (names[a] == names[b]) distinct = false;
        if (distinct) break;
        sep += "_";
    }
    Ring r6(names);

    std::array<std::array<Poly, 3>, 3> sub;
    for (size_t i = 0; i < 3; ++i) {
        std::vector<Poly> img{Poly::variable(r6, names[2 * i]),
                              Poly::variable(r6, names[2 * i + 1])};
        for (size_t k = 0; k < 3; ++k)
            sub[i][k] = substitute(g.branches[i].comps[k], r6, img);
    }
    std::vector<Poly> gens;
    for (size_t k = 0; k < 3; ++k) gens.push_back(sub[0][k] - sub[1][k]);
    for (size_t k = 0; k < 3; ++k) gens.push_back(sub[1][k] - sub[2][k]);
    return Ideal(r6, std::move(gens));
}

namespace {

// local codim of one branch's triple space I3; the caller divides by 6
Codim branch_triple_codim(const Branch& b) {
    NormalizedBranch nb = normalize_corank1(b);
    DoubleSpaces ds = double_space_ideals(nb);
    return local_codim(Ideal(ds.ring3, ds.triple_gens));
}

Codim divide_by_six(const Codim& c) {
    if (!c.finite) return c;
    if (c.value % 6 != 0)
        throw consistency_error("triple space codimension " + std::to_string(c.value) +
                                " is not divisible by 6");
    return Codim::of(c.value / 6);
}

bool all_immersive(const MapGerm& g) {
    for (const Branch& b : g.branches)
        if (!is_immersive(b)) return false;
    return true;
}

} // namespace

Codim invariant_T_triple_space(const MapGerm& g) {
    if (g.is_mono()) return divide_by_six(branch_triple_codim(g.mono()));
    if (g.branches.size() == 3 && all_immersive(g)) {
        unsigned long total = 0;
        for (const Branch& b : g.branches) {
            Codim c = divide_by_six(branch_triple_codim(b));
            if (!c.finite) return Codim::inf();
            total += c.value;
        }
        // one ordered representative per triple value across the three
        // distinct branches, so no factor here
        Codim cross = local_codim(triple_cross_ideal(g));
        if (!cross.finite) return Codim::inf();
        return Codim::of(total + cross.value);
    }
    throw not_supported("invariant_T_triple_space: multigerm shape not covered; "
                        "the Fitting route is the authoritative one");
}

namespace {

void oracle_check(InvariantReport& rep, const ReportOptions& opts,
                  const std::string& subject, const Ideal& I, const Codim& local) {
    if (!opts.use_oracle) return;
    OracleResult o = macaulay_codim_oracle(I, opts.oracle_cap);
    if (o.stable) {
        // a stable truncation count is exact
        if (!local.finite)
            throw consistency_error(subject + ": oracle stabilized at " +
                                    std::to_string(o.value) +
                                    " but the staircase count is infinite");
        if (o.value != local.value)
            throw consistency_error(subject + ": oracle value " + std::to_string(o.value) +
                                    " disagrees with staircase count " +
                                    std::to_string(local.value));
    }
    rep.oracle_checks.push_back({subject, local, o});
}

// d of one branch: own double curve in original coordinates, times the
// pullbacks of the other branches' images for multigerms
void branch_double_curve(InvariantReport& rep, size_t bi) {
    BranchReport& br = rep.branches[bi];
    const Branch& b = rep.germ.branches[bi];
    if (br.corank > 1) {
        br.d_error = "corank 2: the divided-difference route needs corank <= 1";
        return;
    }
    try {
        NormalizedBranch nb = normalize_corank1(b);
        DoubleCurve dc = double_curve(double_space_ideals(nb));
        br.d_resultant = dc.via_resultant;
        br.d_elimination = dc.via_elimination;
        Poly d = transport_plane_curve(dc.d, nb);
        for (size_t j = 0; j < rep.germ.branches.size(); ++j) {
            if (j == bi) continue;
            if (!rep.branches[j].image)
                throw not_supported("missing image equation of another branch");
            std::vector<Poly> comps(b.comps.begin(), b.comps.end());
            Poly pulled = substitute(*rep.branches[j].image, b.source, comps);
            if (pulled.is_zero())
                throw not_supported("another branch's image pulls back to zero");
            d *= pulled;
        }
        d = monic(d);
        br.d = d;
        br.d_empty = d.has_unit_term();
        br.d_squarefree = squarefree_test(d);
    } catch (const consistency_error&) {
        throw;
    } catch (const error& e) {
        br.d_error = e.what();
    }
}

void decide_verdict(InvariantReport& rep) {
    const bool c_finite = rep.C.finite;
    const bool t_known = rep.T.has_value();
    const bool t_finite = t_known && rep.T->finite;

    if (!c_finite || (t_known && !t_finite)) {
        rep.verdict = Verdict::no;
        rep.verdict_reason = !c_finite ? "C is infinite" : "T is infinite";
        return;
    }

    bool multi = !rep.germ.is_mono();
    if (multi && !all_immersive(rep.germ)) {
        rep.verdict = Verdict::undetermined;
        rep.verdict_reason = "multigerm with a non-immersive branch";
        return;
    }
    if (!multi && rep.corank >= 2) {
        rep.verdict = Verdict::undetermined;
        rep.verdict_reason = "corank 2: the reduced double curve test is out of reach";
        return;
    }

    bool d_ok = true, d_failed = false;
    for (const BranchReport& br : rep.branches) {
        if (!br.d) {
            d_failed = true;
        } else if (!br.d_squarefree) {
            d_ok = false;
        }
    }
    if (!d_ok) {
        rep.verdict = Verdict::no;
        rep.verdict_reason = "the double point curve is not reduced";
        return;
    }
    if (d_failed || !t_known) {
        rep.verdict = Verdict::undetermined;
        rep.verdict_reason = d_failed ? "double point curve unavailable" : "T unavailable";
        return;
    }
    rep.verdict = Verdict::yes;
    rep.verdict_reason = multi ? "multigerm of immersions with reduced double curve"
                               : "C and T finite and the double point curve is reduced";
}

} // namespace

InvariantReport full_report(const MapGerm& g, const ReportOptions& opts) {
    if (g.branches.empty()) throw error("full_report: no branches");
    InvariantReport rep;
    rep.germ = g;
    rep.branches.resize(g.branches.size());
    rep.corank = g.is_mono() ? corank(g.mono()) : -1;

    // C per branch, oracle-checked
    bool c_inf = false;
    unsigned long c_total = 0;
    for (size_t i = 0; i < g.branches.size(); ++i) {
        BranchReport& br = rep.branches[i];
        br.corank = corank(g.branches[i]);
        br.immersive = is_immersive(g.branches[i]);
        Ideal ram = ramification_ideal(g.branches[i]);
        br.C = local_codim(ram);
        oracle_check(rep, opts, "ramification(branch " + std::to_string(i + 1) + ")",
                     ram, br.C);
        if (br.C.finite) c_total += br.C.value;
        else c_inf = true;
    }
    rep.C = c_inf ? Codim::inf() : Codim::of(c_total);

    // branch images; cheap and needed by multigerm double curves
    Ring target(std::vector<std::string>{});
    {
        auto tn = target_names(g.branches[0].source);
        target = Ring({tn[0], tn[1], tn[2]});
    }
    std::string image_err;
    for (size_t i = 0; i < g.branches.size(); ++i) {
        try {
            rep.branches[i].image = image_equation(g.branches[i], target);
        } catch (const consistency_error&) {
            throw;
        } catch (const error& e) {
            image_err = e.what();
        }
    }
    if (image_err.empty()) {
        Poly prod = Poly::constant(target, Scalar(1));
        for (const auto& br : rep.branches) prod *= *br.image;
        rep.image = monic(prod);
    } else {
        rep.image_error = image_err;
    }

    // presentation and the Fitting route
    if (opts.with_presentation) {
        try {
            rep.presentation = presentation_matrix(g);
            Ideal f2 = fitting_ideal(*rep.presentation, 2);
            rep.T_fitting = local_codim(f2);
            oracle_check(rep, opts, "F2", f2, *rep.T_fitting);
        } catch (const consistency_error&) {
            throw;
        } catch (const error& e) {
            if (rep.presentation) rep.T_fitting_error = e.what();
            else rep.presentation_error = e.what();
        }
    }

    // triple point space route
    try {
        if (g.is_mono()) {
            Codim raw = branch_triple_codim(g.mono());
            rep.branches[0].triple_codim = raw;
            NormalizedBranch nb = normalize_corank1(g.mono());
            DoubleSpaces ds = double_space_ideals(nb);
            oracle_check(rep, opts, "triple space", Ideal(ds.ring3, ds.triple_gens), raw);
            rep.T_triple = divide_by_six(raw);
        } else if (g.branches.size() == 3 && all_immersive(g)) {
            unsigned long total = 0;
            bool inf = false;
            for (size_t i = 0; i < 3; ++i) {
                Codim raw = branch_triple_codim(g.branches[i]);
                rep.branches[i].triple_codim = raw;
                Codim c = divide_by_six(raw);
                if (!c.finite) inf = true;
                else total += c.value;
            }
            Ideal cross = triple_cross_ideal(g);
            Codim cc = local_codim(cross);
            oracle_check(rep, opts, "triple cross", cross, cc);
            if (!cc.finite) inf = true;
            else total += cc.value;
            rep.T_triple = inf ? Codim::inf() : Codim::of(total);
        } else {
            throw not_supported("triple-space route covers mono-germs and the "
                                "three-branch immersive case");
        }
    } catch (const consistency_error&) {
        throw;
    } catch (const error& e) {
        rep.T_triple_error = e.what();
    }

    // the two T routes must agree whenever both ran
    if (rep.T_fitting && rep.T_triple && *rep.T_fitting != *rep.T_triple)
        throw consistency_error("T methods disagree: Fitting gives " +
                                rep.T_fitting->str() + ", triple spaces give " +
                                rep.T_triple->str());
    if (rep.T_fitting) rep.T = rep.T_fitting;
    else if (rep.T_triple) rep.T = rep.T_triple;

    // double point curves
    for (size_t i = 0; i < g.branches.size(); ++i) branch_double_curve(rep, i);

    if (rep.C.finite && rep.T && rep.T->finite)
        rep.L = static_cast<long long>(rep.C.value) - 3ll * static_cast<long long>(rep.T->value);

    decide_verdict(rep);
    return rep;
}

std::optional<long long> invariant_L(const MapGerm& g) {
    ReportOptions opts;
    opts.use_oracle = false;
    return full_report(g, opts).L;
}

Verdict finite_determinacy_verdict(const MapGerm& g) {
    ReportOptions opts;
    opts.use_oracle = false;
    return full_report(g, opts).verdict;
}

} // namespace germlink
