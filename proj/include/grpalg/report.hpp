#pragma once

#include <chrono>
#include <json.hpp>

#include "grpalg/wedderburn.hpp"

namespace grpalg {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "grpalg";
inline constexpr const char* kToolVersion = "0.1.0";

struct AnalysisOptions {
    long seed = 0;
    int max_order = FiniteGroup::kDefaultMaxOrder;
    int subgroup_bound = FiniteGroup::kDefaultAssocBound;
    bool include_timings = true;
};

inline ordered_json element_json(const ZGElement& x) {
    ordered_json terms = ordered_json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back(ordered_json::array({g, int_str(c)}));
    return ordered_json{{"ring", "INT"}, {"terms", terms}};
}

inline ordered_json element_json(const QGElement& x) {
    ordered_json terms = ordered_json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back(ordered_json::array({g, rat_str(c)}));
    return ordered_json{{"ring", "RAT"}, {"terms", terms}};
}

inline ordered_json cyclotomic_json(const Cyclotomic& z) {
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : z.coeffs())
        coeffs.push_back(rat_str(c));
    return ordered_json{{"conductor", z.conductor()}, {"coeffs", coeffs}};
}

inline ordered_json element_json(const CycGElement& x) {
    int conductor = 1;
    for (const auto& [g, c] : x.terms())
        conductor = std::max(conductor, c.conductor());
    ordered_json terms = ordered_json::array();
    for (const auto& [g, c] : x.terms())
        terms.push_back(ordered_json::array({g, cyclotomic_json(c)}));
    return ordered_json{{"ring", "CYC(" + std::to_string(conductor) + ")"}, {"terms", terms}};
}

inline ordered_json subgroup_json(const Subgroup& S) {
    ordered_json m = ordered_json::array();
    for (int g : S.members)
        m.push_back(g);
    return m;
}

inline ordered_json group_summary_json(const FiniteGroup& G) {
    auto cc = conjugacy_classes(G);
    ordered_json labels = ordered_json::array();
    for (const auto& l : G.labels())
        labels.push_back(l);
    return ordered_json{
        {"name", G.name().empty() ? ordered_json(nullptr) : ordered_json(G.name())},
        {"order", G.order()},
        {"abelian", G.is_abelian()},
        {"exponent", G.exponent()},
        {"identity", G.identity()},
        {"labels", labels},
        {"center", subgroup_json(center(G))},
        {"derived_subgroup", subgroup_json(commutator_subgroup(G))},
        {"classes",
         ordered_json{{"count", cc.class_count},
                      {"real_closed", cc.real_closed_count},
                      {"cyclic_subgroup_classes", cyclic_subgroup_class_count(G)}}},
    };
}

inline ordered_json idempotents_json(const FiniteGroup& G, const PCISet& pci) {
    ordered_json items = ordered_json::array();
    for (const auto& entry : pci.idempotents) {
        ShodaPairRecord rec = is_strong_shoda_pair(G, entry.H, entry.K);
        ordered_json flags{{"s1", rec.s1}, {"s2", rec.s2}, {"s3", rec.s3},
                           {"ss1", rec.ss1}, {"ss2", rec.ss2}, {"ss3", rec.ss3}};
        auto idrec = idempotent_record(entry.idempotent);
        items.push_back(ordered_json{
            {"pair", ordered_json{{"H", subgroup_json(entry.H)}, {"K", subgroup_json(entry.K)}}},
            {"provenance",
             entry.provenance == PCIProvenance::abelian_epsilon ? "abelian_epsilon" : "strong_shoda"},
            {"flags", flags},
            {"epsilon", element_json(rec.eps)},
            {"e", element_json(entry.idempotent)},
            {"n_e", int_str(idrec.n_e)},
        });
    }
    return ordered_json{{"complete", pci.complete},
                        {"certified_strongly_monomial", pci.certified_strongly_monomial},
                        {"count", pci.idempotents.size()},
                        {"items", items}};
}

// "4Q + M2(Q)"-style line: components sorted by (dimension, display) and
// merged with multiplicities.
inline std::string decomposition_display(const Decomposition& dec) {
    std::vector<std::pair<long, std::string>> items;
    for (const auto& e : dec.entries)
        items.emplace_back(e.desc.dimension, e.cls.display);
    std::sort(items.begin(), items.end());
    std::string out;
    for (size_t i = 0; i < items.size();) {
        size_t j = i;
        while (j < items.size() && items[j].second == items[i].second)
            ++j;
        if (!out.empty())
            out += " + ";
        if (j - i > 1)
            out += std::to_string(j - i);
        out += items[i].second;
        i = j;
    }
    return out.empty() ? "0" : out;
}

inline ordered_json wedderburn_json(const Decomposition& dec) {
    ordered_json comps = ordered_json::array();
    long total = 0;
    for (const auto& e : dec.entries) {
        total += e.desc.dimension;
        ordered_json action = ordered_json::array();
        for (size_t c = 0; c < e.desc.coset_reps.size(); ++c)
            action.push_back(ordered_json::array({e.desc.coset_reps[c], e.desc.action[c]}));
        ordered_json twisting = ordered_json::array();
        for (const auto& row : e.desc.twisting) {
            ordered_json r = ordered_json::array();
            for (int v : row)
                r.push_back(v);
            twisting.push_back(r);
        }
        ordered_json center_j{{"conductor", e.desc.center.conductor},
                              {"galois_image", e.desc.center.galois_image},
                              {"degree", e.desc.center.degree},
                              {"display", e.desc.center.display()}};
        const char* kind = nullptr;
        switch (e.cls.kind) {
        case ComponentKind::field: kind = "field"; break;
        case ComponentKind::matrix_over_field: kind = "matrix_over_field"; break;
        case ComponentKind::quaternion_division: kind = "quaternion_division"; break;
        case ComponentKind::quaternion_split: kind = "quaternion_split"; break;
        case ComponentKind::crossed_unresolved: kind = "crossed_unresolved"; break;
        }
        ordered_json cls{{"kind", kind},
                         {"matrix_size", e.cls.matrix_size},
                         {"display", e.cls.display},
                         {"exceptional", exceptional_name(e.cls.exceptional)},
                         {"totally_definite", tri_name(e.cls.totally_definite)}};
        if (e.cls.quat)
            cls["quaternion_params"] = ordered_json::array(
                {rat_str(e.cls.quat->a), rat_str(e.cls.quat->b)});
        comps.push_back(ordered_json{
            {"pair", ordered_json{{"H", subgroup_json(e.desc.H)}, {"K", subgroup_json(e.desc.K)}}},
            {"n", e.desc.n},
            {"h", e.desc.h},
            {"quotient_order", e.desc.quotient_order},
            {"action", action},
            {"twisting", twisting},
            {"center", center_j},
            {"dimension", e.desc.dimension},
            {"faithful", e.desc.faithful},
            {"classification", cls},
        });
    }
    return ordered_json{{"display", decomposition_display(dec)},
                        {"dimension_sum", total},
                        {"components", comps}};
}

inline ordered_json units_json(const FiniteGroup& G, long seed) {
    auto gens = jespers_leal_generators(G);
    std::map<std::string, int> counts;
    for (const auto& cu : gens)
        ++counts[unit_kind_name(cu.kind)];
    ordered_json counts_j = ordered_json::object();
    for (const auto& [k, v] : counts)
        counts_j[k] = v;

    ordered_json out{{"counts", counts_j}, {"generator_count", gens.size()},
                     {"all_certified", true}};

    if (G.order() <= 16) {
        ordered_json list = ordered_json::array();
        for (const auto& cu : gens) {
            auto ord = element_order_bruteforce(cu, 2L * G.order() * G.order());
            list.push_back(ordered_json{
                {"kind", unit_kind_name(cu.kind)},
                {"params", cu.params},
                {"normalized", cu.normalized},
                {"order", ord.order ? ordered_json(*ord.order) : ordered_json("infinite")},
                {"u", element_json(cu.u)},
                {"u_inv", element_json(cu.u_inv)},
            });
        }
        out["generators"] = list;

        ordered_json certs = ordered_json::array();
        std::set<std::map<int, Int>> seen;
        for (int mid = 0; mid < G.order(); ++mid)
            for (int tld = 0; tld < G.order(); ++tld) {
                if (bicyclic_is_trivial(G, mid, tld))
                    continue;
                auto ms = marciniak_sehgal_pair(G, mid, tld);
                if (!seen.insert(ms.u.u.terms()).second)
                    continue;
                certs.push_back(ordered_json{{"middle", G.label(mid)},
                                             {"tilde", G.label(tld)},
                                             {"trace", rat_str(ms.certificate.trace_value)},
                                             {"threshold", rat_str(ms.certificate.threshold)}});
            }
        out["free_pair_certificates"] = certs;
    }

    // seeded randomized cross-checks of the Bass identities
    std::mt19937_64 rng(static_cast<uint64_t>(seed) * 0x9e3779b97f4a7c15ull + 1);
    int checked = 0;
    for (int tries = 0; tries < 400 && checked < 20; ++tries) {
        int g = static_cast<int>(rng() % G.order());
        long n = G.element_order(g);
        if (n < 3)
            continue;
        std::vector<long> ks;
        for (long k = 2; k < n; ++k)
            if (std::gcd(k, n) == 1)
                ks.push_back(k);
        if (ks.empty())
            continue;
        long k = ks[rng() % ks.size()];
        long m = multiplicative_order(k, n);
        auto a = bass_unit(G, g, k, m);
        auto b = bass_unit(G, g, k, 2 * m);
        invariant(a.u * a.u == b.u, "Bass m-additivity failed in report cross-check");
        ++checked;
    }
    out["bass_identity_checks"] = ordered_json{{"seed", seed}, {"instances", checked},
                                               {"passed", true}};
    return out;
}

inline ordered_json central_json(const FiniteGroup& G) {
    RankBreakdown rb = central_rank(G);
    bool cut = is_cut(G);
    ordered_json gens_j;
    try {
        auto gens = central_generators(G);
        gens_j = ordered_json{{"eligible", true},
                              {"count", gens.units.size()},
                              {"nontorsion_count", gens.nontorsion_count},
                              {"count_at_least_rank", gens.count_at_least_rank}};
        if (G.order() <= 16) {
            ordered_json list = ordered_json::array();
            for (const auto& cu : gens.units)
                list.push_back(ordered_json{{"params", cu.params}, {"u", element_json(cu.u)}});
            gens_j["units"] = list;
        }
    } catch (const error& e) {
        if (e.code() != errc::not_eligible)
            throw;
        gens_j = ordered_json{{"eligible", false}, {"reason", e.what()}};
    }
    return ordered_json{
        {"c", rb.c},
        {"c_prime", rb.c_prime},
        {"d", rb.d},
        {"r_real", rb.r_real},
        {"r_rational", rb.r_rational},
        {"rank", rb.rank},
        {"abelian_formula_rank",
         rb.abelian_formula_rank ? ordered_json(*rb.abelian_formula_rank) : ordered_json(nullptr)},
        {"cut", cut},
        {"generators", gens_j},
    };
}

inline ordered_json predicates_json(const FiniteGroup& G, const Decomposition& dec) {
    auto jp = jespers_parmenter_obstruction(G);
    ordered_json jp_j{{"verdict", jp.verdict == JPVerdict::applies ? "applies" : "not_applicable"}};
    if (jp.kernel) {
        jp_j["kernel"] = subgroup_json(*jp.kernel);
        ordered_json lacking = ordered_json::array();
        static const FiniteGroup d8 = dihedral_group(8);
        for (int t : jp.lacking)
            lacking.push_back(d8.label(t));
        jp_j["lacking"] = lacking;
    }
    return ordered_json{
        {"higman_finite_units", tri_name(higman_finite_units(G))},
        {"virtually_free_product_abelian", tri_name(virtually_free_product_abelian(G))},
        {"virtually_free_by_free", tri_name(virtually_free_by_free(dec))},
        {"has_exceptional", tri_name(has_exceptional(dec))},
        {"hfa", tri_name(hfa(G, dec))},
        {"cut", is_cut(G)},
        {"jespers_parmenter", jp_j},
    };
}

// Re-validate cross-section consistency from the serialized numbers; a
// failure here aborts emission.
inline void validate_report(const ordered_json& doc) {
    long order = doc.at("group").at("order").get<long>();
    long dimsum = doc.at("wedderburn").at("dimension_sum").get<long>();
    invariant(dimsum == order, "report dimension sum mismatch");
    long d = doc.at("group").at("classes").at("cyclic_subgroup_classes").get<long>();
    long comps = static_cast<long>(doc.at("wedderburn").at("components").size());
    invariant(comps == d, "report component count differs from the Artin count");
    bool cut = doc.at("central").at("cut").get<bool>();
    long rank = doc.at("central").at("rank").get<long>();
    invariant(cut == (rank == 0), "report cut flag contradicts the rank");
    invariant(doc.at("central").at("cut") == doc.at("predicates").at("cut"),
              "cut flag differs between sections");
}

inline ordered_json build_analysis_report(const FiniteGroup& G, const ordered_json& input_echo,
                                          const AnalysisOptions& opt = {}) {
    using clock = std::chrono::steady_clock;
    auto ms_since = [](clock::time_point t0) {
        return std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();
    };
    ordered_json doc{{"tool", ordered_json{{"name", kToolName}, {"version", kToolVersion}}},
                     {"input", input_echo},
                     {"seed", opt.seed}};
    ordered_json timings = ordered_json::object();

    auto t0 = clock::now();
    doc["group"] = group_summary_json(G);
    timings["group"] = ms_since(t0);

    t0 = clock::now();
    Decomposition dec = decomposition_report(G, opt.subgroup_bound);
    doc["idempotents"] = idempotents_json(G, dec.pci);
    timings["idempotents"] = ms_since(t0);

    t0 = clock::now();
    doc["wedderburn"] = wedderburn_json(dec);
    timings["wedderburn"] = ms_since(t0);

    t0 = clock::now();
    doc["units"] = units_json(G, opt.seed);
    timings["units"] = ms_since(t0);

    t0 = clock::now();
    doc["central"] = central_json(G);
    timings["central"] = ms_since(t0);

    t0 = clock::now();
    doc["predicates"] = predicates_json(G, dec);
    timings["predicates"] = ms_since(t0);

    if (opt.include_timings)
        doc["timings_ms"] = timings;
    validate_report(doc);
    return doc;
}

// ---- plain-text rendering --------------------------------------------------

inline std::string render_text(const ordered_json& doc) {
    std::ostringstream os;
    const auto& g = doc.at("group");
    std::string name = g.at("name").is_null() ? "(table input)" : g.at("name").get<std::string>();
    os << "group " << name << " (order " << g.at("order").get<long>() << ")\n";
    os << "abelian: " << (g.at("abelian").get<bool>() ? "yes" : "no")
       << ", exponent " << g.at("exponent").get<long>() << "\n";
    const auto& cls = g.at("classes");
    os << "classes: c=" << cls.at("count").get<long>()
       << ", real-closed c'=" << cls.at("real_closed").get<long>()
       << ", cyclic-subgroup classes d=" << cls.at("cyclic_subgroup_classes").get<long>() << "\n";
    if (doc.contains("wedderburn")) {
        os << "wedderburn: " << doc.at("wedderburn").at("display").get<std::string>() << "\n";
        os << "idempotents: " << doc.at("idempotents").at("count").get<size_t>() << " (complete: "
           << (doc.at("idempotents").at("complete").get<bool>() ? "yes" : "no")
           << ", certified strongly monomial: "
           << (doc.at("idempotents").at("certified_strongly_monomial").get<bool>() ? "yes" : "no")
           << ")\n";
    }
    if (doc.contains("units")) {
        os << "units:";
        for (const auto& [k, v] : doc.at("units").at("counts").items())
            os << " " << k << "=" << v.get<long>();
        if (doc.at("units").at("counts").empty())
            os << " none";
        os << "\n";
    }
    if (doc.contains("central")) {
        const auto& c = doc.at("central");
        os << "central: rank " << c.at("rank").get<long>() << " ((c+c')/2 - d = "
           << c.at("r_real").get<long>() << " - " << c.at("d").get<long>() << "), cut "
           << (c.at("cut").get<bool>() ? "yes" : "no") << "\n";
    }
    if (doc.contains("predicates")) {
        const auto& p = doc.at("predicates");
        os << "predicates: higman=" << p.at("higman_finite_units").get<std::string>()
           << " vfpa=" << p.at("virtually_free_product_abelian").get<std::string>()
           << " vfbf=" << p.at("virtually_free_by_free").get<std::string>()
           << " exceptional=" << p.at("has_exceptional").get<std::string>()
           << " hfa=" << p.at("hfa").get<std::string>()
           << " jespers_parmenter=" << p.at("jespers_parmenter").at("verdict").get<std::string>()
           << "\n";
    }
    return os.str();
}

} // namespace grpalg
