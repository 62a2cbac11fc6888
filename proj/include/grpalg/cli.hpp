#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "grpalg/report.hpp"

namespace grpalg {

namespace detail {

inline int exit_code_for(const error& e) {
    switch (e.code()) {
    case errc::order_bound_exceeded:
    case errc::closure_too_large:
        return 3;
    case errc::not_latin_square:
    case errc::no_identity:
    case errc::not_associative:
    case errc::unknown_name:
    case errc::bad_input:
    case errc::not_a_subgroup:
    case errc::not_normal:
    case errc::not_abelian:
    case errc::bad_parameters:
        return 2;
    default:
        return 1; // internal invariants and everything unexpected
    }
}

inline FiniteGroup load_group(const std::string& group_name, const std::string& input_path,
                              int max_order, ordered_json& input_echo) {
    check(group_name.empty() != input_path.empty(), errc::bad_input,
          "exactly one of --group and --input is required");
    if (!group_name.empty()) {
        input_echo = ordered_json{{"kind", "catalog"}, {"name", group_name}};
        return catalog(group_name, max_order);
    }
    std::ifstream in(input_path);
    check(in.good(), errc::bad_input, "cannot open input file " + input_path);
    ordered_json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::bad_input, std::string("malformed JSON: ") + e.what());
    }
    input_echo = ordered_json{{"kind", "file"}, {"path", input_path}, {"content", j}};
    if (j.contains("table")) {
        check(j.contains("order"), errc::bad_input, "table input needs an \"order\" field");
        int order = j.at("order").get<int>();
        auto table = j.at("table").get<std::vector<std::vector<int>>>();
        std::vector<std::string> labels;
        if (j.contains("labels"))
            labels = j.at("labels").get<std::vector<std::string>>();
        return FiniteGroup::from_table(order, table, std::move(labels));
    }
    if (j.contains("generators")) {
        check(j.contains("degree"), errc::bad_input, "permutation input needs a \"degree\" field");
        int degree = j.at("degree").get<int>();
        auto gens = j.at("generators").get<std::vector<std::vector<std::vector<int>>>>();
        return FiniteGroup::from_permutation_cycles(degree, gens, max_order);
    }
    fail(errc::bad_input, "input JSON needs either \"table\" or \"generators\"");
}

inline void write_output(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(out_path);
    check(f.good(), errc::bad_input, "cannot open output file " + out_path);
    f << text;
}

} // namespace detail

// Command-line front end; returns the process exit code. Errors print a
// machine-readable JSON diagnostic on the error stream: exit 2 for input
// problems, 3 for bound violations, 1 for internal invariant failures.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computational toolkit for rational group algebras and integral group "
                 "ring units"};
    app.require_subcommand(1);

    std::string group_name, input_path, out_path;
    std::string format = "json";
    long seed = 0;
    int max_order = FiniteGroup::kDefaultMaxOrder;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--group", group_name, "catalog group name (e.g. D8, Q16, Q8xC2)");
        sub->add_option("--input", input_path, "path to a group JSON file");
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--max-order", max_order, "construction order bound");
        sub->add_option("--seed", seed, "seed for randomized cross-checks");
        sub->add_option("--out", out_path, "write output to a file");
    };

    CLI::App* cmd_analyze = app.add_subcommand("analyze", "full analysis report");
    CLI::App* cmd_idem = app.add_subcommand("idempotents", "primitive central idempotents");
    CLI::App* cmd_wedd = app.add_subcommand("wedderburn", "Wedderburn component descriptors");
    CLI::App* cmd_units = app.add_subcommand("units", "unit family generators and certificates");
    CLI::App* cmd_central = app.add_subcommand("central", "central unit ranks and generators");
    CLI::App* cmd_pred = app.add_subcommand("predicates", "structure-theorem predicates");
    CLI::App* cmd_list = app.add_subcommand("catalog-list", "list the curated catalog");
    for (CLI::App* sub : {cmd_analyze, cmd_idem, cmd_wedd, cmd_units, cmd_central, cmd_pred})
        add_common(sub);
    cmd_list->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_list->add_option("--out", out_path, "write output to a file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << ordered_json{{"error", "BadUsage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    }

    try {
        if (cmd_list->parsed()) {
            ordered_json list = ordered_json::array();
            for (const auto& name : catalog_names()) {
                auto G = catalog(name);
                list.push_back(ordered_json{{"name", name}, {"order", G.order()}});
            }
            if (format == "text") {
                std::ostringstream os;
                for (const auto& item : list)
                    os << item.at("name").get<std::string>() << " "
                       << item.at("order").get<long>() << "\n";
                detail::write_output(os.str(), out_path, out);
            } else {
                detail::write_output(list.dump(2) + "\n", out_path, out);
            }
            return 0;
        }

        ordered_json input_echo;
        FiniteGroup G = detail::load_group(group_name, input_path, max_order, input_echo);
        AnalysisOptions opt;
        opt.seed = seed;
        opt.max_order = max_order;

        ordered_json doc;
        if (cmd_analyze->parsed()) {
            doc = build_analysis_report(G, input_echo, opt);
        } else {
            doc = ordered_json{{"tool", ordered_json{{"name", kToolName}, {"version", kToolVersion}}},
                               {"input", input_echo},
                               {"seed", seed},
                               {"group", group_summary_json(G)}};
            if (cmd_idem->parsed()) {
                doc["idempotents"] = idempotents_json(G, pci_strongly_monomial(G, opt.subgroup_bound));
            } else if (cmd_wedd->parsed()) {
                doc["wedderburn"] = wedderburn_json(decomposition_report(G, opt.subgroup_bound));
            } else if (cmd_units->parsed()) {
                doc["units"] = units_json(G, seed);
            } else if (cmd_central->parsed()) {
                doc["central"] = central_json(G);
            } else if (cmd_pred->parsed()) {
                doc["predicates"] = predicates_json(G, decomposition_report(G, opt.subgroup_bound));
            }
        }
        std::string text = format == "text" ? render_text(doc) : doc.dump(2) + "\n";
        detail::write_output(text, out_path, out);
        return 0;
    } catch (const error& e) {
        err << ordered_json{{"error", errc_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return detail::exit_code_for(e);
    } catch (const std::exception& e) {
        err << ordered_json{{"error", "Internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
}

} // namespace grpalg
