// toren: exact computer-algebra workbench for degree bounds of matrix-group
// scalar cones. Subcommands: bounds, algorithm1, degree, examples, verify.

#include <CLI11.hpp>

#include <iostream>

#include "toren/bounds.hpp"
#include "toren/envelope.hpp"
#include "toren/io.hpp"
#include "toren/verify.hpp"

namespace {

using toren::Json;

Json profile_json(const toren::VarietyProfile& p) {
    Json j;
    j["dimension"] = p.dimension;
    // exact integer; emitted as a number when it fits, a decimal string beyond
    if (p.degree.fits_slong_p())
        j["degree"] = p.degree.get_si();
    else
        j["degree"] = p.degree.get_str();
    return j;
}

Json bound_report_json(const toren::BoundReport& r) {
    Json j;
    j["n"] = r.n;
    j["schur"] = r.schur.get_str();
    j["schur_exact"] = r.schur_exact;
    j["abelian_exact"] = r.abelian_exact ? Json(r.abelian_exact->get_str()) : Json(nullptr);
    j["abelian_upper"] = r.abelian_upper.get_str();
    j["unipotent"] = r.unipotent.get_str();
    j["reductive"] = r.reductive ? Json(r.reductive->get_str()) : Json(nullptr);
    j["product_factor"] = r.product_factor.get_str();
    j["tight"] = r.tight ? Json(r.tight->get_str()) : Json(nullptr);
    j["headline"] = r.headline.get_str();
    j["factorial"] = r.factorial.get_str();
    j["tight_le_headline"] = r.tight_le_headline;
    return j;
}

void print_bound_text(const toren::BoundReport& r, std::ostream& out) {
    out << "n = " << r.n << "\n"
        << "  schur          " << r.schur.get_str() << (r.schur_exact ? "" : "  (ceiling)")
        << "\n"
        << "  abelian        "
        << (r.abelian_exact ? r.abelian_exact->get_str() + " (exact)"
                            : "<= " + r.abelian_upper.get_str())
        << "\n"
        << "  unipotent      " << r.unipotent.get_str() << "\n";
    if (r.reductive) out << "  reductive      " << r.reductive->get_str() << "\n";
    out << "  product_factor " << r.product_factor.get_str() << "\n";
    if (r.tight)
        out << "  tight          " << r.tight->get_str()
            << (r.tight_le_headline ? "" : "  (exceeds headline)") << "\n";
    out << "  headline       " << r.headline.get_str() << "\n"
        << "  factorial      " << r.factorial.get_str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact degree-bound workbench for matrix-group scalar cones"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    // bounds --n <int> [--to <int>]
    auto* bounds_cmd = app.add_subcommand("bounds", "evaluate every closed-form bound");
    bounds_cmd->fallthrough();
    unsigned bounds_n = 0, bounds_to = 0;
    bounds_cmd->add_option("--n", bounds_n, "dimension (start of range)")
        ->required()
        ->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--to", bounds_to, "end of range (inclusive)")->check(CLI::PositiveNumber);

    // algorithm1 (--group <name> | --file <path>) [--order ...] [--strategy ...]
    auto* alg_cmd = app.add_subcommand(
        "algorithm1", "degree-bound search on the scalar cone of a finite SL2 subgroup");
    alg_cmd->fallthrough();
    std::string alg_group, alg_file, alg_order = "grlex", alg_strategy = "interpolation";
    auto* galt = alg_cmd->add_option("--group", alg_group, "catalog group name");
    auto* falt = alg_cmd->add_option("--file", alg_file, "group JSON file");
    galt->excludes(falt);
    falt->excludes(galt);
    alg_cmd->add_option("--order", alg_order, "monomial order")
        ->check(CLI::IsMember({"grlex", "grevlex"}))
        ->capture_default_str();
    alg_cmd->add_option("--strategy", alg_strategy, "cone ideal construction")
        ->check(CLI::IsMember({"intersection", "interpolation"}))
        ->capture_default_str();

    // degree --ideal <path>
    auto* degree_cmd = app.add_subcommand("degree", "dimension and degree of an ideal's variety");
    degree_cmd->fallthrough();
    std::string degree_path;
    degree_cmd->add_option("--ideal", degree_path, "ideal JSON file")->required();

    // examples [--name <tag>] [--param <int>]
    auto* ex_cmd = app.add_subcommand("examples", "worked-example degree reports");
    ex_cmd->fallthrough();
    std::string ex_name;
    unsigned ex_param = 0;
    ex_cmd->add_option("--name", ex_name, "example family");
    ex_cmd->add_option("--param", ex_param, "family parameter")->check(CLI::PositiveNumber);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance catalog");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bounds_cmd) {
            if (bounds_n == 0) throw toren::Error("--n must be positive");
            unsigned last = bounds_to == 0 ? bounds_n : bounds_to;
            if (last < bounds_n) throw toren::Error("--to must not be below --n");
            if (bounds_to == 0) {
                toren::BoundReport r = toren::bound_report(bounds_n);
                if (format == "text")
                    print_bound_text(r, std::cout);
                else
                    std::cout << bound_report_json(r).dump(2) << "\n";
            } else {
                Json arr = Json::array();
                for (unsigned n = bounds_n; n <= last; ++n) {
                    toren::BoundReport r = toren::bound_report(n);
                    if (format == "text")
                        print_bound_text(r, std::cout);
                    else
                        arr.push_back(bound_report_json(r));
                }
                if (format == "json") {
                    Json j;
                    j["bounds"] = std::move(arr);
                    std::cout << j.dump(2) << "\n";
                }
            }
        } else if (*alg_cmd) {
            if (alg_group.empty() == alg_file.empty())
                throw toren::Error("exactly one of --group or --file is required");
            toren::FiniteMatGroup g = alg_group.empty()
                                          ? toren::load_group_file(alg_file)
                                          : toren::named_group(toren::GroupName::parse(alg_group));
            toren::MonomialOrder order = toren::order_from_string(alg_order);
            toren::ConeStrategy strategy = alg_strategy == "intersection"
                                               ? toren::ConeStrategy::intersection
                                               : toren::ConeStrategy::interpolation;
            toren::EnvelopeBoundResult r = toren::degree_bound_search(g, order, strategy);
            Json j;
            j["group"] = alg_group.empty() ? alg_file : alg_group;
            j["order_of_group"] = r.group_order;
            j["num_lines"] = r.num_lines;
            j["gb_max_degree"] = r.max_gb_degree;
            j["d"] = r.d;
            j["degree"] = profile_json(r.profile)["degree"];
            j["order"] = alg_order;
            if (format == "text")
                std::cout << "group " << j["group"].get<std::string>() << ": |G| = "
                          << r.group_order << ", lines = " << r.num_lines
                          << ", max GB degree = " << r.max_gb_degree << ", d = " << r.d
                          << ", cone degree = " << r.profile.degree.get_str() << " (" << alg_order
                          << ")\n";
            else
                std::cout << j.dump(2) << "\n";
        } else if (*degree_cmd) {
            toren::IdealFile f = toren::load_ideal_file(degree_path);
            toren::Ideal ideal = f.ideal.order().is_graded()
                                     ? f.ideal
                                     : f.ideal.with_order(toren::MonomialOrder::grlex());
            toren::VarietyProfile p = toren::variety_profile(ideal);
            Json j = profile_json(p);
            if (format == "text")
                std::cout << "dimension " << p.dimension << ", degree " << p.degree.get_str()
                          << "\n";
            else
                std::cout << j.dump(2) << "\n";
        } else if (*ex_cmd) {
            std::optional<std::string> name;
            if (!ex_name.empty()) name = ex_name;
            std::optional<unsigned> param;
            if (ex_param != 0) param = ex_param;
            std::vector<toren::WorkedExample> rows = toren::example_degrees(name, param);
            Json arr = Json::array();
            for (const toren::WorkedExample& e : rows) {
                Json j;
                j["name"] = e.name;
                j["param"] = e.param;
                j["group"] = profile_json(e.group_profile);
                j["envelope"] = e.envelope_profile ? profile_json(*e.envelope_profile)
                                                   : Json(nullptr);
                arr.push_back(std::move(j));
            }
            if (format == "text") {
                for (const toren::WorkedExample& e : rows) {
                    std::cout << e.name << "(" << e.param << "): dimension "
                              << e.group_profile.dimension << ", degree "
                              << e.group_profile.degree.get_str();
                    if (e.envelope_profile)
                        std::cout << "; envelope dimension " << e.envelope_profile->dimension
                                  << ", degree " << e.envelope_profile->degree.get_str();
                    std::cout << "\n";
                }
            } else {
                Json j;
                j["examples"] = std::move(arr);
                std::cout << j.dump(2) << "\n";
            }
        } else if (*verify_cmd) {
            std::vector<toren::CheckResult> results = toren::run_verification();
            bool all = true;
            Json arr = Json::array();
            for (const toren::CheckResult& r : results) {
                all = all && r.pass;
                Json j;
                j["name"] = r.name;
                j["pass"] = r.pass;
                j["detail"] = r.detail;
                arr.push_back(std::move(j));
                if (format == "text")
                    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name
                              << (r.pass ? "" : "  -- " + r.detail) << "\n";
            }
            if (format == "json") {
                Json j;
                j["checks"] = std::move(arr);
                j["pass"] = all;
                std::cout << j.dump(2) << "\n";
            }
            return all ? 0 : 1;
        }
    } catch (const toren::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
