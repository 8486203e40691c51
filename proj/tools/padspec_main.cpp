#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "padspec/suites.hpp"

namespace {

using padspec::Json;

Json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path);
        if (!in) throw padspec::InputError("cannot open input file: " + path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw padspec::InputError(std::string("malformed JSON: ") + e.what());
    }
}

void write_output(const std::string& path, const Json& j) {
    if (path.empty() || path == "-") {
        std::cout << j.dump() << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw padspec::InputError("cannot open output file: " + path);
    out << j.dump() << "\n";
}

int emit_error(const padspec::Error& e) {
    Json err{{"error", {{"kind", e.kind()}, {"message", e.what()}}}};
    std::cout << err.dump() << "\n";
    return 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact non-Archimedean spectral calculator"};
    app.require_subcommand(1);

    padspec::SuiteParams params;
    std::string suite = "all";
    bool timings = false;
    std::size_t dim_max = 8;

    auto* verify = app.add_subcommand("verify", "run named verification suites");
    verify->add_option("--suite", suite, "suite id or 'all'");
    verify->add_option("--seed", params.seed, "sampling seed");
    verify->add_option("--samples", params.samples, "samples per suite");
    verify->add_option("--p", params.p, "prime of the scalar field");
    verify->add_option("--precision", params.precision, "working precision (base-p digits)");
    verify->add_option("--dim-max", dim_max, "cap on sampled dimensions")
        ->check(CLI::Range(std::size_t{1}, std::size_t{64}));
    verify->add_flag("--timings", timings, "include wall-clock in the report lines");

    std::string in_path, out_path;
    auto add_io = [&](CLI::App* cmd) {
        cmd->add_option("-i,--input", in_path, "input JSON file (default stdin)");
        cmd->add_option("-o,--output", out_path, "output JSON file (default stdout)");
    };
    auto* adjoint = app.add_subcommand("adjoint", "adjoint of an operator");
    auto* norm = app.add_subcommand("norm", "exact operator norm");
    auto* gelfand_cmd = app.add_subcommand(
        "gelfand", "transform of a projector-algebra element (or inverse, given a table)");
    auto* integrate = app.add_subcommand("integrate",
                                         "spectral integral of a step function");
    auto* decompose = app.add_subcommand("decompose",
                                         "spectral decomposition of a diagonal operator");
    for (auto* cmd : {adjoint, norm, gelfand_cmd, integrate, decompose}) add_io(cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    }

    try {
        if (verify->parsed()) {
            params.dim_max = dim_max;
            std::vector<padspec::SuiteReport> reports;
            if (suite == "all") {
                reports = padspec::run_all_suites(params);
            } else {
                reports.push_back(padspec::run_suite(suite, params));
            }
            bool all_pass = true;
            double total_ms = 0;
            for (const auto& r : reports) {
                std::cout << padspec::suite_report_to_json(r, timings).dump() << "\n";
                all_pass = all_pass && r.pass;
                total_ms += r.millis;
            }
            std::cerr << (all_pass ? "ok" : "FAILED") << ": " << reports.size()
                      << " suites in " << static_cast<long>(total_ms) << " ms\n";
            return all_pass ? 0 : 1;
        }

        if (adjoint->parsed()) {
            padspec::Operator u = padspec::operator_from_json(read_input(in_path));
            write_output(out_path, padspec::operator_to_json(padspec::adjoint_omega(u)));
            return 0;
        }
        if (norm->parsed()) {
            padspec::Operator u = padspec::operator_from_json(read_input(in_path));
            write_output(out_path,
                         Json{{"norm", padspec::lognorm_to_json(padspec::op_norm(u))}});
            return 0;
        }
        if (gelfand_cmd->parsed()) {
            Json in = read_input(in_path);
            if (in.contains("table")) {
                // inverse direction: reconstruct the algebra element
                padspec::SpacePtr sp = padspec::space_from_json(in.at("space"));
                if (!in.contains("partition") || !in.at("partition").is_array())
                    throw padspec::InputError("inverse needs a 'partition' array");
                padspec::GelfandTable table;
                for (const auto& block : in.at("partition")) {
                    padspec::IndexSubset b;
                    for (const auto& i : block) {
                        if (!i.is_number_unsigned())
                            throw padspec::InputError("block indices must be unsigned");
                        b.push_back(i.get<std::size_t>());
                    }
                    table.partition.push_back(padspec::normalize_subset(std::move(b)));
                }
                if (!in.at("table").is_array())
                    throw padspec::InputError("'table' must be an array of scalars");
                for (const auto& v : in.at("table"))
                    table.values.push_back(padspec::scalar_from_json(v));
                padspec::BElement u = padspec::gelfand_inverse(sp, table);
                write_output(out_path, padspec::belement_to_json(u));
                return 0;
            }
            padspec::BElement u = padspec::belement_from_json(in);
            padspec::GelfandTable table = padspec::gelfand(u);
            Json values = Json::array();
            for (const auto& v : table.values) values.push_back(padspec::scalar_to_json(v));
            Json partition = Json::array();
            for (const auto& block : table.partition) {
                Json b = Json::array();
                for (auto i : block) b.push_back(i);
                partition.push_back(std::move(b));
            }
            write_output(out_path, Json{{"space", padspec::space_to_json(*u.space())},
                                        {"partition", partition},
                                        {"table", values}});
            return 0;
        }
        if (integrate->parsed()) {
            Json in = read_input(in_path);
            if (!in.contains("pvm") || !in.contains("f"))
                throw padspec::InputError("integrate expects {\"pvm\":..., \"f\":...}");
            padspec::ProjectionValuedMeasure p = padspec::pvm_from_json(in.at("pvm"));
            padspec::StepFunction f = padspec::step_from_json(
                in.at("f"), p.algebra(), p.space()->prime(), p.space()->precision());
            write_output(out_path,
                         padspec::operator_to_json(padspec::spectral_integral(f, p)));
            return 0;
        }
        if (decompose->parsed()) {
            padspec::Operator b = padspec::operator_from_json(read_input(in_path));
            padspec::SpectralDecomposition dec = padspec::spectral_decompose_diagonal(b);
            write_output(out_path, padspec::decomposition_to_json(dec));
            return 0;
        }
    } catch (const padspec::Error& e) {
        return emit_error(e);
    } catch (const std::exception& e) {
        Json err{{"error", {{"kind", "internal"}, {"message", e.what()}}}};
        std::cout << err.dump() << "\n";
        return 2;
    }
    return 2;
}
