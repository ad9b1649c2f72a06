// Batch front end: instance files in, validated computations out.
// Exit codes: 0 success, 1 internal error or verification failure,
// 2 validation rejection, 3 budget exhaustion.

#include "fsig/errors.hpp"
#include "fsig/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
    CLI::App app{"exact Frobenius-power colengths, Hilbert-Kunz functions and truncated "
                 "F-rational signatures"};

    std::string instance_path;
    app.add_option("instance", instance_path, "instance file")->required();

    unsigned e_max = 2;
    auto* e_max_opt = app.add_option("--e-max", e_max, "largest Frobenius level (default 2)");
    std::string order = "grevlex";
    auto* order_opt =
        app.add_option("--order", order, "monomial order: grevlex|lex (default grevlex)")
            ->check(CLI::IsMember({"grevlex", "lex"}));
    int dim = 0;
    auto* dim_opt = app.add_option("--dim", dim, "override the ring dimension");
    std::uint64_t budget = 1000000;
    auto* budget_opt =
        app.add_option("--budget", budget, "subspace enumeration budget (default 10^6)");
    bool rank1 = false;
    auto* rank1_opt = app.add_flag("--rank1-only", rank1, "restrict to single-element ideals");
    int parallel = 1;
    app.add_option("--parallel", parallel, "worker pool size for candidate evaluation");
    std::string format = "table";
    app.add_option("--format", format, "stdout format: table|json|csv (default table)")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    std::string out_path;
    app.add_option("--out", out_path, "write the JSON report to this path");
    bool emit_gb = false;
    app.add_flag("--emit-gb", emit_gb, "include reduced Groebner bases in the JSON report");
    std::size_t oracle_max_dim = 600;
    app.add_option("--oracle-max-dim", oracle_max_dim,
                   "largest bracket-quotient dimension for the structure-constant cross-check "
                   "(default 600)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(instance_path);
        if (!in) {
            std::cerr << "error: cannot open '" << instance_path << "'\n";
            return 2;
        }
        std::stringstream buffer;
        buffer << in.rdbuf();

        fsig::InstanceFile file = fsig::parse_instance(buffer.str());

        fsig::RunOptions run;
        run.instance_label = instance_path;
        run.signature.parallel = parallel;
        run.signature.oracle_max_dim = oracle_max_dim;
        if (e_max_opt->count()) run.e_max_flag = e_max;
        if (order_opt->count()) run.order_flag = order;
        if (dim_opt->count()) run.dim_flag = dim;
        if (budget_opt->count()) run.budget_flag = budget;
        if (rank1_opt->count()) run.rank1_flag = rank1;
        run.emit_gb = emit_gb;

        fsig::RunOutput output = fsig::run_instance(file, run);

        if (format == "json") {
            std::cout << output.json.dump(2) << "\n";
        } else if (format == "csv") {
            std::cout << fsig::csv_header() << "\n";
            for (const auto& row : output.csv_rows) std::cout << fsig::csv_line(row) << "\n";
        } else {
            std::cout << output.table;
        }
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write '" << out_path << "'\n";
                return 1;
            }
            out << output.json.dump(2) << "\n";
        }
        return output.verify_failed ? 1 : 0;
    } catch (const fsig::BudgetError& err) {
        std::cerr << "budget exhausted: " << err.what() << "\n";
        return 3;
    } catch (const fsig::ValidationError& err) {
        std::cerr << "rejected: " << err.what() << "\n";
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
}
