#include "CLI11.hpp"

#include "lagspread/moments.hpp"
#include "lagspread/renyi_algebraic.hpp"
#include "lagspread/renyi_bell.hpp"
#include "lagspread/report.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInconsistent = 3;

unsigned long term_cap_from_env(bool& ok) {
    ok = true;
    const char* env = std::getenv("SPREAD_TERM_CAP");
    if (!env || !*env) return lagspread::kDefaultTermCap;
    char* end = nullptr;
    const unsigned long cap = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0' || cap == 0) {
        ok = false;
        return lagspread::kDefaultTermCap;
    }
    return cap;
}

struct MeasureArgs {
    int n = 0;
    double alpha = 0.0;
    std::vector<double> qs{2.0};
    std::string engine = "both";
    std::string precision;  // "", "exact", "float"
    bool check = false;
};

int run_measure(const MeasureArgs& args) {
    using namespace lagspread;

    PolySpec spec{0, 0.0};
    try {
        spec = PolySpec{args.n, args.alpha};
    } catch (const std::exception& e) {
        std::cerr << "measure: " << e.what() << '\n';
        return kExitUsage;
    }

    if (args.engine != "algebraic" && args.engine != "bell" && args.engine != "both") {
        std::cerr << "measure: unknown engine '" << args.engine << "'\n";
        return kExitUsage;
    }
    bool exact_mode = spec.alpha_is_integer();
    if (args.precision == "exact" && !spec.alpha_is_integer()) {
        std::cerr << "measure: --precision exact requires integer alpha\n";
        return kExitUsage;
    }
    if (args.precision == "float") exact_mode = false;

    std::vector<int> two_qs;
    for (double q : args.qs) {
        const double doubled = 2.0 * q;
        if (std::floor(doubled) != doubled || q <= 1.0) {
            std::cerr << "measure: q must be a half-integer > 1, got "
                      << format_number(q) << '\n';
            return kExitUsage;
        }
        two_qs.push_back(static_cast<int>(doubled));
    }

    bool cap_ok = true;
    const unsigned long cap = term_cap_from_env(cap_ok);
    if (!cap_ok) {
        std::cerr << "measure: SPREAD_TERM_CAP must be a positive integer\n";
        return kExitUsage;
    }

    SpreadingReportRow row;
    std::vector<double> lengths;
    try {
        row = measure_row(spec);
        for (int two_q : two_qs) {
            std::optional<RenyiResult> alg, bll;
            if (args.engine != "bell") alg = renyi_length_algebraic(spec, two_q, cap);
            if (args.engine != "algebraic") bll = renyi_length_bell(spec, two_q);

            if (alg && bll) {
                if (exact_mode && alg->s_exact && bll->s_exact) {
                    if (!(*alg->s_exact == *bll->s_exact)) {
                        std::cerr << "measure: engines disagree exactly at 2q=" << two_q
                                  << ": " << alg->s_exact->to_string() << " vs "
                                  << bll->s_exact->to_string() << '\n';
                        return kExitInconsistent;
                    }
                } else {
                    const double scale =
                        std::max(std::abs(alg->w), std::abs(bll->w));
                    if (std::abs(alg->w - bll->w) > 1e-10 * std::max(scale, 1e-300)) {
                        std::cerr << "measure: engines disagree at 2q=" << two_q << ": "
                                  << format_number(alg->w) << " vs "
                                  << format_number(bll->w) << '\n';
                        return kExitInconsistent;
                    }
                }
            }
            lengths.push_back(bll ? bll->length : alg->length);
        }
    } catch (const TermBudgetError& e) {
        std::cerr << "measure: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "measure: " << e.what() << '\n';
        return kExitUsage;
    }

    if (args.check) {
        if (row.fisher_len > row.std_dev + 1e-12) {
            std::cerr << "measure: fisher length exceeds standard deviation\n";
            return kExitInconsistent;
        }
        const double cap_n = std::sqrt(2.0 * std::numbers::pi * std::numbers::e);
        if (spec.alpha > 0.0 && row.shannon_len > cap_n * row.std_dev + 1e-9) {
            std::cerr << "measure: shannon length exceeds its standard-deviation cap\n";
            return kExitInconsistent;
        }
        if (row.bound_m0.value < row.shannon_len - 1e-7 ||
            row.bound_joint.value < row.shannon_len - 1e-7) {
            std::cerr << "measure: optimized bound fell below the shannon length\n";
            return kExitInconsistent;
        }
    }

    std::string header =
        "n,alpha,std_dev,fisher_length,onicescu_length,shannon_length,"
        "shannon_asymptotic,bound_m0_b,bound_m0,bound_joint_b,bound_joint_m,"
        "bound_joint";
    std::string line = std::to_string(row.n) + ',' + format_number(row.alpha) + ',' +
                       format_number(row.std_dev) + ',' +
                       format_number(row.fisher_len) + ',' +
                       format_number(row.onicescu_len) + ',' +
                       format_number(row.shannon_len) + ',' +
                       format_number(row.shannon_asym) + ',' +
                       std::to_string(row.bound_m0.b) + ',' +
                       format_number(row.bound_m0.value) + ',' +
                       std::to_string(row.bound_joint.b) + ',' +
                       format_number(row.bound_joint.m) + ',' +
                       format_number(row.bound_joint.value);
    for (std::size_t i = 0; i < two_qs.size(); ++i) {
        header += ",renyi_length_" + format_number(0.5 * two_qs[i]);
        line += ',' + format_number(lengths[i]);
    }
    std::cout << header << '\n' << line << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spreading measures of Laguerre weights"};
    app.require_subcommand(1);

    MeasureArgs margs;
    auto* measure = app.add_subcommand("measure", "Measures for one (n, alpha)");
    measure->add_option("--n", margs.n, "Polynomial degree")->required();
    measure->add_option("--alpha", margs.alpha, "Weight parameter (> -1)")->required();
    measure->add_option("--q", margs.qs, "Renyi orders (half-integers > 1)");
    measure->add_option("--engine", margs.engine, "algebraic | bell | both");
    measure->add_option("--precision", margs.precision, "exact | float");
    measure->add_flag("--check", margs.check, "Verify invariants, exit 3 on failure");

    int table_id = 0;
    auto* table = app.add_subcommand("table", "Bound-optimization table 1..4");
    table->add_option("which", table_id, "Table number")->required();

    int figure_id = 0;
    auto* figure = app.add_subcommand("figure", "Figure data 1..5");
    figure->add_option("which", figure_id, "Figure number")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (measure->parsed()) return run_measure(margs);
        if (table->parsed()) {
            if (table_id < 1 || table_id > 4) {
                std::cerr << "table: which must be 1..4\n";
                return kExitUsage;
            }
            std::cout << lagspread::table_csv(table_id);
            return 0;
        }
        if (figure->parsed()) {
            if (figure_id < 1 || figure_id > 5) {
                std::cerr << "figure: which must be 1..5\n";
                return kExitUsage;
            }
            std::cout << lagspread::figure_csv(figure_id);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
