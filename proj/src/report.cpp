#include "lagspread/report.hpp"

#include "lagspread/moments.hpp"
#include "lagspread/renyi_bell.hpp"

#include <cstdio>
#include <stdexcept>

namespace lagspread {

namespace {

std::string format_int(int v) { return std::to_string(v); }

std::string bound_table(double alpha, BoundMode mode) {
    std::string out = mode == BoundMode::joint ? "n,b_opt,m_opt,bound,shannon_length\n"
                                               : "n,b_opt,bound,shannon_length\n";
    for (int n = 0; n <= 10; ++n) {
        const PolySpec spec{n, alpha};
        const BoundResult b = optimize_bound(spec, mode);
        out += format_int(n) + ',' + format_int(b.b);
        if (mode == BoundMode::joint) out += ',' + format_number(b.m);
        out += ',' + format_number(b.value) + ',' +
               format_number(shannon_length(spec)) + '\n';
    }
    return out;
}

std::string bounds_figure(double alpha) {
    std::string out = "n,shannon_length,bound_m0,bound_joint,ratio_m0,ratio_joint\n";
    for (int n = 0; n <= 10; ++n) {
        const PolySpec spec{n, alpha};
        const double len = shannon_length(spec);
        const double b0 = optimize_bound(spec, BoundMode::m_zero).value;
        const double bj = optimize_bound(spec, BoundMode::joint).value;
        out += format_int(n) + ',' + format_number(len) + ',' + format_number(b0) +
               ',' + format_number(bj) + ',' + format_number(b0 / len) + ',' +
               format_number(bj / len) + '\n';
    }
    return out;
}

std::string measures_figure(double alpha) {
    std::string out = "n,std_dev,fisher_length,onicescu_length,shannon_length\n";
    for (int n = 0; n <= 10; ++n) {
        const PolySpec spec{n, alpha};
        out += format_int(n) + ',' + format_number(standard_deviation(spec)) + ',' +
               format_number(fisher_length(spec)) + ',' +
               format_number(onicescu(spec).length) + ',' +
               format_number(shannon_length(spec)) + '\n';
    }
    return out;
}

std::string correlation_figure() {
    std::string out = "alpha,n,std_dev,shannon_length\n";
    for (double alpha : {0.0, 5.0})
        for (int n = 0; n <= 20; ++n) {
            const PolySpec spec{n, alpha};
            out += format_number(alpha) + ',' + format_int(n) + ',' +
                   format_number(standard_deviation(spec)) + ',' +
                   format_number(shannon_length(spec)) + '\n';
        }
    return out;
}

}  // namespace

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

SpreadingReportRow measure_row(const PolySpec& spec) {
    SpreadingReportRow row;
    row.n = spec.n;
    row.alpha = spec.alpha;
    row.std_dev = standard_deviation(spec);
    row.fisher_len = fisher_length(spec);
    row.onicescu_len = onicescu(spec).length;
    row.shannon_len = shannon_length(spec);
    row.shannon_asym = shannon_asymptotic(spec);
    row.bound_m0 = optimize_bound(spec, BoundMode::m_zero);
    row.bound_joint = optimize_bound(spec, BoundMode::joint);
    return row;
}

std::string table_csv(int which) {
    switch (which) {
        case 1: return bound_table(0.0, BoundMode::m_zero);
        case 2: return bound_table(0.0, BoundMode::joint);
        case 3: return bound_table(5.0, BoundMode::m_zero);
        case 4: return bound_table(5.0, BoundMode::joint);
        default: throw std::invalid_argument("table_csv: which must be 1..4");
    }
}

std::string figure_csv(int which) {
    switch (which) {
        case 1: return bounds_figure(0.0);
        case 2: return bounds_figure(5.0);
        case 3: return measures_figure(0.0);
        case 4: return measures_figure(5.0);
        case 5: return correlation_figure();
        default: throw std::invalid_argument("figure_csv: which must be 1..5");
    }
}

}  // namespace lagspread
