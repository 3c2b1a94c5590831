#pragma once

#include "lagspread/laguerre.hpp"
#include "lagspread/shannon.hpp"

#include <string>

namespace lagspread {

// The direct spreading measures of one density, plus the two optimized bounds.
struct SpreadingReportRow {
    int n = 0;
    double alpha = 0.0;
    double std_dev = 0.0;
    double fisher_len = 0.0;
    double onicescu_len = 0.0;  // L_2
    double shannon_len = 0.0;   // N
    double shannon_asym = 0.0;
    BoundResult bound_m0;
    BoundResult bound_joint;
};

SpreadingReportRow measure_row(const PolySpec& spec);

// Fixed 12-significant-digit formatting shared by all CSV output.
std::string format_number(double v);

// Bound-optimization tables over n = 0..10: 1 (alpha=0, m=0), 2 (alpha=0,
// joint), 3 (alpha=5, m=0), 4 (alpha=5, joint).
std::string table_csv(int which);

// Figure data: 1/2 bounds vs N for alpha=0/5 (n = 0..10); 3/4 the four
// measures for alpha=0/5 (n = 0..10); 5 the (std dev, N) pairs for
// alpha in {0, 5}, n = 0..20.
std::string figure_csv(int which);

}  // namespace lagspread
