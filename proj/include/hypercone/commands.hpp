#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercone/calibration.hpp"
#include "hypercone/records.hpp"

namespace hypercone {

/// "a..b" (inclusive), comma lists, or single integers.
std::vector<int> parse_int_range(const std::string& spec);
std::vector<double> parse_double_list(const std::string& spec);

struct AlphaTableArgs {
    std::vector<int> m_list;
    int digits = 9;
};
OutputRecord cmd_alpha_table(const AlphaTableArgs& args);

struct VerifyArgs {
    std::string which;  // q | quartic | sturm | identity | bracket | lawson | stability
    std::vector<int> m_list;
    int sum_max = 16;        // lawson: largest k+h in the classification grid
    std::uint64_t seed = 20170915;  // identity sampling
    int samples = 100;
};
OutputRecord cmd_verify(const VerifyArgs& args);

struct FoliateArgs {
    int m = 2;
    std::string alpha = "6";  // exact: integer, fraction, or decimal
    int digits = 9;
    double eps = 1e-3;
    double tol = 1e-8;
    std::vector<double> lambdas{1.0};
    std::string out_path = "curves.csv";
    bool force = false;
};
OutputRecord cmd_foliate(const FoliateArgs& args);

struct SubcalibArgs {
    int m = 2;
    std::string alpha = "11";
    GridSpec grid;
};
OutputRecord cmd_subcalib(const SubcalibArgs& args);

}  // namespace hypercone
