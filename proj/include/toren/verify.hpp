#pragma once

#include <string>
#include <vector>

namespace toren {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full verification catalog: Algorithm-1 value reproduction under
/// both graded orders, the icosahedral cone degree, catalog group orders,
/// worked-example degrees, the bound table, the randomized Groebner oracle
/// suite, strategy cross-validation, and the GL2 classification rows.
/// One result per criterion; a thrown error fails its criterion only.
std::vector<CheckResult> run_verification();

}  // namespace toren
