#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "toren/groebner.hpp"
#include "toren/matgroup.hpp"

namespace toren {

using Json = nlohmann::ordered_json;

/// {"conductor": N, "coeffs": ["p/q", ...]} with exactly phi(N) coefficients.
Json cycnum_to_json(const CycNum& value);
CycNum cycnum_from_json(const nlohmann::json& j);

/// Canonical human form of a field element: "0", "-3/2", "z^2 - z + 1".
std::string cycnum_to_string(const CycNum& value);

/// Group file: {"n": int, "conductor": N, "generators": [matrix...]} where a
/// matrix is an n x n array of coefficient arrays (phi(N) rational strings).
Json group_to_json(const FiniteMatGroup& group);
/// Parses the generators and returns their closure.
FiniteMatGroup group_from_json(const nlohmann::json& j, std::size_t cap = 10000);
FiniteMatGroup load_group_file(const std::string& path, std::size_t cap = 10000);

/// Polynomial in the named variables as a string, e.g. "x11^3 - x22^3" or
/// "(z^2 - z)*x12*x21 + 1/2". `z` denotes the root of unity of the declared
/// conductor and may not be used as a variable name.
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars,
                           const MonomialOrder& order = MonomialOrder::grlex());
Poly poly_from_string(const std::string& text, const std::vector<std::string>& vars,
                      unsigned conductor);

/// Ideal file: {"vars": [...], "conductor": N, "order": "grlex"|"grevlex"|"lex",
/// "generators": ["poly", ...]}.
struct IdealFile {
    std::vector<std::string> vars;
    unsigned conductor = 1;
    Ideal ideal;
};
IdealFile ideal_from_json(const nlohmann::json& j);
Json ideal_to_json(const Ideal& ideal, const std::vector<std::string>& vars, unsigned conductor);
IdealFile load_ideal_file(const std::string& path);

std::string order_to_string(const MonomialOrder& order);
MonomialOrder order_from_string(const std::string& name);

}  // namespace toren
