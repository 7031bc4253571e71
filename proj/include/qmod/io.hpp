// JSON files for algebras, reports and exported tables.
#pragma once

#include <json.hpp>
#include <string>

#include "qmod/moduli.hpp"

namespace qmod {

using Json = nlohmann::ordered_json;

struct FormatError : Error {
  using Error::Error;
};

// dim, scalar_order, mult, comult, counit, unit, antipode, then the optional
// R, R_inv, v, v_inv, basis_names, grouplikes, reps
Json algebra_to_json(const Algebra& A);
Algebra algebra_from_json(const Json& j);  // throws FormatError, ParseError

Algebra load_algebra(const std::string& path);
void save_algebra(const Algebra& A, const std::string& path);
std::string dump(const Json& j);

Json scalar_json(const Cyclotomic& c);
Json vec_json(const Vec& v);
Json report_json(const Report& r);
Json subspace_json(const Subspace& s, bool with_basis = false);
// [[i, j, k, "c"], ...] in basis order
Json moduli_table_json(const Moduli& L);

}  // namespace qmod
