#ifndef NLIE_ALGEBRA_IO_HPP
#define NLIE_ALGEBRA_IO_HPP

#include <string>

#include <json.hpp>

#include "nlie/algebra.hpp"

namespace nlie {

// Canonical UTF-8 JSON form:
//   {"field": {"kind":"Q"} | {"kind":"GF","p":5}, "n":3, "dim":4,
//    "basis":["e1",...], "brackets":[{"args":[1,2,3], "value":{"4":"1"}}]}
// args are strictly increasing and 1-based; scalars are decimal strings "a/b"
// or residue strings; omitted brackets are zero.  serialize(parse(s)) == s
// for canonical files.
std::string serialize_algebra(const NLieAlgebra& alg);
NLieAlgebra parse_algebra(const std::string& text, bool validate = true);

NLieAlgebra load_algebra_file(const std::string& path, bool validate = true);
void save_algebra_file(const NLieAlgebra& alg, const std::string& path);

nlohmann::ordered_json field_to_json(const FieldSpec& f);
nlohmann::ordered_json subspace_to_json(const Subspace& s);
nlohmann::ordered_json vec_to_json(const Vec& v);

}  // namespace nlie

#endif
