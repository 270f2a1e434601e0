#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "toric/entanglement.hpp"
#include "toric/fan.hpp"
#include "toric/polytope.hpp"
#include "toric/segre.hpp"
#include "toric/semigroup.hpp"

// JSON encodings of the library types. Objects keep insertion order so that
// output is byte-stable.
namespace toric::json_io {

using Json = nlohmann::ordered_json;

// Input that parses as JSON but does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two-space indentation; arrays of scalars stay on one line; doubles use 17
// significant digits.
std::string dump(const Json& j);

Json to_json(const LatticeVector& v);
Json to_json(const Rational& r);  // integer, or [numerator, denominator]
Json to_json(const RationalVector& v);
Json to_json(const Complex& c);  // [re, im]
Json to_json(const Cone& c);
Json to_json(const Polytope& p);
Json to_json(const FaceLattice& f);
Json to_json(const Fan& f);
Json to_json(const SemigroupBasis& b);
Json to_json(const BinomialRelation& r);
Json to_json(const AffineChart& a);
Json to_json(const MonomialMap& m);
Json to_json(const SegreIdeal& s);
Json to_json(const PureState& s);
Json to_json(const SeparabilityReport& r, const std::vector<std::size_t>& dims);

// {"lhs": [K, L], "rhs": [K', L']} with multi-indices as digit arrays.
Json quadric_to_json(const BinomialRelation& r, const std::vector<std::size_t>& dims);

std::size_t size_from_json(const Json& j);
Integer integer_from_json(const Json& j);
// Accepts an integer, [numerator, denominator], or a "p/q" string.
Rational rational_from_json(const Json& j);
Complex complex_from_json(const Json& j);  // [re, im] or a real number
LatticeVector lattice_vector_from_json(const Json& j);
RationalVector rational_vector_from_json(const Json& j);
std::vector<std::size_t> dims_from_json(const Json& j);

// {"generators": [...], "dim": n}; dim is required only when there are no
// generators.
Cone cone_from_json(const Json& j);
Polytope polytope_from_json(const Json& j);
// {"cones": [...], "dim": n}; each cone is a cone object or a bare generator list.
std::vector<Cone> cones_from_json(const Json& j);
MonomialMap monomial_map_from_json(const Json& j);
// {"dims": [...], "amplitudes": [[re, im], ...], "normalized": bool}; the
// flag requests rescaling to unit norm.
PureState state_from_json(const Json& j);

}  // namespace toric::json_io
