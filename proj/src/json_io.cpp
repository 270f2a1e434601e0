#include "toric/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace toric::json_io {

namespace {

void dump_scalar(const Json& j, std::ostream& os) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      os << "null";
      return;
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eE") == std::string::npos) s += ".0";
    os << s;
    return;
  }
  os << j.dump();
}

bool is_flat_array(const Json& j) {
  for (const auto& e : j)
    if (e.is_structured()) return false;
  return true;
}

void dump_value(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  const std::string close(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      os << "{}";
      return;
    }
    os << "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) os << ",\n";
      first = false;
      os << pad << Json(it.key()).dump() << ": ";
      dump_value(it.value(), os, indent + 2);
    }
    os << '\n' << close << '}';
  } else if (j.is_array()) {
    if (j.empty()) {
      os << "[]";
      return;
    }
    if (is_flat_array(j)) {
      os << '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        dump_scalar(j[i], os);
      }
      os << ']';
      return;
    }
    os << "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) os << ",\n";
      os << pad;
      dump_value(j[i], os, indent + 2);
    }
    os << '\n' << close << ']';
  } else {
    dump_scalar(j, os);
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  return j;
}

Json side_to_json(const std::vector<std::size_t>& side) {
  Json out = Json::array();
  for (const auto& [index, mult] : BinomialRelation::multiplicities(side))
    out.push_back(Json::array({index, mult}));
  return out;
}

Json digits_to_json(std::size_t flat, const std::vector<std::size_t>& dims) {
  Json out = Json::array();
  for (auto d : unflatten(flat, dims)) out.push_back(d);
  return out;
}

}  // namespace

std::string dump(const Json& j) {
  std::ostringstream os;
  dump_value(j, os, 0);
  os << '\n';
  return os.str();
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (Integer c : v) out.push_back(c);
  return out;
}

Json to_json(const Rational& r) {
  if (r.is_integer()) return Json(r.num());
  return Json::array({r.num(), r.den()});
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& c : v) out.push_back(to_json(c));
  return out;
}

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

namespace {

Json vectors_to_json(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

}  // namespace

Json to_json(const Cone& c) {
  Json out;
  out["dim"] = c.dim();
  out["generators"] = vectors_to_json(c.generators());
  out["facet_normals"] = vectors_to_json(c.facet_normals());
  return out;
}

Json to_json(const Polytope& p) {
  Json out;
  out["dim"] = p.dim();
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  out["vertices"] = std::move(vs);
  return out;
}

Json to_json(const FaceLattice& f) {
  Json out;
  out["dim"] = f.dim;
  out["counts"] = f.counts();
  Json faces = Json::array();
  for (const auto& group : f.faces) {
    Json g = Json::array();
    for (const auto& face : group) g.push_back(face);
    faces.push_back(std::move(g));
  }
  out["faces"] = std::move(faces);
  return out;
}

Json to_json(const Fan& f) {
  Json out;
  out["dim"] = f.dim();
  Json cones = Json::array();
  for (const auto& c : f.cones()) {
    Json cj;
    cj["generators"] = vectors_to_json(c.generators());
    cones.push_back(std::move(cj));
  }
  out["cones"] = std::move(cones);
  Json maximal = Json::array();
  const auto max_cones = f.maximal_cones();
  for (std::size_t i = 0; i < f.cones().size(); ++i)
    for (const auto& m : max_cones)
      if (m == f.cones()[i]) maximal.push_back(i);
  out["maximal_cones"] = std::move(maximal);
  return out;
}

Json to_json(const SemigroupBasis& b) {
  Json out;
  out["ambient_dim"] = b.ambient_dim;
  out["elements"] = vectors_to_json(b.elements);
  return out;
}

Json to_json(const BinomialRelation& r) {
  Json out;
  out["lhs"] = side_to_json(r.lhs());
  out["rhs"] = side_to_json(r.rhs());
  return out;
}

Json to_json(const AffineChart& a) {
  Json out;
  out["cone"] = to_json(a.cone);
  out["semigroup"] = to_json(a.semigroup);
  Json rel = Json::array();
  for (const auto& r : a.relations) rel.push_back(to_json(r));
  out["relations"] = std::move(rel);
  return out;
}

Json to_json(const MonomialMap& m) {
  Json out;
  out["m"] = m.affine_dim;
  out["exponents"] = vectors_to_json(m.exponents);
  return out;
}

Json quadric_to_json(const BinomialRelation& r, const std::vector<std::size_t>& dims) {
  Json out;
  Json lhs = Json::array(), rhs = Json::array();
  for (auto i : r.lhs()) lhs.push_back(digits_to_json(i, dims));
  for (auto i : r.rhs()) rhs.push_back(digits_to_json(i, dims));
  out["lhs"] = std::move(lhs);
  out["rhs"] = std::move(rhs);
  return out;
}

Json to_json(const SegreIdeal& s) {
  Json out;
  out["dims"] = s.dims;
  Json q = Json::array();
  for (const auto& r : s.quadrics) q.push_back(quadric_to_json(r, s.dims));
  out["quadrics"] = std::move(q);
  return out;
}

Json to_json(const PureState& s) {
  Json out;
  out["dims"] = s.dims();
  Json amps = Json::array();
  for (const auto& a : s.amplitudes()) amps.push_back(to_json(a));
  out["amplitudes"] = std::move(amps);
  out["normalized"] = s.normalized();
  return out;
}

Json to_json(const SeparabilityReport& r, const std::vector<std::size_t>& dims) {
  Json out;
  out["separable"] = r.separable;
  out["residual"] = r.residual;
  out["tolerance"] = r.tolerance;
  out["worst_quadric"] = r.worst_quadric ? quadric_to_json(*r.worst_quadric, dims) : Json(nullptr);
  return out;
}

std::size_t size_from_json(const Json& j) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw FormatError("expected a nonnegative integer");
  return j.get<std::size_t>();
}

Integer integer_from_json(const Json& j) {
  if (!j.is_number_integer()) throw FormatError("expected an integer");
  return j.get<Integer>();
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<Integer>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    const Integer d = j[1].get<Integer>();
    if (d <= 0) throw FormatError("rational denominator must be positive");
    return Rational(j[0].get<Integer>(), d);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    try {
      std::size_t pos = 0;
      const Integer n = std::stoll(s, &pos);
      if (pos == s.size()) return Rational(n);
      if (s[pos] != '/') throw FormatError("bad rational \"" + s + "\"");
      const std::string rest = s.substr(pos + 1);
      std::size_t pos2 = 0;
      const Integer d = std::stoll(rest, &pos2);
      if (pos2 != rest.size() || d <= 0) throw FormatError("bad rational \"" + s + "\"");
      return Rational(n, d);
    } catch (const std::logic_error&) {
      throw FormatError("bad rational \"" + s + "\"");
    }
  }
  throw FormatError("expected a rational: integer, [num, den] or \"p/q\"");
}

Complex complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw FormatError("expected a complex number [re, im]");
}

LatticeVector lattice_vector_from_json(const Json& j) {
  std::vector<Integer> coords;
  for (const auto& c : array(j, "lattice vector")) coords.push_back(integer_from_json(c));
  return LatticeVector(std::move(coords));
}

RationalVector rational_vector_from_json(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : array(j, "rational vector")) coords.push_back(rational_from_json(c));
  return RationalVector(std::move(coords));
}

std::vector<std::size_t> dims_from_json(const Json& j) {
  std::vector<std::size_t> dims;
  for (const auto& d : array(j, "dims")) dims.push_back(size_from_json(d));
  return dims;
}

Cone cone_from_json(const Json& j) {
  std::vector<LatticeVector> gens;
  for (const auto& g : array(field(j, "generators"), "generators"))
    gens.push_back(lattice_vector_from_json(g));
  std::size_t dim = 0;
  if (j.contains("dim"))
    dim = size_from_json(j.at("dim"));
  else if (!gens.empty())
    dim = gens.front().dim();
  else
    throw FormatError("a cone without generators needs \"dim\"");
  return cone_from_generators(dim, gens);
}

Polytope polytope_from_json(const Json& j) {
  std::vector<RationalVector> points;
  for (const auto& v : array(field(j, "vertices"), "vertices"))
    points.push_back(rational_vector_from_json(v));
  if (points.empty()) throw FormatError("polytope needs vertices");
  const std::size_t dim = j.contains("dim") ? size_from_json(j.at("dim")) : points.front().dim();
  return Polytope::from_points(dim, points);
}

std::vector<Cone> cones_from_json(const Json& j) {
  const auto& list = array(field(j, "cones"), "cones");
  std::size_t dim = j.contains("dim") ? size_from_json(j.at("dim")) : 0;
  std::vector<Cone> cones;
  for (const auto& c : list) {
    Json obj = c.is_array() ? Json{{"generators", c}} : c;
    if (!obj.contains("dim")) {
      if (dim == 0) {
        for (const auto& other : list) {
          const Json& g = other.is_array() ? other : field(other, "generators");
          if (!g.empty()) {
            dim = array(g, "generators").at(0).size();
            break;
          }
        }
      }
      if (dim == 0) throw FormatError("fan needs \"dim\"");
      obj["dim"] = dim;
    }
    cones.push_back(cone_from_json(obj));
  }
  return cones;
}

MonomialMap monomial_map_from_json(const Json& j) {
  if (j.is_number_integer()) return segre_monomial_map(static_cast<int>(j.get<Integer>()));
  if (j.is_object() && !j.contains("exponents") && j.contains("m"))
    return segre_monomial_map(static_cast<int>(integer_from_json(j.at("m"))));
  MonomialMap map;
  for (const auto& e : array(field(j, "exponents"), "exponents"))
    map.exponents.push_back(lattice_vector_from_json(e));
  if (j.contains("m"))
    map.affine_dim = size_from_json(j.at("m"));
  else if (!map.exponents.empty())
    map.affine_dim = map.exponents.front().dim();
  for (const auto& e : map.exponents)
    if (e.dim() != map.affine_dim) throw FormatError("exponent of wrong length");
  return map;
}

PureState state_from_json(const Json& j) {
  auto dims = dims_from_json(field(j, "dims"));
  std::vector<Complex> amps;
  for (const auto& a : array(field(j, "amplitudes"), "amplitudes"))
    amps.push_back(complex_from_json(a));
  bool normalize = false;
  if (j.contains("normalized")) {
    if (!j.at("normalized").is_boolean()) throw FormatError("\"normalized\" must be a boolean");
    normalize = j.at("normalized").get<bool>();
  }
  return state_from_amplitudes(std::move(dims), std::move(amps), normalize);
}

}  // namespace toric::json_io
