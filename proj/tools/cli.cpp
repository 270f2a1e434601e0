#include "cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "toric/json_io.hpp"

namespace toric::cli {

namespace {

using json_io::Json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string inline_json;
  std::string in_path;
  std::string out_path;
  double tol = kDefaultSeparabilityTolerance;
  bool exact = false;
  std::string dims;
  int degree = 2;
  bool affine = false;
  std::string d2 = "symmetric";
};

Json read_input(const Options& opt) {
  std::string text;
  if (!opt.in_path.empty()) {
    if (!opt.inline_json.empty()) throw UsageError("give either inline JSON or --in, not both");
    std::ifstream f(opt.in_path);
    if (!f) throw UsageError("cannot read " + opt.in_path);
    std::stringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else if (!opt.inline_json.empty()) {
    text = opt.inline_json;
  } else {
    throw UsageError("missing JSON input (inline argument or --in PATH)");
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("malformed JSON: ") + e.what());
  }
}

std::vector<std::size_t> parse_dims_csv(const std::string& csv) {
  std::vector<std::size_t> dims;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long v = std::stol(item, &pos);
      if (pos != item.size() || v < 0) throw UsageError("bad --dims entry \"" + item + "\"");
      dims.push_back(static_cast<std::size_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("bad --dims entry \"" + item + "\"");
    }
  }
  if (dims.empty()) throw UsageError("--dims is empty");
  return dims;
}

int as_int(const Json& j) {
  if (j.is_number_integer()) return static_cast<int>(j.get<Integer>());
  if (j.is_object() && j.contains("m")) return static_cast<int>(json_io::integer_from_json(j.at("m")));
  throw json_io::FormatError("expected an integer m or {\"m\": int}");
}

std::vector<Rational> rationals(const Json& j) {
  if (!j.is_array()) throw json_io::FormatError("expected an array of rationals");
  std::vector<Rational> out;
  for (const auto& e : j) out.push_back(json_io::rational_from_json(e));
  return out;
}

using Handler = std::function<Json(const Options&)>;

std::map<std::string, Handler> handlers() {
  std::map<std::string, Handler> h;

  h["dual-cone"] = [](const Options& o) {
    return json_io::to_json(dual_cone(json_io::cone_from_json(read_input(o))));
  };
  h["polar"] = [](const Options& o) {
    return json_io::to_json(polar_polytope(json_io::polytope_from_json(read_input(o))));
  };
  h["faces"] = [](const Options& o) {
    const Json in = read_input(o);
    if (in.contains("vertices")) return json_io::to_json(polytope_faces(json_io::polytope_from_json(in)));
    Json out;
    Json faces = Json::array();
    for (const auto& f : cone_faces(json_io::cone_from_json(in))) faces.push_back(json_io::to_json(f));
    out["faces"] = std::move(faces);
    return out;
  };
  h["face-fan"] = [](const Options& o) {
    return json_io::to_json(face_fan(json_io::polytope_from_json(read_input(o))));
  };
  h["check-fan"] = [](const Options& o) {
    Json out;
    out["is_fan"] = is_fan(json_io::cones_from_json(read_input(o)));
    return out;
  };
  h["hilbert-basis"] = [](const Options& o) {
    return json_io::to_json(hilbert_basis(json_io::cone_from_json(read_input(o))));
  };
  h["affine-chart"] = [](const Options& o) {
    return json_io::to_json(affine_chart(json_io::cone_from_json(read_input(o)), o.degree));
  };
  h["toric-relations"] = [](const Options& o) {
    const Json in = read_input(o);
    const Json& list = in.is_object() ? in.at("generators") : in;
    std::vector<ExponentVector> gens;
    for (const auto& g : list) gens.push_back(json_io::lattice_vector_from_json(g));
    Json out;
    Json rel = Json::array();
    for (const auto& r : toric_relations(gens, o.degree, o.affine ? Grading::Affine : Grading::Homogeneous))
      rel.push_back(json_io::to_json(r));
    out["relations"] = std::move(rel);
    return out;
  };
  h["cube"] = [](const Options& o) { return json_io::to_json(cube_polytope(as_int(read_input(o)))); };
  h["segre-map"] = [](const Options& o) {
    return json_io::to_json(segre_monomial_map(as_int(read_input(o))));
  };
  h["segre-ideal"] = [](const Options& o) {
    std::vector<std::size_t> dims;
    if (!o.dims.empty())
      dims = parse_dims_csv(o.dims);
    else {
      const Json in = read_input(o);
      dims = json_io::dims_from_json(in.is_object() ? in.at("dims") : in);
    }
    return json_io::to_json(segre_ideal(dims));
  };
  h["embed"] = [](const Options& o) {
    const Json in = read_input(o);
    const MonomialMap map = json_io::monomial_map_from_json(in.contains("map") ? in.at("map") : in);
    Json coords = Json::array();
    if (o.exact) {
      for (const auto& c : evaluate_map(map, rationals(in.at("z")))) coords.push_back(json_io::to_json(c));
    } else {
      std::vector<Complex> z;
      for (const auto& c : in.at("z")) z.push_back(json_io::complex_from_json(c));
      for (const auto& c : evaluate_map(map, z).coords) coords.push_back(json_io::to_json(c));
    }
    Json out;
    out["coordinates"] = std::move(coords);
    return out;
  };
  h["embed-product"] = [](const Options& o) {
    const Json in = read_input(o);
    std::vector<std::vector<Complex>> factors;
    for (const auto& f : in.at("factors")) {
      std::vector<Complex> v;
      for (const auto& a : f) v.push_back(json_io::complex_from_json(a));
      factors.push_back(std::move(v));
    }
    return json_io::to_json(embed_product_state(factors));
  };
  h["residual"] = [](const Options& o) {
    const Json in = read_input(o);
    Json out;
    if (o.exact) {
      const auto dims = json_io::dims_from_json(in.at("dims"));
      const Rational r2 = segre_residual_squared(dims, rationals(in.at("amplitudes")));
      out["residual_squared"] = json_io::to_json(r2);
      out["separable"] = r2.is_zero();
    } else {
      out["residual"] = segre_residual(json_io::state_from_json(in));
    }
    return out;
  };
  h["check-separable"] = [](const Options& o) {
    const PureState s = json_io::state_from_json(read_input(o));
    return json_io::to_json(is_separable(s, o.tol), s.dims());
  };
  h["three-tangle"] = [](const Options& o) {
    const PureState s = json_io::state_from_json(read_input(o));
    const D2Variant variant = o.d2 == "repeated-factor" ? D2Variant::RepeatedFactor : D2Variant::Symmetric;
    const Complex u = hyperdeterminant(s, variant);
    Json out;
    out["tau"] = three_tangle(s, variant);
    out["U"] = u.real();
    out["U_imag"] = u.imag();
    return out;
  };
  return h;
}

struct Command {
  const char* name;
  const char* help;
};

constexpr Command kCommands[] = {
    {"dual-cone", "dual cone of a cone"},
    {"polar", "polar of a polytope with the origin in its interior"},
    {"faces", "face lattice of a polytope, or all faces of a cone"},
    {"face-fan", "fan of cones over the proper faces of a lattice polytope"},
    {"check-fan", "decide whether a list of cones is a fan"},
    {"hilbert-basis", "Hilbert basis of the dual-cone semigroup"},
    {"affine-chart", "generators and binomial relations of the affine chart of a cone"},
    {"toric-relations", "balanced binomial relations among exponent vectors"},
    {"cube", "the cube [-1,1]^m"},
    {"segre-map", "monomial map of the Segre embedding of (CP^1)^m"},
    {"segre-ideal", "swap quadrics of the Segre ideal"},
    {"embed", "evaluate a monomial map at a point"},
    {"embed-product", "product state from single-subsystem factors"},
    {"residual", "scale-invariant Segre quadric residual of a state"},
    {"check-separable", "separability decision with the worst quadric"},
    {"three-tangle", "three-qubit tangle and hyperdeterminant"},
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Toric geometry and Segre separability toolkit"};
  app.require_subcommand(1);

  for (const auto& cmd : kCommands) {
    const std::string name = cmd.name;
    CLI::App* sub = app.add_subcommand(name, cmd.help);
    sub->add_option("json", opt.inline_json, "inline JSON argument");
    sub->add_option("--in", opt.in_path, "read the JSON argument from PATH");
    sub->add_option("--out", opt.out_path, "write the result to PATH instead of stdout");
    if (name == "check-separable") sub->add_option("--tol", opt.tol, "separability tolerance");
    if (name == "embed" || name == "residual")
      sub->add_flag("--exact", opt.exact, "exact rational arithmetic");
    if (name == "segre-ideal") sub->add_option("--dims", opt.dims, "subsystem dimensions, e.g. 2,2,2");
    if (name == "toric-relations" || name == "affine-chart")
      sub->add_option("--degree", opt.degree, "maximum factors per side")->check(CLI::PositiveNumber);
    if (name == "toric-relations")
      sub->add_flag("--affine", opt.affine, "allow sides of different degree");
    if (name == "three-tangle")
      sub->add_option("--d2", opt.d2, "sixth diagonal-plane term")
          ->check(CLI::IsMember({"symmetric", "repeated-factor"}));
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  std::string payload;
  try {
    payload = json_io::dump(handlers().at(name)(opt));
  } catch (const Error& e) {
    err << e.name() << ": " << e.what() << '\n';
    return kDomainError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const json_io::FormatError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Json::exception& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (!opt.out_path.empty()) {
    std::ofstream f(opt.out_path);
    if (!f) {
      err << "usage error: cannot write " << opt.out_path << '\n';
      return kUsageError;
    }
    f << payload;
  } else {
    out << payload;
  }
  return kSuccess;
}

}  // namespace toric::cli
