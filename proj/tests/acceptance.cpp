// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "pipeline.hpp"
#include "support.hpp"
#include "toric/linalg.hpp"

using namespace toric;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) note << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

Polytope cross_polytope(std::size_t m) {
  std::vector<LatticeVector> v;
  for (std::size_t i = 0; i < m; ++i) {
    v.push_back(LatticeVector::unit(m, i));
    v.push_back(-LatticeVector::unit(m, i));
  }
  return Polytope::from_points(m, v);
}

void polar_chain(Verdict& v) {
  for (int m = 1; m <= 4; ++m) {
    const auto cube = cube_polytope(m);
    const auto polar = polar_polytope(cube);
    v.require(polar == cross_polytope(static_cast<std::size_t>(m)), "polar of cube is cross-polytope, m=" + std::to_string(m));
    v.require(polar_polytope(polar) == cube, "double polar, m=" + std::to_string(m));
    const auto fan = face_fan(polar);
    v.require(is_fan(fan.cones()), "face fan is a fan, m=" + std::to_string(m));
    const auto max = fan.maximal_cones();
    v.require(max.size() == (std::size_t{1} << m), "2^m maximal cones, m=" + std::to_string(m));
    for (const auto& c : max)
      v.require(c.generators().size() == static_cast<std::size_t>(m) &&
                    std::llabs(linalg::determinant(c.generators())) == 1,
                "unimodular maximal cone, m=" + std::to_string(m));
  }
  v.note << "m=1..4 cube/polar/fan chains checked";
}

void duality_suite(Verdict& v) {
  std::mt19937_64 rng(2024);
  std::size_t points = 0;
  const int cones = 200;
  for (int t = 0; t < cones; ++t) {
    const std::size_t dim = 1 + static_cast<std::size_t>(t) % 4;
    const auto c = support::random_pointed_cone(rng, dim, 6, 5);
    v.require(dual_cone(dual_cone(c)) == c, "double dual");
    oracle::VMembership in_cone(support::to_vecs(c.generators()), dim);
    oracle::for_each_in_box(dim, 6, [&](const oracle::Vec& x) {
      ++points;
      v.require(c.contains(support::to_lattice(x)) == in_cone(x), "V/H membership");
    });
  }
  v.note << cones << " cones, " << points << " lattice points";
}

void gordan_suite(Verdict& v) {
  const auto quad = support::cone(2, {{1, 0}, {1, 2}});
  v.require(hilbert_basis(quad).elements == support::lattice_vectors({{0, 1}, {1, 0}, {2, -1}}),
            "quadric cone Hilbert basis");
  const auto chart = affine_chart(quad);
  v.require(chart.relations == std::vector<BinomialRelation>{BinomialRelation({0, 2}, {1, 1})},
            "quadric cone relation x0 x2 = x1^2");

  std::mt19937_64 rng(77);
  const int cones = 60;
  std::size_t checked = 0;
  for (int t = 0; t < cones; ++t) {
    const std::size_t dim = 2 + static_cast<std::size_t>(t) % 2;
    const auto c = support::random_pointed_cone(rng, dim, 4, 3, true);
    const auto gens = support::to_vecs(c.generators());
    oracle::Vec grade(dim, 0);
    for (const auto& g : gens)
      for (std::size_t i = 0; i < dim; ++i) grade[i] += g[i];
    auto in_dual = [&](const oracle::Vec& u) {
      for (const auto& g : gens)
        if (oracle::dot(u, g) < 0) return false;
      return true;
    };
    const auto hb = support::to_vecs(hilbert_basis(c).elements);
    for (const auto& h : hb) v.require(in_dual(h), "basis element in dual cone");
    oracle::Reachability reach(hb, in_dual, grade);
    oracle::for_each_in_box(dim, 6, [&](const oracle::Vec& u) {
      if (!in_dual(u)) return;
      ++checked;
      v.require(reach(u), "completeness");
    });
    for (std::size_t i = 0; i < hb.size(); ++i) {
      auto rest = hb;
      rest.erase(rest.begin() + static_cast<long>(i));
      oracle::Reachability without(rest, in_dual, grade);
      v.require(!without(hb[i]), "minimality");
    }
  }
  v.note << cones << " random cones, " << checked << " dual lattice points decomposed";
}

void segre_suite(Verdict& v) {
  const std::vector<std::size_t> d22{2, 2}, d222{2, 2, 2};
  v.require(segre_ideal(d22).quadrics.size() == 1, "one quadric for (2,2)");
  const auto q = segre_ideal(d222).quadrics;
  v.require(q.size() == 12, "twelve quadrics for (2,2,2)");

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> slot;
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i; j < 8; ++j) slot[{i, j}] = slot.size();
  std::vector<oracle::Vec> rows;
  for (const auto& r : q) {
    oracle::Vec row(slot.size(), 0);
    row[slot.at({r.lhs()[0], r.lhs()[1]})] += 1;
    row[slot.at({r.rhs()[0], r.rhs()[1]})] -= 1;
    rows.push_back(row);
  }
  const auto rank = oracle::rank(rows, slot.size());
  v.require(slot.size() == 36 && rank == 9, "span dimension 9 of 36");
  v.require(toric_relations(segre_monomial_map(3).exponents, 2) == q, "toric relations of cube exponents");
  v.note << q.size() << " quadrics, span rank " << rank << " in " << slot.size() << " monomials";
}

void image_membership(Verdict& v) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> radius(0.0, 10.0), angle(0.0, 2 * M_PI);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 4;
    std::vector<Complex> z;
    for (int i = 0; i < m; ++i) z.push_back(std::polar(radius(rng), angle(rng)));
    const auto image = evaluate_map(segre_monomial_map(m), z);
    const auto s = state_from_amplitudes(std::vector<std::size_t>(static_cast<std::size_t>(m), 2), image.coords, false);
    const double r = segre_residual(s);
    worst = std::max(worst, r);
    v.require(r < 1e-12, "relative residual below 1e-12");
  }
  std::uniform_int_distribution<long> num(-20, 20), den(1, 20);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 4;
    std::vector<Rational> z;
    for (int i = 0; i < m; ++i) z.emplace_back(num(rng), den(rng));
    const auto coords = evaluate_map(segre_monomial_map(m), z);
    const std::vector<std::size_t> dims(static_cast<std::size_t>(m), 2);
    v.require(segre_residual_squared(dims, coords).is_zero(), "exact residual zero");
  }
  v.note << "200 float points, worst relative residual " << worst << "; 200 exact points";
}

void separability_oracle(Verdict& v) {
  std::mt19937_64 rng(123);
  const std::vector<std::vector<std::size_t>> shapes{{2, 2}, {2, 2, 2}, {2, 2, 2, 2}, {2, 3, 2}};
  int agree = 0, total = 0, product = 0;
  for (int t = 0; t < 600; ++t) {
    const auto& dims = shapes[static_cast<std::size_t>(t) % shapes.size()];
    std::vector<Complex> amps;
    switch ((t / 4) % 3) {
      case 0: {  // fully separable
        std::vector<std::vector<Complex>> f;
        for (auto d : dims) f.push_back(support::random_amplitudes(rng, d));
        amps = support::kron(f);
        break;
      }
      case 1: {  // first subsystem split from an entangled rest
        const std::size_t rest = total_size(dims) / dims[0];
        amps = support::kron({support::random_amplitudes(rng, dims[0]), support::random_amplitudes(rng, rest)});
        break;
      }
      default:
        amps = support::random_amplitudes(rng, total_size(dims));
    }
    const auto s = state_from_amplitudes(dims, amps, true);
    const std::vector<Complex> normalized(s.amplitudes().begin(), s.amplitudes().end());
    const bool expected = oracle::flattenings_rank_one(normalized, dims);
    const bool got = is_separable(s, 1e-10).separable;
    ++total;
    if (got == expected) ++agree;
    v.require(got == expected, "agreement with flattening oracle");
  }
  for (int t = 0; t < 100; ++t) {
    const auto& dims = shapes[static_cast<std::size_t>(t) % shapes.size()];
    std::vector<std::vector<Complex>> f;
    for (auto d : dims) f.push_back(support::random_amplitudes(rng, d));
    ++product;
    v.require(is_separable(embed_product_state(f)).separable, "embedded product is separable");
  }
  v.require(!is_separable(support::bell()).separable, "Bell entangled");
  v.require(!is_separable(support::ghz()).separable, "GHZ entangled");
  v.require(!is_separable(support::w_state()).separable, "W entangled");
  v.require(!is_separable(support::zero_bell()).separable, "|0>Bell entangled");
  v.note << agree << "/" << total << " random states agree; " << product << " product embeddings separable";
}

void tangle_values(Verdict& v) {
  std::vector<std::vector<Complex>> f{{1, 2}, {Complex(0, 1), 1}, {3, -1}};
  const double ghz = three_tangle(support::ghz());
  v.require(std::abs(ghz - 1.0) <= 1e-12, "tau(GHZ) = 1");
  v.require(three_tangle(support::w_state()) <= 1e-12, "tau(W) = 0");
  v.require(three_tangle(embed_product_state(f)) <= 1e-12, "tau(product) = 0");
  v.require(three_tangle(support::zero_bell()) <= 1e-12, "tau(|0>Bell) = 0");

  std::mt19937_64 rng(31);
  double drift = 0.0;
  const auto base = support::state({2, 2, 2}, support::random_amplitudes(rng, 8));
  const double tau = three_tangle(base);
  for (int t = 0; t < 100; ++t) {
    const std::vector<Matrix2> u{support::random_unitary(rng), support::random_unitary(rng),
                                 support::random_unitary(rng)};
    drift = std::max(drift, std::abs(three_tangle(local_unitary_apply(base, u)) - tau));
    drift = std::max(drift, std::abs(three_tangle(local_unitary_apply(support::ghz(), u)) - 1.0));
  }
  v.require(drift <= 1e-9, "local-unitary invariance");

  double homog = 0.0;
  for (int t = 0; t < 100; ++t) {
    const auto raw = support::state({2, 2, 2}, support::random_amplitudes(rng, 8), false);
    const Complex c = support::random_complex(rng, 2.0);
    std::vector<Complex> scaled;
    for (const auto& a : raw.amplitudes()) scaled.push_back(c * a);
    const Complex lhs = hyperdeterminant(support::state({2, 2, 2}, scaled, false));
    const Complex rhs = c * c * c * c * hyperdeterminant(raw);
    homog = std::max(homog, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  v.require(homog <= 1e-9, "degree-4 homogeneity of U");
  v.note << "tau(GHZ)-1 = " << ghz - 1.0 << ", max LU drift " << drift << ", max homogeneity error " << homog;
}

void golden_files(Verdict& v) {
  const auto work = std::filesystem::temp_directory_path() / "toric_acceptance";
  const auto outcomes = pipeline::run(TORIC_GOLDEN_DIR, work);
  std::size_t ok = 0;
  for (const auto& o : outcomes) {
    v.require(o.matches(), o.golden);
    ok += o.matches();
  }
  v.note << ok << "/" << outcomes.size() << " outputs byte-identical";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<void(Verdict&)>>> criteria{
      {"polar chain and smooth face fans", polar_chain},
      {"duality suite", duality_suite},
      {"Gordan suite", gordan_suite},
      {"Segre ideal", segre_suite},
      {"image membership", image_membership},
      {"separability oracle equivalence", separability_oracle},
      {"three-tangle values and invariance", tangle_values},
      {"CLI golden files", golden_files},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %zu: %s  %s (%s) [%.2fs]\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.note.str().c_str(), secs);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}
