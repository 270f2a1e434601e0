#include "toric/entanglement.hpp"

#include <cmath>

namespace toric {

namespace {

constexpr double kUnitaryTolerance = 1e-12;

void require_three_qubits(const PureState& s) {
  const auto& d = s.dims();
  if (d.size() != 3 || d[0] != 2 || d[1] != 2 || d[2] != 2)
    throw Error(ErrorCode::WrongDims, "three-tangle needs dims (2,2,2)");
}

}  // namespace

SeparabilityReport is_separable(const PureState& s, double tol) {
  if (!(tol > 0.0)) throw Error(ErrorCode::RangeError, "tolerance must be positive");
  SeparabilityReport report;
  report.tolerance = tol;
  if (s.subsystems() > 1) {
    const auto ideal = segre_ideal(s.dims());
    const double norm2 = s.norm_squared();
    for (const auto& q : ideal.quadrics) {
      const double r = std::abs(binomial_value(q, s.amplitudes())) / norm2;
      if (!report.worst_quadric || r > report.residual) {
        report.residual = r;
        report.worst_quadric = q;
      }
    }
  }
  report.separable = report.residual <= tol;
  return report;
}

double segre_residual(const PureState& s) {
  return is_separable(s, kDefaultSeparabilityTolerance).residual;
}

Rational segre_residual_squared(std::span<const std::size_t> dims,
                                std::span<const Rational> amplitudes) {
  if (amplitudes.size() != total_size(dims))
    throw Error(ErrorCode::LengthMismatch, "amplitude count does not match dimensions");
  Rational norm2;
  for (const auto& a : amplitudes) norm2 += a * a;
  if (norm2.is_zero()) throw Error(ErrorCode::ZeroState, "all amplitudes vanish");
  Rational worst;
  if (dims.size() > 1) {
    for (const auto& q : segre_ideal(dims).quadrics) {
      const Rational v = binomial_value(q, amplitudes);
      if (v * v > worst) worst = v * v;
    }
  }
  return worst / (norm2 * norm2);
}

HyperdeterminantTerms hyperdeterminant_terms(const PureState& s, D2Variant variant) {
  require_three_qubits(s);
  auto a = [&](int i, int j, int k) { return s[static_cast<std::size_t>(4 * i + 2 * j + k)]; };

  HyperdeterminantTerms t;
  t.d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
         a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
         a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
         a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);

  const Complex sixth = variant == D2Variant::Symmetric
                            ? a(0, 1, 0) * a(0, 1, 1) * a(1, 0, 0) * a(1, 0, 1)
                            : a(0, 1, 0) * a(1, 0, 0) * a(1, 0, 0) * a(1, 0, 1);
  t.d2 = a(0, 0, 0) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 1) +
         a(0, 0, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 1) +
         a(0, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 1) +
         a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 1) * a(1, 1, 0) +
         a(0, 0, 1) * a(1, 0, 0) * a(0, 1, 1) * a(1, 1, 0) + sixth;

  t.d4 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
         a(1, 1, 1) * a(1, 0, 0) * a(0, 1, 0) * a(0, 0, 1);
  return t;
}

Complex hyperdeterminant(const PureState& s, D2Variant variant) {
  return hyperdeterminant_terms(s, variant).value();
}

double three_tangle(const PureState& s, D2Variant variant) {
  const double norm2 = s.norm_squared();
  return 4.0 * std::abs(hyperdeterminant(s, variant)) / (norm2 * norm2);
}

PureState local_unitary_apply(const PureState& s, std::span<const Matrix2> factors) {
  for (auto d : s.dims())
    if (d != 2) throw Error(ErrorCode::WrongDims, "local unitaries act on qubits only");
  if (factors.size() != s.subsystems())
    throw Error(ErrorCode::LengthMismatch, "need one unitary per subsystem");
  for (const auto& u : factors) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const Complex g = std::conj(u[0][i]) * u[0][j] + std::conj(u[1][i]) * u[1][j];
        if (std::abs(g - (i == j ? 1.0 : 0.0)) > kUnitaryTolerance)
          throw Error(ErrorCode::NotUnitary, "factor is not unitary");
      }
    }
  }

  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  const std::size_t m = s.subsystems();
  for (std::size_t q = 0; q < m; ++q) {
    const std::size_t stride = std::size_t{1} << (m - 1 - q);
    const auto& u = factors[q];
    for (std::size_t flat = 0; flat < amps.size(); ++flat) {
      if (flat & stride) continue;
      const Complex a0 = amps[flat], a1 = amps[flat | stride];
      amps[flat] = u[0][0] * a0 + u[0][1] * a1;
      amps[flat | stride] = u[1][0] * a0 + u[1][1] * a1;
    }
  }
  std::vector<std::size_t> dims = s.dims();
  return state_from_amplitudes(std::move(dims), std::move(amps), s.normalized());
}

}  // namespace toric
