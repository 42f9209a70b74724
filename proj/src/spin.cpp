#include "eprwave/spin.hpp"

#include <cmath>
#include <stdexcept>

#include "eprwave/random.hpp"

namespace eprwave {

namespace {

double norm_sq(const TwoQubitState::Amplitudes& a) {
  double s = 0.0;
  for (const auto& c : a) s += std::norm(c);
  return s;
}

/// Hadamard on both qubits; self-inverse, so it serves both directions.
TwoQubitState::Amplitudes hadamard_pair(const TwoQubitState::Amplitudes& c) {
  const double h = 0.5;
  return {
      h * (c[0] + c[1] + c[2] + c[3]),
      h * (c[0] - c[1] + c[2] - c[3]),
      h * (c[0] + c[1] - c[2] - c[3]),
      h * (c[0] - c[1] - c[2] + c[3]),
  };
}

}  // namespace

std::string basis_name(BasisLabel b) {
  return b == BasisLabel::X ? "x" : "z";
}

BasisLabel basis_from_name(const std::string& name) {
  if (name == "x") return BasisLabel::X;
  if (name == "z") return BasisLabel::Z;
  throw std::invalid_argument("unknown basis label: " + name);
}

TwoQubitState TwoQubitState::partial_entangled(double a, double b,
                                               bool auto_normalize) {
  double n2 = a * a + b * b;
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw std::invalid_argument("partial_entangled: (a, b) must be nonzero");
  }
  if (auto_normalize) {
    const double s = std::sqrt(n2);
    a /= s;
    b /= s;
  } else if (std::abs(n2 - 1.0) > 1e-9) {
    throw std::invalid_argument(
        "partial_entangled: a^2 + b^2 must be 1 (pass auto_normalize to "
        "rescale)");
  }
  return TwoQubitState(BasisLabel::X, {0.0, a, -b, 0.0});
}

TwoQubitState TwoQubitState::from_amplitudes(BasisLabel basis,
                                             const Amplitudes& amps) {
  if (std::abs(norm_sq(amps) - 1.0) > 1e-9) {
    throw std::invalid_argument("from_amplitudes: state must be normalized");
  }
  return TwoQubitState(basis, amps);
}

TwoQubitState rotate_x_to_z(const TwoQubitState& s) {
  if (s.basis() != BasisLabel::X) {
    throw std::invalid_argument("rotate_x_to_z: input must be x-labeled");
  }
  return TwoQubitState::from_amplitudes(BasisLabel::Z,
                                        hadamard_pair(s.amplitudes()));
}

TwoQubitState rotate_z_to_x(const TwoQubitState& s) {
  if (s.basis() != BasisLabel::Z) {
    throw std::invalid_argument("rotate_z_to_x: input must be z-labeled");
  }
  return TwoQubitState::from_amplitudes(BasisLabel::X,
                                        hadamard_pair(s.amplitudes()));
}

TwoQubitState rotate_to_axis(const TwoQubitState& s, double theta) {
  if (s.basis() != BasisLabel::Z) {
    throw std::invalid_argument("rotate_to_axis: input must be z-labeled");
  }
  // Single-qubit rotation R with rows (cos t/2, sin t/2), (sin t/2, -cos t/2);
  // R(0) = diag-like identity up to the down-spin sign, R(pi/2) = Hadamard.
  const double ct = std::cos(0.5 * theta);
  const double st = std::sin(0.5 * theta);
  const auto& c = s.amplitudes();
  auto row = [ct, st](int i, int j) {
    if (i == 0) return j == 0 ? ct : st;
    return j == 0 ? st : -ct;
  };
  TwoQubitState::Amplitudes out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      std::complex<double> acc = 0.0;
      for (int k = 0; k < 2; ++k) {
        for (int l = 0; l < 2; ++l) {
          acc += row(i, k) * row(j, l) * c[2 * k + l];
        }
      }
      out[2 * i + j] = acc;
    }
  }
  return TwoQubitState::from_amplitudes(BasisLabel::Z, out);
}

std::array<double, 4> joint_probabilities(const TwoQubitState& s) {
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = std::norm(s.amplitudes()[i]);
  return p;
}

std::array<double, 2> conditional_distribution(const TwoQubitState& s,
                                               int given_particle,
                                               SpinOutcome given_outcome) {
  if (given_particle != 1 && given_particle != 2) {
    throw std::invalid_argument("conditional_distribution: particle is 1 or 2");
  }
  const auto p = joint_probabilities(s);
  const int fixed = given_outcome == SpinOutcome::Up ? 0 : 1;
  double up, down;
  if (given_particle == 1) {
    up = p[2 * fixed + 0];
    down = p[2 * fixed + 1];
  } else {
    up = p[0 + fixed];
    down = p[2 + fixed];
  }
  const double marginal = up + down;
  if (!(marginal > 0.0)) {
    throw std::invalid_argument(
        "conditional_distribution: conditioning outcome has zero probability");
  }
  return {up / marginal, down / marginal};
}

MeasurementRecord sample_measurements(const TwoQubitState& s, std::uint64_t n,
                                      std::uint64_t seed) {
  if (n < 1) {
    throw std::invalid_argument("sample_measurements: n must be >= 1");
  }
  const auto p = joint_probabilities(s);
  double cdf[4];
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    acc += p[i];
    cdf[i] = acc;
  }
  cdf[3] = 1.0;

  MeasurementRecord rec;
  rec.n = n;
  rec.seed = seed;
  rec.axis = s.basis();
  Rng rng(seed);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = rng.uniform();
    int outcome = 0;
    while (outcome < 3 && u >= cdf[outcome]) ++outcome;
    ++rec.counts[outcome];
  }
  return rec;
}

double concurrence(const TwoQubitState& s) {
  const auto& c = s.amplitudes();
  return 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]);
}

}  // namespace eprwave
