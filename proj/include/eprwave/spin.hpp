#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

namespace eprwave {

enum class BasisLabel { X, Z };
enum class SpinOutcome { Up, Down };

std::string basis_name(BasisLabel b);
BasisLabel basis_from_name(const std::string& name);

/// Joint outcome order everywhere: up-up, up-down, down-up, down-down.
inline constexpr std::array<const char*, 4> kOutcomeNames = {
    "up_up", "up_down", "down_up", "down_down"};

/// Pure two-qubit state: four complex amplitudes in a labeled measurement
/// basis shared by both particles. Immutable value type.
class TwoQubitState {
 public:
  using Amplitudes = std::array<std::complex<double>, 4>;

  /// The x-basis state a|ud> - b|du> with a^2 + b^2 = 1 (within 1e-9, or
  /// auto-normalized when requested).
  static TwoQubitState partial_entangled(double a, double b,
                                         bool auto_normalize = false);

  /// Arbitrary normalized amplitudes in a labeled basis.
  static TwoQubitState from_amplitudes(BasisLabel basis,
                                       const Amplitudes& amps);

  BasisLabel basis() const { return basis_; }
  const Amplitudes& amplitudes() const { return amps_; }

 private:
  TwoQubitState(BasisLabel basis, const Amplitudes& amps)
      : basis_(basis), amps_(amps) {}

  BasisLabel basis_;
  Amplitudes amps_;
};

/// Conjugate-basis rotation via the single-qubit change
/// |up_x> = (|up_z> + |down_z>)/sqrt(2), |down_x> = (|up_z> - |down_z>)/sqrt(2)
/// applied to each particle. Throws on a wrong input label.
TwoQubitState rotate_x_to_z(const TwoQubitState& s);
TwoQubitState rotate_z_to_x(const TwoQubitState& s);

/// Optional extension: measurement axis in the x-z plane at angle theta from
/// z. theta = pi/2 reproduces the z->x rotation exactly; theta = 0 fixes the
/// basis up to a sign on the down spinor, leaving all probabilities
/// unchanged. Input must be z-labeled; the result keeps the z label.
TwoQubitState rotate_to_axis(const TwoQubitState& s, double theta);

/// Born-rule probabilities per joint outcome in the state's own basis.
std::array<double, 4> joint_probabilities(const TwoQubitState& s);

/// Distribution of the other particle's outcome given one particle's result.
/// Throws when conditioning on a zero-probability outcome.
std::array<double, 2> conditional_distribution(const TwoQubitState& s,
                                               int given_particle,
                                               SpinOutcome given_outcome);

struct MeasurementRecord {
  std::array<std::uint64_t, 4> counts{};  // keyed like kOutcomeNames
  std::uint64_t n = 0;
  std::uint64_t seed = 0;
  BasisLabel axis = BasisLabel::X;
};

/// n iid joint measurements; deterministic per seed.
MeasurementRecord sample_measurements(const TwoQubitState& s, std::uint64_t n,
                                      std::uint64_t seed);

/// Pure-state concurrence C = 2|c00 c11 - c01 c10|, basis-independent.
double concurrence(const TwoQubitState& s);

}  // namespace eprwave
