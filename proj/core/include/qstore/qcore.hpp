// qcore.hpp
// Dimension-4 complex state vectors, unitaries, projectors, and
// probabilistic projective measurement with collapse.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace qstore {

using cplx = std::complex<double>;

// Basis convention: alpha0, beta0, alpha1, beta1 <-> indices 0..3.
inline constexpr int kAlpha0 = 0;
inline constexpr int kBeta0 = 1;
inline constexpr int kAlpha1 = 2;
inline constexpr int kBeta1 = 3;

inline constexpr double kNormTol = 1e-9;
// Probabilities this close to 0 or 1 are resolved deterministically,
// so honest-protocol branches never consume randomness or perturb states.
inline constexpr double kDeterministicTol = 1e-12;

// Deterministic seeded random stream. Identical seed + call sequence
// gives identical outputs; child streams via derive() are independent.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed);

  double uniform01();      // [0, 1)
  double uniform_angle();  // [0, 2*pi)
  int uniform_bit();       // {0, 1}

  // Independent child stream, keyed by index. Used for per-trial
  // reproducibility independent of execution order.
  RandomSource derive(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// One quantum register: a unit-norm 4-component amplitude vector.
struct StateVec {
  std::array<cplx, 4> amp{};

  static StateVec basis(int index);
  // Validates unit norm within kNormTol; throws std::invalid_argument.
  static StateVec from_amplitudes(const std::array<cplx, 4>& a);

  double norm() const;
  StateVec normalized() const;  // throws on numerically zero vector
};

cplx inner(const StateVec& a, const StateVec& b);
double fidelity(const StateVec& a, const StateVec& b);

class Unitary4 {
 public:
  // Throws std::invalid_argument unless m * m^dagger = I within kNormTol.
  explicit Unitary4(const std::array<std::array<cplx, 4>, 4>& m);

  static Unitary4 identity();
  // Swaps the bit-0 and bit-1 subspaces: alpha0<->alpha1, beta0<->beta1.
  static Unitary4 subspace_swap();

  const std::array<std::array<cplx, 4>, 4>& matrix() const { return m_; }

 private:
  std::array<std::array<cplx, 4>, 4> m_;
};

StateVec apply_unitary(const Unitary4& u, const StateVec& s);

// Projection onto the span of 1..3 orthonormal vectors.
class Projector {
 public:
  // Throws std::invalid_argument if vectors are not orthonormal.
  explicit Projector(std::vector<StateVec> basis);

  double prob(const StateVec& s) const;  // <s|P|s>
  StateVec project(const StateVec& s) const;  // P|s>, unnormalized
  const std::vector<StateVec>& basis() const { return basis_; }

 private:
  std::vector<StateVec> basis_;
};

Projector rank1_projector(const StateVec& psi);
Projector subspace_projector(int bit);

struct MeasureResult {
  bool success;
  StateVec post;
  double prob;
};

// Measures s with p. Success probability <s|P|s>; the post state is the
// normalized projection onto P (success) or I-P (failure). Probabilities
// within kDeterministicTol of 0 or 1 are forced without sampling and
// leave the state untouched.
MeasureResult project_measure(const StateVec& s, const Projector& p,
                              RandomSource& rng);

}  // namespace qstore
