// adversary.hpp
// Forgery and tampering strategies restricted to physical access:
// measurement outcomes, unitaries, and preparing fresh states. No code
// path exposes hidden amplitudes or secret angles.

#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "qstore/protocol.hpp"
#include "qstore/qcore.hpp"

namespace qstore {

// A register in adversary custody. Only measurement outcomes and
// unitary evolution are reachable; amplitudes stay hidden.
class OpaqueRegister {
 public:
  explicit OpaqueRegister(StateVec s) : state_(s) {}

  // Outcome only; the hidden state collapses. The probability itself is
  // not observable.
  bool measure(const Projector& p, RandomSource& rng);
  int read_bit(RandomSource& rng);
  void apply(const Unitary4& u);

  // Ends adversary custody; called by the checking side when the
  // register is handed back, never by strategy code.
  StateVec surrender() && { return state_; }

 private:
  StateVec state_;
};

struct GuessForge {};
struct MeasureResend {
  double basis_angle = 0.0;  // in [0, pi)
};
struct UnitaryFlip {
  std::vector<std::size_t> indices;
};
using AttackStrategy = std::variant<GuessForge, MeasureResend, UnitaryFlip>;

const char* strategy_name(const AttackStrategy& strategy);

// Re-prepares each register for the known bits c with fresh uniform
// angles, independent of the true key.
RegisterBank forge_guess(const BitString& c, RandomSource& rng);

// Per register: read the bit, measure in the basis at basis_angle
// within that bit's subspace, re-prepare the observed eigenstate.
RegisterBank attack_measure_resend(std::vector<OpaqueRegister> bank,
                                   double basis_angle, RandomSource& rng);

// Applies the subspace-swap unitary at each index; reads there flip
// with certainty afterwards.
RegisterBank attack_unitary_flip(RegisterBank bank,
                                 const std::vector<std::size_t>& indices);

// Closed-form per-register checking pass probability: guess 1/2,
// measure-resend 3/4, unitary flip averaged over independent angle
// pairs 1/2.
double expected_pass_prob(const AttackStrategy& strategy);

// Flip vs a known angle pair: cos^2(theta0 - theta1).
double expected_flip_pass(double theta0, double theta1);

}  // namespace qstore
