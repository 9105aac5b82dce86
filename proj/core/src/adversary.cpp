#include "qstore/adversary.hpp"

#include <cmath>
#include <stdexcept>

namespace qstore {

bool OpaqueRegister::measure(const Projector& p, RandomSource& rng) {
  const MeasureResult r = project_measure(state_, p, rng);
  state_ = r.post;
  return r.success;
}

int OpaqueRegister::read_bit(RandomSource& rng) {
  return measure(subspace_projector(0), rng) ? 0 : 1;
}

void OpaqueRegister::apply(const Unitary4& u) {
  state_ = apply_unitary(u, state_);
}

const char* strategy_name(const AttackStrategy& strategy) {
  if (std::holds_alternative<GuessForge>(strategy)) return "guess";
  if (std::holds_alternative<MeasureResend>(strategy)) return "measure-resend";
  return "flip";
}

RegisterBank forge_guess(const BitString& c, RandomSource& rng) {
  RegisterBank forged;
  forged.label = "forged";
  forged.registers.reserve(c.size());
  for (int bit : c) {
    forged.registers.push_back(prepare_register(bit, rng.uniform_angle()));
  }
  return forged;
}

RegisterBank attack_measure_resend(std::vector<OpaqueRegister> bank,
                                   double basis_angle, RandomSource& rng) {
  RegisterBank resent;
  resent.label = "resent";
  resent.registers.reserve(bank.size());
  for (OpaqueRegister& reg : bank) {
    const int bit = reg.read_bit(rng);
    // Basis within the bit's subspace: {e(phi), e(phi + pi/2)}.
    const Projector onto =
        rank1_projector(prepare_register(bit, basis_angle));
    const bool hit = reg.measure(onto, rng);
    const double observed = hit ? basis_angle : basis_angle + M_PI / 2.0;
    resent.registers.push_back(prepare_register(bit, observed));
  }
  return resent;
}

RegisterBank attack_unitary_flip(RegisterBank bank,
                                 const std::vector<std::size_t>& indices) {
  const Unitary4 swap = Unitary4::subspace_swap();
  for (std::size_t i : indices) {
    if (i >= bank.size()) throw std::out_of_range("flip index out of range");
    bank.registers[i] = apply_unitary(swap, bank.registers[i]);
  }
  return bank;
}

double expected_pass_prob(const AttackStrategy& strategy) {
  if (std::holds_alternative<GuessForge>(strategy)) return 0.5;
  if (std::holds_alternative<MeasureResend>(strategy)) return 0.75;
  return 0.5;
}

double expected_flip_pass(double theta0, double theta1) {
  const double c = std::cos(theta0 - theta1);
  return c * c;
}

}  // namespace qstore
