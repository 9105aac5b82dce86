#include "qstore/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace qstore {

namespace {

// One forgery trial: true all_pass verdict of the Checking Protocol run
// against the forged bank.
bool forgery_trial(const AttackStrategy& strategy, std::size_t n,
                   RandomSource& rng) {
  const BitString c = random_bits(n, rng);
  auto [bank, key] = store(c, rng);

  if (std::holds_alternative<GuessForge>(strategy)) {
    const RegisterBank forged = forge_guess(c, rng);
    return check_bank(forged, key, rng).first.all_pass;
  }

  if (const auto* mr = std::get_if<MeasureResend>(&strategy)) {
    std::vector<OpaqueRegister> custody;
    custody.reserve(bank.size());
    for (const StateVec& s : bank.registers) custody.emplace_back(s);
    const RegisterBank resent =
        attack_measure_resend(std::move(custody), mr->basis_angle, rng);
    return check_bank(resent, key, rng).first.all_pass;
  }

  // Unitary flip: the cheater shifts every register to the opposite
  // subspace; the checker holds an independent uniform credential angle
  // for each flipped bit, which the cheater never learns.
  const auto& flip = std::get<UnitaryFlip>(strategy);
  std::vector<std::size_t> indices = flip.indices;
  if (indices.empty()) {
    indices.resize(n);
    for (std::size_t i = 0; i < n; ++i) indices[i] = i;
  }
  SecretKey flipped_key = key;
  for (std::size_t i : indices) {
    if (i >= n) throw std::out_of_range("flip index out of range");
    flipped_key.entries[i] = {rng.uniform_angle(), 1 - key.entries[i].bit};
  }
  const RegisterBank forged = attack_unitary_flip(std::move(bank), indices);
  return check_bank(forged, flipped_key, rng).first.all_pass;
}

}  // namespace

McEstimate mc_forgery_pass_rate(const AttackStrategy& strategy,
                                std::size_t n, std::uint64_t trials,
                                std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  const RandomSource master(seed);
  std::uint64_t passes = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    RandomSource rng = master.derive(t);
    if (forgery_trial(strategy, n, rng)) ++passes;
  }
  McEstimate est;
  est.mean = static_cast<double>(passes) / static_cast<double>(trials);
  est.std_error =
      std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(trials));
  est.trials = trials;
  est.seed = seed;
  return est;
}

std::vector<SweepRow> pass_curve(double per_register_pass,
                                 const std::vector<std::size_t>& n_values,
                                 const std::string& strategy_label) {
  if (per_register_pass < 0.0 || per_register_pass > 1.0) {
    throw std::invalid_argument("per_register_pass must be in [0,1]");
  }
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t n : n_values) {
    const double q =
        std::pow(per_register_pass, static_cast<double>(n));
    rows.push_back({n, strategy_label, q, q, 0.0, 0, 0});
  }
  return rows;
}

std::vector<SweepRow> mc_sweep(const AttackStrategy& strategy,
                               const std::vector<std::size_t>& n_values,
                               std::uint64_t trials, std::uint64_t seed) {
  if (n_values.empty()) throw std::invalid_argument("empty n list");
  const double q = expected_pass_prob(strategy);
  std::vector<SweepRow> rows;
  rows.reserve(n_values.size());
  for (std::size_t n : n_values) {
    // Distinct seed per row so rows are independent estimates.
    const std::uint64_t row_seed = RandomSource(seed).derive(n).seed();
    const McEstimate est = mc_forgery_pass_rate(strategy, n, trials, row_seed);
    rows.push_back({n, strategy_name(strategy), est.mean,
                    std::pow(q, static_cast<double>(n)), est.std_error,
                    trials, row_seed});
  }
  return rows;
}

ScanResult estimation_fidelity_scan(std::size_t angle_grid_size,
                                    std::uint64_t theta_samples,
                                    std::uint64_t seed) {
  if (angle_grid_size < 2) throw std::invalid_argument("grid must be >= 2");
  if (theta_samples < 1) throw std::invalid_argument("need >= 1 theta sample");

  // Common secret-angle samples across all basis angles.
  RandomSource rng(seed);
  std::vector<double> thetas(theta_samples);
  for (auto& t : thetas) t = rng.uniform_angle();

  ScanResult result;
  result.per_angle.reserve(angle_grid_size);
  for (std::size_t k = 0; k < angle_grid_size; ++k) {
    const double phi =
        M_PI * static_cast<double>(k) / static_cast<double>(angle_grid_size);
    double acc = 0.0;
    for (double theta : thetas) {
      const double c2 = std::cos(theta - phi) * std::cos(theta - phi);
      const double s2 = 1.0 - c2;
      acc += c2 * c2 + s2 * s2;
    }
    const double avg = acc / static_cast<double>(theta_samples);
    result.per_angle.push_back(avg);
    if (k == 0 || avg > result.best_fidelity) {
      result.best_fidelity = avg;
      result.best_angle = phi;
    }
  }
  return result;
}

double nondisturbance_audit(std::size_t bank_len, std::size_t rounds,
                            std::uint64_t seed) {
  if (rounds == 0) return 0.0;
  RandomSource rng(seed);
  const BitString c = random_bits(bank_len, rng);
  auto [bank, key] = store(c, rng);
  const RegisterBank prepared = bank;

  for (std::size_t r = 0; r < rounds; ++r) {
    bank = read_bank(bank, rng).second;
    bank = check_bank(bank, key, rng).second;
  }

  double max_dev = 0.0;
  for (std::size_t i = 0; i < bank.size(); ++i) {
    const double dev =
        1.0 - fidelity(prepared.registers[i], bank.registers[i]);
    if (dev > max_dev) max_dev = dev;
  }
  return max_dev;
}

}  // namespace qstore
