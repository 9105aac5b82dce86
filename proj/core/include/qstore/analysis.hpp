// analysis.hpp
// Monte Carlo experiment driver and closed-form comparators for
// forgery detection rates and their exponential suppression in n.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qstore/adversary.hpp"

namespace qstore {

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sqrt(mean*(1-mean)/trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

struct SweepRow {
  std::size_t n;
  std::string strategy;
  double empirical_pass;
  double analytic_pass;
  double std_error;
  std::uint64_t trials;
  std::uint64_t seed;
};

// Per trial: store a random n-bit string, run the strategy against the
// stored bank, and check the forged bank against the checking
// credentials. Reproducible: per-trial streams derived from (seed,
// trial index), so the result is independent of execution order.
McEstimate mc_forgery_pass_rate(const AttackStrategy& strategy,
                                std::size_t n, std::uint64_t trials,
                                std::uint64_t seed);

// Analytic q^n rows, pure arithmetic.
std::vector<SweepRow> pass_curve(double per_register_pass,
                                 const std::vector<std::size_t>& n_values,
                                 const std::string& strategy_label = "analytic");

// Empirical + analytic rows over a list of bank lengths.
std::vector<SweepRow> mc_sweep(const AttackStrategy& strategy,
                               const std::vector<std::size_t>& n_values,
                               std::uint64_t trials, std::uint64_t seed);

struct ScanResult {
  double best_angle = 0.0;
  double best_fidelity = 0.0;
  std::vector<double> per_angle;  // average resend fidelity per grid angle
};

// Scans measure-resend basis angles over [0, pi), averaging the resend
// fidelity cos^4(theta-phi) + sin^4(theta-phi) over sampled secret
// angles. The profile is flat at 3/4.
ScanResult estimation_fidelity_scan(std::size_t angle_grid_size,
                                    std::uint64_t theta_samples,
                                    std::uint64_t seed);

// Alternates read_bank and check_bank on an honest bank for the given
// number of rounds; returns the max over registers of one minus the
// fidelity to the prepared state.
double nondisturbance_audit(std::size_t bank_len, std::size_t rounds,
                            std::uint64_t seed);

}  // namespace qstore
