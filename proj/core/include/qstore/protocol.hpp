// protocol.hpp
// The storing / reading / checking protocols and the bank/key data model.
// Classical bits are stored one per register as
// cos(theta)|alpha_bit> + sin(theta)|beta_bit>, theta secret.

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qstore/qcore.hpp"

namespace qstore {

using BitString = std::vector<int>;  // values in {0, 1}

struct SecretKey {
  struct Entry {
    double theta;  // radians in [0, 2*pi)
    int bit;
  };
  std::vector<Entry> entries;

  std::size_t size() const { return entries.size(); }
};

struct RegisterBank {
  std::vector<StateVec> registers;
  std::string label;

  std::size_t size() const { return registers.size(); }
};

struct CheckReport {
  struct IndexResult {
    std::size_t index;
    bool pass;
  };
  std::vector<IndexResult> per_index;
  bool all_pass = true;
};

// cos(theta) on alpha_bit, sin(theta) on beta_bit. theta is reduced
// mod 2*pi.
StateVec prepare_register(int bit, double theta);

// Storing Protocol: one register per bit, each with a fresh uniform
// secret angle. The key records (theta_i, bit_i).
std::pair<RegisterBank, SecretKey> store(const BitString& c,
                                         RandomSource& rng);

// Reading Protocol: project onto the bit-0 subspace; success reads 0,
// failure reads 1. Honest states resolve deterministically and are
// left untouched.
std::pair<int, StateVec> read_bit(const StateVec& s, RandomSource& rng);
std::pair<BitString, RegisterBank> read_bank(const RegisterBank& bank,
                                             RandomSource& rng);

// Checking Protocol: project onto the recorded prepared state. Pass
// probability equals the fidelity to that state.
std::pair<bool, StateVec> check_register(const StateVec& s, int bit,
                                         double theta, RandomSource& rng);
std::pair<CheckReport, RegisterBank> check_bank(const RegisterBank& bank,
                                                const SecretKey& key,
                                                RandomSource& rng);
// Checks only the named indices (distinct, in range); others untouched.
std::pair<CheckReport, RegisterBank> check_subset(
    const RegisterBank& bank, const SecretKey& key,
    const std::vector<std::size_t>& indices, RandomSource& rng);

BitString random_bits(std::size_t n, RandomSource& rng);

}  // namespace qstore
