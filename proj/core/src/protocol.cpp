#include "qstore/protocol.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qstore {

StateVec prepare_register(int bit, double theta) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  theta = std::fmod(theta, 2.0 * M_PI);
  if (theta < 0.0) theta += 2.0 * M_PI;
  StateVec s;
  s.amp[static_cast<std::size_t>(2 * bit)] = cplx(std::cos(theta), 0.0);
  s.amp[static_cast<std::size_t>(2 * bit + 1)] = cplx(std::sin(theta), 0.0);
  return s;
}

std::pair<RegisterBank, SecretKey> store(const BitString& c,
                                         RandomSource& rng) {
  RegisterBank bank;
  SecretKey key;
  bank.registers.reserve(c.size());
  key.entries.reserve(c.size());
  for (int bit : c) {
    const double theta = rng.uniform_angle();
    bank.registers.push_back(prepare_register(bit, theta));
    key.entries.push_back({theta, bit});
  }
  return {std::move(bank), std::move(key)};
}

std::pair<int, StateVec> read_bit(const StateVec& s, RandomSource& rng) {
  const MeasureResult r = project_measure(s, subspace_projector(0), rng);
  return {r.success ? 0 : 1, r.post};
}

std::pair<BitString, RegisterBank> read_bank(const RegisterBank& bank,
                                             RandomSource& rng) {
  BitString bits;
  RegisterBank post;
  post.label = bank.label;
  bits.reserve(bank.size());
  post.registers.reserve(bank.size());
  for (const StateVec& s : bank.registers) {
    auto [bit, after] = read_bit(s, rng);
    bits.push_back(bit);
    post.registers.push_back(after);
  }
  return {std::move(bits), std::move(post)};
}

std::pair<bool, StateVec> check_register(const StateVec& s, int bit,
                                         double theta, RandomSource& rng) {
  const Projector p = rank1_projector(prepare_register(bit, theta));
  const MeasureResult r = project_measure(s, p, rng);
  return {r.success, r.post};
}

std::pair<CheckReport, RegisterBank> check_bank(const RegisterBank& bank,
                                                const SecretKey& key,
                                                RandomSource& rng) {
  if (bank.size() != key.size()) {
    throw std::invalid_argument("bank/key length mismatch");
  }
  std::vector<std::size_t> all(bank.size());
  for (std::size_t i = 0; i < bank.size(); ++i) all[i] = i;
  return check_subset(bank, key, all, rng);
}

std::pair<CheckReport, RegisterBank> check_subset(
    const RegisterBank& bank, const SecretKey& key,
    const std::vector<std::size_t>& indices, RandomSource& rng) {
  if (bank.size() != key.size()) {
    throw std::invalid_argument("bank/key length mismatch");
  }
  std::set<std::size_t> seen;
  for (std::size_t i : indices) {
    if (i >= bank.size()) throw std::out_of_range("check index out of range");
    if (!seen.insert(i).second) {
      throw std::invalid_argument("duplicate check index");
    }
  }
  CheckReport report;
  RegisterBank post = bank;
  for (std::size_t i : indices) {
    const auto& entry = key.entries[i];
    auto [pass, after] =
        check_register(post.registers[i], entry.bit, entry.theta, rng);
    post.registers[i] = after;
    report.per_index.push_back({i, pass});
    report.all_pass = report.all_pass && pass;
  }
  return {std::move(report), std::move(post)};
}

BitString random_bits(std::size_t n, RandomSource& rng) {
  BitString c(n);
  for (auto& b : c) b = rng.uniform_bit();
  return c;
}

}  // namespace qstore
