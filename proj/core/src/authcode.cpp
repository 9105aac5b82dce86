#include "qstore/authcode.hpp"

#include <cmath>
#include <stdexcept>

namespace qstore {

double angle_separation_mod_pi(double a, double b) {
  double d = std::fmod(std::abs(a - b), M_PI);
  return std::min(d, M_PI - d);
}

SharedAuthKey::SharedAuthKey(std::vector<Entry> entries, bool used)
    : entries_(std::move(entries)), used_(used) {
  for (const Entry& e : entries_) {
    if (e.theta0 < 0.0 || e.theta0 >= 2.0 * M_PI || e.theta1 < 0.0 ||
        e.theta1 >= 2.0 * M_PI) {
      throw std::invalid_argument("auth key angle outside [0, 2*pi)");
    }
    if (angle_separation_mod_pi(e.theta0, e.theta1) <
        kMinAngleSeparation - 1e-12) {
      throw std::invalid_argument("auth key angles too close");
    }
  }
}

void SharedAuthKey::mark_used() {
  if (used_) throw std::logic_error("auth key already used");
  used_ = true;
}

SharedAuthKey auth_keygen(std::size_t n, RandomSource& rng) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  std::vector<SharedAuthKey::Entry> entries;
  entries.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double theta0 = rng.uniform_angle();
    double theta1 = rng.uniform_angle();
    while (angle_separation_mod_pi(theta0, theta1) < kMinAngleSeparation) {
      theta1 = rng.uniform_angle();
    }
    entries.push_back({theta0, theta1});
  }
  return SharedAuthKey(std::move(entries), false);
}

RegisterBank auth_encode(const BitString& c, SharedAuthKey& key) {
  if (c.size() != key.size()) {
    throw std::invalid_argument("message/key length mismatch");
  }
  key.mark_used();
  RegisterBank bank;
  bank.label = "auth";
  bank.registers.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& e = key.entries()[i];
    const double theta = (c[i] == 0) ? e.theta0 : e.theta1;
    bank.registers.push_back(prepare_register(c[i], theta));
  }
  return bank;
}

std::pair<BitString, bool> auth_verify(const RegisterBank& bank,
                                       const SharedAuthKey& key,
                                       RandomSource& rng) {
  if (bank.size() != key.size()) {
    throw std::invalid_argument("bank/key length mismatch");
  }
  auto [c, post] = read_bank(bank, rng);
  bool authentic = true;
  for (std::size_t i = 0; i < post.size(); ++i) {
    const auto& e = key.entries()[i];
    const double theta = (c[i] == 0) ? e.theta0 : e.theta1;
    auto [pass, after] = check_register(post.registers[i], c[i], theta, rng);
    post.registers[i] = after;
    authentic = authentic && pass;
  }
  return {std::move(c), authentic};
}

}  // namespace qstore
