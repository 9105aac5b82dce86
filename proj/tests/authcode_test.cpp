#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qstore/adversary.hpp"
#include "qstore/authcode.hpp"

using namespace qstore;

namespace {

BitString bits_from(const char* text) {
  BitString b;
  for (const char* p = text; *p; ++p) b.push_back(*p - '0');
  return b;
}

}  // namespace

TEST_CASE("keygen enforces the angle separation floor") {
  RandomSource rng(61);
  const SharedAuthKey key = auth_keygen(1000, rng);
  REQUIRE(key.size() == 1000);
  for (const auto& e : key.entries()) {
    CHECK(angle_separation_mod_pi(e.theta0, e.theta1) >=
          kMinAngleSeparation - 1e-12);
    CHECK(e.theta0 != e.theta1);
  }
  CHECK_THROWS_AS(auth_keygen(0, rng), std::invalid_argument);
}

TEST_CASE("folded separation is uniform outside the notch") {
  RandomSource rng(62);
  const SharedAuthKey key = auth_keygen(100000, rng);
  // Histogram the folded separation over [pi/8, pi/2] in 8 bins; each
  // bin should hold about 1/8 of the entries.
  const double lo = kMinAngleSeparation, hi = M_PI / 2.0;
  std::vector<int> bins(8, 0);
  for (const auto& e : key.entries()) {
    const double d = angle_separation_mod_pi(e.theta0, e.theta1);
    auto b = static_cast<std::size_t>((d - lo) / (hi - lo) * 8.0);
    if (b >= bins.size()) b = bins.size() - 1;
    ++bins[b];
  }
  for (int count : bins) {
    const double frac = static_cast<double>(count) / key.size();
    CHECK(std::abs(frac - 0.125) < 0.01);
  }
}

TEST_CASE("encode/verify completeness") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomSource rng(seed);
    const BitString c = random_bits(16, rng);
    SharedAuthKey key = auth_keygen(16, rng);
    const RegisterBank bank = auth_encode(c, key);
    auto [read, authentic] = auth_verify(bank, key, rng);
    CHECK(read == c);
    CHECK(authentic);
  }
}

TEST_CASE("encoding is deterministic given the key") {
  RandomSource rng(63);
  const BitString c = bits_from("0110");
  const SharedAuthKey base = auth_keygen(4, rng);
  SharedAuthKey k1 = base, k2 = base;
  const RegisterBank b1 = auth_encode(c, k1);
  const RegisterBank b2 = auth_encode(c, k2);
  for (std::size_t i = 0; i < b1.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      CHECK(b1.registers[i].amp[k] == b2.registers[i].amp[k]);
    }
  }
}

TEST_CASE("encode selects the angle by the message bit") {
  const SharedAuthKey key({{M_PI / 3.0, M_PI / 3.0 + M_PI / 4.0}}, false);
  SharedAuthKey k = key;
  const RegisterBank bank = auth_encode(bits_from("0"), k);
  const StateVec want = prepare_register(0, M_PI / 3.0);
  for (int i = 0; i < 4; ++i) CHECK(bank.registers[0].amp[i] == want.amp[i]);
}

TEST_CASE("key reuse is rejected") {
  RandomSource rng(64);
  SharedAuthKey key = auth_keygen(4, rng);
  auth_encode(bits_from("0101"), key);
  CHECK(key.used());
  CHECK_THROWS_AS(auth_encode(bits_from("0101"), key), std::logic_error);
}

TEST_CASE("length mismatches are rejected") {
  RandomSource rng(65);
  SharedAuthKey key = auth_keygen(4, rng);
  CHECK_THROWS_AS(auth_encode(bits_from("01"), key), std::invalid_argument);
  RegisterBank short_bank;
  short_bank.registers.push_back(prepare_register(0, 0.1));
  CHECK_THROWS_AS(auth_verify(short_bank, key, rng), std::invalid_argument);
}

TEST_CASE("a flipped index reads flipped and is detected per the key") {
  RandomSource rng(66);
  for (int rep = 0; rep < 10; ++rep) {
    const BitString c = random_bits(8, rng);
    SharedAuthKey key = auth_keygen(8, rng);
    const RegisterBank bank = auth_encode(c, key);
    const std::size_t k = 3;
    const RegisterBank tampered = attack_unitary_flip(bank, {k});

    const auto& e = key.entries()[k];
    const double pass = expected_flip_pass(e.theta0, e.theta1);
    const double detect = 1.0 - pass;
    CHECK(detect >= std::pow(std::sin(kMinAngleSeparation), 2) - 1e-12);

    int detected = 0;
    const int trials = 20000;
    for (int t = 0; t < trials; ++t) {
      auto [read, authentic] = auth_verify(tampered, key, rng);
      CHECK(read[k] == 1 - c[k]);
      if (!authentic) ++detected;
    }
    const double freq = static_cast<double>(detected) / trials;
    const double se = std::sqrt(std::max(detect * (1 - detect), 1e-12) /
                                trials);
    CHECK(std::abs(freq - detect) < 4.0 * se + 1e-9);
  }
}

TEST_CASE("average flip detection matches the notched oracle") {
  RandomSource rng(67);
  double acc = 0.0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    const SharedAuthKey key = auth_keygen(1, rng);
    acc += expected_flip_pass(key.entries()[0].theta0,
                              key.entries()[0].theta1);
  }
  const double mean_pass = acc / samples;
  const double want = oracles::notched_flip_pass_rate(kMinAngleSeparation);
  CHECK(std::abs(mean_pass - want) < 0.005);
}

TEST_CASE("guess forgery against an auth key decays exponentially") {
  RandomSource rng(68);
  const std::size_t n = 8;
  int passes = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    const BitString c = random_bits(n, rng);
    SharedAuthKey key = auth_keygen(n, rng);
    auth_encode(c, key);  // the messenger sees only the encoded bank
    const RegisterBank forged = forge_guess(c, rng);
    if (auth_verify(forged, key, rng).second) ++passes;
  }
  const double freq = static_cast<double>(passes) / trials;
  const double want = std::pow(0.5, static_cast<double>(n));
  CHECK(std::abs(freq - want) <
        4.0 * std::sqrt(want * (1 - want) / trials) + 1e-4);
}

TEST_CASE("altering d bits passes at most (3/4)^d") {
  // Strongest per-register strategy is measure-resend at 3/4; altering
  // d indices of the message cannot authenticate more often.
  RandomSource rng(69);
  const std::size_t n = 8, d = 4;
  int passes = 0;
  const int trials = 50000;
  for (int t = 0; t < trials; ++t) {
    const BitString c = random_bits(n, rng);
    SharedAuthKey key = auth_keygen(n, rng);
    const RegisterBank bank = auth_encode(c, key);
    const RegisterBank tampered = attack_unitary_flip(bank, {0, 1, 2, 3});
    if (auth_verify(tampered, key, rng).second) ++passes;
  }
  const double freq = static_cast<double>(passes) / trials;
  const double bound = std::pow(0.75, static_cast<double>(d));
  CHECK(freq <= bound + 0.01);
}
