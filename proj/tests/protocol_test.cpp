#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "qstore/protocol.hpp"

using namespace qstore;

namespace {

BitString bits_from(const char* text) {
  BitString b;
  for (const char* p = text; *p; ++p) b.push_back(*p - '0');
  return b;
}

}  // namespace

TEST_CASE("prepare_register places amplitudes by bit") {
  const StateVec z = prepare_register(0, 0.0);
  CHECK(std::abs(z.amp[kAlpha0] - cplx(1, 0)) < 1e-15);

  const StateVec o = prepare_register(1, M_PI / 2.0);
  CHECK(std::abs(o.amp[kBeta1] - cplx(1, 0)) < 1e-15);

  const StateVec h = prepare_register(0, M_PI / 4.0);
  CHECK(h.amp[kAlpha0].real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(h.amp[kBeta0].real() == doctest::Approx(std::sqrt(0.5)));
  CHECK(h.amp[kAlpha1] == cplx(0, 0));
  CHECK(h.amp[kBeta1] == cplx(0, 0));

  // theta reduced mod 2*pi
  const StateVec w = prepare_register(0, 2.0 * M_PI + 0.5);
  CHECK(w.amp[kAlpha0].real() == doctest::Approx(std::cos(0.5)));
}

TEST_CASE("store assigns subspaces and secret angles") {
  RandomSource rng(42);
  auto [bank, key] = store(bits_from("01"), rng);
  REQUIRE(bank.size() == 2);
  REQUIRE(key.size() == 2);
  CHECK(subspace_projector(0).prob(bank.registers[0]) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(subspace_projector(1).prob(bank.registers[1]) ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(key.entries[0].bit == 0);
  CHECK(key.entries[1].bit == 1);

  auto [empty_bank, empty_key] = store({}, rng);
  CHECK(empty_bank.size() == 0);
  CHECK(empty_key.size() == 0);
}

TEST_CASE("stored angles are uniform: E[cos theta] near zero") {
  RandomSource rng(43);
  double acc = 0.0;
  const int samples = 100000;
  for (int i = 0; i < samples; ++i) {
    auto [bank, key] = store(bits_from("0"), rng);
    acc += bank.registers[0].amp[kAlpha0].real();
  }
  CHECK(std::abs(acc / samples) < 0.02);
}

TEST_CASE("read_bit on honest registers is exact and non-disturbing") {
  RandomSource rng(44);
  for (int i = 0; i < 50; ++i) {
    const double theta = rng.uniform_angle();
    for (int bit = 0; bit < 2; ++bit) {
      const StateVec s = prepare_register(bit, theta);
      auto [read, post] = read_bit(s, rng);
      CHECK(read == bit);
      for (int k = 0; k < 4; ++k) CHECK(post.amp[k] == s.amp[k]);
    }
  }
}

TEST_CASE("read_bit collapses straddling states") {
  const StateVec s = StateVec::from_amplitudes(
      {cplx(1 / std::sqrt(2.0), 0), {}, cplx(1 / std::sqrt(2.0), 0), {}});
  RandomSource rng(45);
  int zeros = 0;
  const int trials = 100000;
  for (int t = 0; t < trials; ++t) {
    auto [bit, post] = read_bit(s, rng);
    if (bit == 0) {
      ++zeros;
      CHECK(std::abs(post.amp[kAlpha0] - cplx(1, 0)) < 1e-9);
    } else {
      CHECK(std::abs(post.amp[kAlpha1] - cplx(1, 0)) < 1e-9);
    }
  }
  const double freq = static_cast<double>(zeros) / trials;
  CHECK(std::abs(freq - 0.5) < 4.0 * std::sqrt(0.25 / trials));
}

TEST_CASE("read_bank round trip") {
  RandomSource rng(46);
  const BitString c = bits_from("1011001110");
  auto [bank, key] = store(c, rng);
  auto [read1, post1] = read_bank(bank, rng);
  CHECK(read1 == c);
  auto [read2, post2] = read_bank(post1, rng);
  CHECK(read2 == c);
  for (std::size_t i = 0; i < bank.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      CHECK(post2.registers[i].amp[k] == bank.registers[i].amp[k]);
    }
  }

  auto [read_empty, post_empty] = read_bank(RegisterBank{}, rng);
  CHECK(read_empty.empty());
  CHECK(post_empty.size() == 0);
}

TEST_CASE("round trip holds for many random strings and seeds") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    RandomSource rng(seed);
    const BitString c = random_bits(64, rng);
    auto [bank, key] = store(c, rng);
    CHECK(read_bank(bank, rng).first == c);
  }
}

TEST_CASE("check_register honest pass, orthogonal fail") {
  RandomSource rng(47);
  const double theta = 1.234;
  const StateVec s = prepare_register(0, theta);

  auto [pass, post] = check_register(s, 0, theta, rng);
  CHECK(pass);
  for (int k = 0; k < 4; ++k) CHECK(post.amp[k] == s.amp[k]);

  auto [fail, post2] = check_register(s, 0, theta + M_PI / 2.0, rng);
  CHECK_FALSE(fail);
}

TEST_CASE("check_register pass frequency equals fidelity") {
  RandomSource rng(48);
  const double theta = 0.9, theta_actual = 0.3;
  const StateVec s = prepare_register(0, theta_actual);
  const double want = std::pow(std::cos(theta - theta_actual), 2);

  int passes = 0;
  const int trials = 200000;
  for (int t = 0; t < trials; ++t) {
    if (check_register(s, 0, theta, rng).first) ++passes;
  }
  const double freq = static_cast<double>(passes) / trials;
  const double se = std::sqrt(want * (1 - want) / trials);
  CHECK(std::abs(freq - want) < 4.0 * se);
}

TEST_CASE("check_bank on honest stores always passes") {
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    RandomSource rng(seed);
    const BitString c = random_bits(32, rng);
    auto [bank, key] = store(c, rng);
    auto [report, post] = check_bank(bank, key, rng);
    CHECK(report.all_pass);
    CHECK(report.per_index.size() == 32);
  }

  RandomSource rng(0);
  auto [report, post] = check_bank(RegisterBank{}, SecretKey{}, rng);
  CHECK(report.all_pass);  // vacuous
}

TEST_CASE("check_bank rejects mismatched lengths") {
  RandomSource rng(49);
  auto [bank, key] = store(bits_from("010"), rng);
  key.entries.pop_back();
  CHECK_THROWS_AS(check_bank(bank, key, rng), std::invalid_argument);
}

TEST_CASE("check_subset") {
  RandomSource rng(50);
  const BitString c = bits_from("110010");
  auto [bank, key] = store(c, rng);

  auto [empty_report, untouched] = check_subset(bank, key, {}, rng);
  CHECK(empty_report.all_pass);
  for (std::size_t i = 0; i < bank.size(); ++i) {
    for (int k = 0; k < 4; ++k) {
      CHECK(untouched.registers[i].amp[k] == bank.registers[i].amp[k]);
    }
  }

  auto [report, post] = check_subset(bank, key, {1, 4}, rng);
  CHECK(report.all_pass);
  CHECK(report.per_index.size() == 2);
  // Full bank still readable afterward.
  CHECK(read_bank(post, rng).first == c);

  CHECK_THROWS_AS(check_subset(bank, key, {0, 0}, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_subset(bank, key, {99}, rng), std::out_of_range);
}

TEST_CASE("reads and checks interleave without disturbance") {
  RandomSource rng(51);
  const BitString c = random_bits(16, rng);
  auto [bank, key] = store(c, rng);
  const RegisterBank prepared = bank;

  for (int round = 0; round < 20; ++round) {
    bank = read_bank(bank, rng).second;
    auto [report, post] = check_bank(bank, key, rng);
    CHECK(report.all_pass);
    bank = post;
  }
  for (std::size_t i = 0; i < bank.size(); ++i) {
    CHECK(fidelity(prepared.registers[i], bank.registers[i]) ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}
