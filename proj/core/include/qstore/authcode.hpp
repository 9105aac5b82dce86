// authcode.hpp
// Message authentication from pre-shared angle pairs: the sender
// encodes each bit with the angle selected by that bit; the receiver
// reads the message and checks every register against the shared key.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qstore/protocol.hpp"

namespace qstore {

// Minimum separation of the two angles of an entry, measured modulo pi
// (checking fidelity has period pi in the angle difference). Guarantees
// a flipped bit is detected with probability >= sin^2(pi/8).
inline constexpr double kMinAngleSeparation = M_PI / 8.0;

// Folded distance of a - b from the nearest multiple of pi, in [0, pi/2].
double angle_separation_mod_pi(double a, double b);

class SharedAuthKey {
 public:
  struct Entry {
    double theta0;
    double theta1;
  };

  SharedAuthKey(std::vector<Entry> entries, bool used);

  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  // One key authenticates one message; a second encode is rejected.
  bool used() const { return used_; }
  void mark_used();

 private:
  std::vector<Entry> entries_;
  bool used_ = false;
};

// Both angles uniform on [0, 2*pi), resampled until their mod-pi
// separation is at least kMinAngleSeparation.
SharedAuthKey auth_keygen(std::size_t n, RandomSource& rng);

// Deterministic encoding: register_i = prepare_register(c_i,
// theta_{c_i, i}). Marks the key used; throws std::logic_error on
// reuse, std::invalid_argument on length mismatch.
RegisterBank auth_encode(const BitString& c, SharedAuthKey& key);

// Reads the message, then checks each register against the angle the
// read bit selects. authentic iff every check passes.
std::pair<BitString, bool> auth_verify(const RegisterBank& bank,
                                       const SharedAuthKey& key,
                                       RandomSource& rng);

}  // namespace qstore
