#include "qstore/qcore.hpp"

#include <cmath>
#include <stdexcept>

namespace qstore {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed)
    : seed_(seed), engine_(splitmix64(seed)) {}

double RandomSource::uniform01() {
  // 53 random bits; avoids the implementation-defined behavior of
  // std::uniform_real_distribution so streams are portable.
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform_angle() { return 2.0 * M_PI * uniform01(); }

int RandomSource::uniform_bit() { return static_cast<int>(engine_() & 1u); }

RandomSource RandomSource::derive(std::uint64_t stream) const {
  return RandomSource(splitmix64(seed_ ^ splitmix64(stream + 1)));
}

StateVec StateVec::basis(int index) {
  if (index < 0 || index > 3) {
    throw std::invalid_argument("basis index out of range");
  }
  StateVec s;
  s.amp[static_cast<std::size_t>(index)] = cplx(1.0, 0.0);
  return s;
}

StateVec StateVec::from_amplitudes(const std::array<cplx, 4>& a) {
  StateVec s{a};
  if (std::abs(s.norm() - 1.0) > kNormTol) {
    throw std::invalid_argument("amplitude vector is not unit-norm");
  }
  return s;
}

double StateVec::norm() const {
  double n2 = 0.0;
  for (const auto& a : amp) n2 += std::norm(a);
  return std::sqrt(n2);
}

StateVec StateVec::normalized() const {
  const double n = norm();
  if (n < 1e-9) {
    throw std::runtime_error("cannot normalize a numerically zero vector");
  }
  StateVec s;
  for (std::size_t k = 0; k < 4; ++k) s.amp[k] = amp[k] / n;
  return s;
}

cplx inner(const StateVec& a, const StateVec& b) {
  cplx r(0.0, 0.0);
  for (std::size_t k = 0; k < 4; ++k) r += std::conj(a.amp[k]) * b.amp[k];
  return r;
}

double fidelity(const StateVec& a, const StateVec& b) {
  return std::norm(inner(a, b));
}

Unitary4::Unitary4(const std::array<std::array<cplx, 4>, 4>& m) : m_(m) {
  // m * m^dagger must be the identity elementwise.
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      cplx e(0.0, 0.0);
      for (std::size_t k = 0; k < 4; ++k) e += m_[i][k] * std::conj(m_[j][k]);
      const cplx want = (i == j) ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
      if (std::abs(e - want) > kNormTol) {
        throw std::invalid_argument("matrix is not unitary");
      }
    }
  }
}

Unitary4 Unitary4::identity() {
  std::array<std::array<cplx, 4>, 4> m{};
  for (std::size_t i = 0; i < 4; ++i) m[i][i] = cplx(1.0, 0.0);
  return Unitary4(m);
}

Unitary4 Unitary4::subspace_swap() {
  std::array<std::array<cplx, 4>, 4> m{};
  m[0][2] = m[2][0] = cplx(1.0, 0.0);
  m[1][3] = m[3][1] = cplx(1.0, 0.0);
  return Unitary4(m);
}

StateVec apply_unitary(const Unitary4& u, const StateVec& s) {
  StateVec r;
  const auto& m = u.matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    cplx acc(0.0, 0.0);
    for (std::size_t k = 0; k < 4; ++k) acc += m[i][k] * s.amp[k];
    r.amp[i] = acc;
  }
  return r;
}

Projector::Projector(std::vector<StateVec> basis) : basis_(std::move(basis)) {
  if (basis_.empty() || basis_.size() > 3) {
    throw std::invalid_argument("projector rank must be 1..3");
  }
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (std::abs(basis_[i].norm() - 1.0) > kNormTol) {
      throw std::invalid_argument("projector basis vector is not unit-norm");
    }
    for (std::size_t j = i + 1; j < basis_.size(); ++j) {
      if (std::abs(inner(basis_[i], basis_[j])) > kNormTol) {
        throw std::invalid_argument("projector basis is not orthogonal");
      }
    }
  }
}

double Projector::prob(const StateVec& s) const {
  double p = 0.0;
  for (const auto& b : basis_) p += std::norm(inner(b, s));
  return p;
}

StateVec Projector::project(const StateVec& s) const {
  StateVec r;
  for (const auto& b : basis_) {
    const cplx c = inner(b, s);
    for (std::size_t k = 0; k < 4; ++k) r.amp[k] += c * b.amp[k];
  }
  return r;
}

Projector rank1_projector(const StateVec& psi) {
  return Projector({psi});
}

Projector subspace_projector(int bit) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("bit must be 0 or 1");
  }
  return Projector({StateVec::basis(2 * bit), StateVec::basis(2 * bit + 1)});
}

MeasureResult project_measure(const StateVec& s, const Projector& p,
                              RandomSource& rng) {
  const double prob = p.prob(s);
  if (prob <= kDeterministicTol) return {false, s, prob};
  if (prob >= 1.0 - kDeterministicTol) return {true, s, prob};

  const bool success = rng.uniform01() < prob;
  StateVec residual;
  if (success) {
    residual = p.project(s);
  } else {
    const StateVec proj = p.project(s);
    for (std::size_t k = 0; k < 4; ++k) residual.amp[k] = s.amp[k] - proj.amp[k];
  }
  return {success, residual.normalized(), prob};
}

}  // namespace qstore
