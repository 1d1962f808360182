#pragma once

// Seeded property suites shared by the CLI verify subcommand and the
// test binaries: equivariance of the projections and the trivector
// action, Weyl invariance, Jacobi, Witt counts, peeling idempotence,
// engine-vs-series agreement and representation-ring stability.

#include <cstdint>
#include <string>
#include <vector>

#include "torelli/arith.hpp"

namespace torelli::checks {

inline constexpr uint64_t kDefaultSeed = 0x5eed5eed5eedull;

struct SuiteResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::vector<std::string> messages;
  bool pass() const { return failures == 0; }
};

// Equivariance of p, wedge_omega, theta_k, r, p1..p4, q1, q2, the
// invariant form and the trivector derivation, plus the vanishing
// properties of (p1-p3), (p2-p4), (q1-q2) on the Jacobi image.
SuiteResult equivariance_suite(int g, int cases, uint64_t seed);

// Jacobi identity and bracket/derivation compatibility in the free Lie
// algebra; sp-equivariance of the bracket.
SuiteResult freelie_suite(int g, int cases, uint64_t seed);

// Weyl invariance of characters produced by the representation ring,
// and dimension-homomorphism identities.
SuiteResult repring_suite(int g, int cases, uint64_t seed);

// Lyndon basis sizes against the Witt numbers and the representation
// ring, m <= max_m, n <= max_n.
SuiteResult witt_suite(int max_m, int max_n);

// decompose(irrep_character) idempotence and peeling determinism.
SuiteResult peeling_suite(int g, int cases, uint64_t seed);

// Engine dimensions versus the rank generating function.
SuiteResult gf_suite(const std::vector<std::tuple<int, int, int>>& cases, int cutoff);

// Stable-range checks of the stabilization map (tensor and exterior
// powers compared across ranks within the depth bounds).
SuiteResult stability_suite();

}  // namespace torelli::checks
