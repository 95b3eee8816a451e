#pragma once

// Characteristic-class arithmetic for a Hermitian rank-2 bundle E over a
// negative definite 4-manifold with c1(E) = sum of the diagonalising basis
// (so c1^2 = -b2), and the mod-4 obstructions to SO(3) representations with
// Stiefel-Whitney class w = c1 mod 2.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sldrep/exact.hpp"

namespace sldrep {

/// (-sum c_i^2) mod 4, in 0..3: the Pontryagin square of c mod 2 on the
/// diagonal lattice with every e_i^2 = -1. Throws std::invalid_argument on an
/// empty vector.
int pontryagin_square_diag(const std::vector<std::int64_t>& c);

struct SummandVerdict {
  std::int64_t b2 = 0;
  bool pass = false;
};

struct ObstructionReport {
  std::int64_t b2 = 0;    ///< total second Betti number
  int psq = 0;            ///< P-Sq(w) = -b2 mod 4
  bool divisibility_pass = false;  ///< psq == 0
  std::optional<std::vector<SummandVerdict>> summand_verdicts;
  bool pass = false;      ///< divisibility_pass and every summand verdict
  std::string message;
  std::string hurewicz_flag;
};

/// Throws std::invalid_argument for b2 < 1.
ObstructionReport divisibility_obstruction(std::int64_t b2);

/// Summands of a connected sum; each with nonzero b2 must be divisible by 4.
/// Throws std::invalid_argument for negative entries or an empty list.
ObstructionReport connected_sum_obstruction(const std::vector<std::int64_t>& summand_b2s);

struct BundleProfile {
  std::int64_t b1 = 0;
  std::int64_t b2 = 0;
  std::int64_t c2 = 0;
  std::int64_t c1sq = 0;  ///< -b2
  std::int64_t p1 = 0;    ///< p1(su(E)) = -4 c2 + c1^2
  Rational energy;        ///< c2 - c1^2/4
  bool compact = false;   ///< energy in {0, 1/4, 1/2, 3/4}
  bool flat = false;      ///< energy == 0
  bool irreducible_locked = false;  ///< no splitting E = L + K exists
  /// Leading entries of an integer vector l with sum(l_i^2 - l_i) = c2, when
  /// one exists; the remaining b2 - size() entries are 0.
  std::optional<std::vector<std::int64_t>> splitting_witness;
  std::int64_t expected_dimension = 0;  ///< -2 p1 + 3 (b1 - b2^+ - 1) with b2^+ = 0
};

/// energy in {0, 1/4, 1/2, 3/4}: the moduli space is compact for any metric.
bool in_compactness_window(const Rational& energy);

/// Throws std::invalid_argument unless b1 >= 0 and b2 >= 1.
BundleProfile bundle_profile(std::int64_t b1, std::int64_t b2, std::int64_t c2);

/// An integer vector l of length b2 with sum(l_i^2 - l_i) = c2, if any.
std::optional<std::vector<std::int64_t>> find_splitting(std::int64_t b2, std::int64_t c2);

}  // namespace sldrep
