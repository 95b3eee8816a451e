#include "sldrep/obstructions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sldrep {

namespace {

constexpr std::int64_t kMagnitudeLimit = 1'000'000'000'000'000;  // keeps p1 and d inside int64

const char* kHurewiczNote =
    "informational: a representation with w = sum e_i mod 2 forces every PD(e_i) outside the image of the "
    "Hurewicz map pi_2(X) -> H_2(X); not decidable from these inputs";

int residue_mod4(std::int64_t x) { return static_cast<int>(((x % 4) + 4) % 4); }

std::int64_t isqrt(std::int64_t n) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

std::int64_t triangular(std::int64_t k) { return k * (k + 1) / 2; }

/// k >= 0 with T(k) = t, if any.
std::optional<std::int64_t> triangular_root(std::int64_t t) {
  std::int64_t k = (isqrt(8 * t + 1) - 1) / 2;
  if (triangular(k) == t) return k;
  return std::nullopt;
}

std::optional<std::vector<std::int64_t>> sum_of_triangulars(std::int64_t t, int count) {
  if (count == 1) {
    if (auto k = triangular_root(t)) return std::vector<std::int64_t>{*k};
    return std::nullopt;
  }
  // Largest first term downwards: a hit is found after few steps in practice.
  for (std::int64_t a = (isqrt(8 * t + 1) - 1) / 2; a >= 0; --a) {
    if (auto rest = sum_of_triangulars(t - triangular(a), count - 1)) {
      rest->insert(rest->begin(), a);
      return rest;
    }
  }
  return std::nullopt;
}

}  // namespace

int pontryagin_square_diag(const std::vector<std::int64_t>& c) {
  if (c.empty()) throw std::invalid_argument("pontryagin_square_diag needs a nonempty class");
  int sum = 0;
  for (auto x : c) {
    int r = residue_mod4(x);
    sum = (sum + r * r) % 4;
  }
  return (4 - sum) % 4;
}

ObstructionReport divisibility_obstruction(std::int64_t b2) {
  if (b2 < 1) throw std::invalid_argument("divisibility_obstruction needs b2 >= 1");
  ObstructionReport r;
  r.b2 = b2;
  r.psq = residue_mod4(-b2);
  r.divisibility_pass = r.psq == 0;
  r.pass = r.divisibility_pass;
  r.message = r.pass ? "b2 divisible by 4: P-Sq(w) = p1 = 0 mod 4 is consistent"
                     : "b2 = " + std::to_string(b2) +
                           " is not divisible by 4: no SO(3) representation with w = sum e_i mod 2 and p1 = 0 exists";
  r.hurewicz_flag = kHurewiczNote;
  return r;
}

ObstructionReport connected_sum_obstruction(const std::vector<std::int64_t>& summand_b2s) {
  if (summand_b2s.empty()) throw std::invalid_argument("connected_sum_obstruction needs at least one summand");
  std::int64_t total = 0;
  std::vector<SummandVerdict> verdicts;
  for (auto b : summand_b2s) {
    if (b < 0) throw std::invalid_argument("summand b2 must be >= 0");
    total += b;
    verdicts.push_back({b, b == 0 || b % 4 == 0});
  }
  ObstructionReport r;
  r.b2 = total;
  r.psq = residue_mod4(-total);
  r.divisibility_pass = r.psq == 0;
  bool all = true;
  std::string failing;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].pass) continue;
    all = false;
    failing += (failing.empty() ? "" : ", ") + std::to_string(i + 1);
  }
  r.summand_verdicts = std::move(verdicts);
  r.pass = r.divisibility_pass && all;
  if (r.pass) {
    r.message = "every summand b2 divisible by 4 (diagonal summands by unique decomposition of definite forms)";
  } else if (!all) {
    r.message = "summand(s) " + failing +
                " have b2 not divisible by 4: the connected sum admits no SO(3) representation with w = sum e_i mod 2";
  } else {
    r.message = "total b2 not divisible by 4";
  }
  r.hurewicz_flag = kHurewiczNote;
  return r;
}

namespace {

/// Nonzero prefix of a splitting vector (at most three entries).
std::optional<std::vector<std::int64_t>> splitting_prefix(std::int64_t b2, std::int64_t c2) {
  // Each l_i^2 - l_i = l_i (l_i - 1) is a nonnegative even number, twice a
  // triangular number; every nonnegative integer is a sum of three triangular
  // numbers, so at most three entries need to be nonzero.
  if (c2 < 0 || c2 % 2 != 0) return std::nullopt;
  int count = static_cast<int>(std::min<std::int64_t>(b2, 3));
  auto ks = sum_of_triangulars(c2 / 2, count);
  if (!ks) return std::nullopt;
  for (auto& k : *ks) k = k == 0 ? 0 : k + 1;
  return ks;
}

}  // namespace

std::optional<std::vector<std::int64_t>> find_splitting(std::int64_t b2, std::int64_t c2) {
  if (b2 < 1) throw std::invalid_argument("find_splitting needs b2 >= 1");
  if (b2 > kMagnitudeLimit) throw std::invalid_argument("b2 out of supported range");
  auto prefix = splitting_prefix(b2, c2);
  if (!prefix) return std::nullopt;
  prefix->resize(static_cast<std::size_t>(b2), 0);
  return prefix;
}

bool in_compactness_window(const Rational& energy) {
  Rational e = energy;
  e.canonicalize();
  for (int quarters = 0; quarters < 4; ++quarters) {
    Rational q(quarters, 4);
    q.canonicalize();
    if (e == q) return true;
  }
  return false;
}

BundleProfile bundle_profile(std::int64_t b1, std::int64_t b2, std::int64_t c2) {
  if (b1 < 0) throw std::invalid_argument("b1 must be >= 0");
  if (b2 < 1) throw std::invalid_argument("b2 must be >= 1");
  if (b1 > kMagnitudeLimit || b2 > kMagnitudeLimit || c2 > kMagnitudeLimit || c2 < -kMagnitudeLimit) {
    throw std::invalid_argument("inputs out of supported range");
  }
  BundleProfile p;
  p.b1 = b1;
  p.b2 = b2;
  p.c2 = c2;
  p.c1sq = -b2;
  p.p1 = -4 * c2 + p.c1sq;
  Rational quarter_b2(b2, 4);
  quarter_b2.canonicalize();
  p.energy = Rational(c2) + quarter_b2;
  p.flat = sgn(p.energy) == 0;
  p.compact = in_compactness_window(p.energy);
  p.splitting_witness = splitting_prefix(b2, c2);
  p.irreducible_locked = !p.splitting_witness;
  p.expected_dimension = -2 * p.p1 + 3 * (b1 - 1);
  return p;
}

}  // namespace sldrep
