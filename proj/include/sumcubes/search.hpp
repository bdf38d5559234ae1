#pragma once

// Exact verification of x^3 + y^3 + z^3 = k and bounded search for such
// triples with a two-pointer sweep and mod-9 pruning.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "sumcubes/residue.hpp"

namespace sumcubes {

/// A verified triple, stored with x <= y <= z and its residue path.
class Representation {
 public:
  const mpz_class& x() const { return x_; }
  const mpz_class& y() const { return y_; }
  const mpz_class& z() const { return z_; }
  const mpz_class& k() const { return k_; }
  const ResidueTriple& path() const { return path_; }

  bool operator==(const Representation& o) const {
    return x_ == o.x_ && y_ == o.y_ && z_ == o.z_ && k_ == o.k_;
  }
  /// Orders by (k, x, y, z).
  bool operator<(const Representation& o) const;

 private:
  friend Representation verify(mpz_class, mpz_class, mpz_class, mpz_class);
  Representation() = default;

  mpz_class x_, y_, z_, k_;
  ResidueTriple path_;
};

/// Checks the cube identity at full precision and canonicalizes the triple.
/// Throws SumMismatch carrying the actual sum.
Representation verify(mpz_class x, mpz_class y, mpz_class z, mpz_class k);

class BoundOverflow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchBounds {
  /// Largest B with 4*B^3 representable in a signed 128-bit integer (covers k - z^3).
  static const std::int64_t kMaxBound;

  std::int64_t bound = 1;

  /// Throws BoundOverflow when bound is not in 1..kMaxBound.
  void validate() const;
};

struct SearchStats {
  std::uint64_t pairs_scanned = 0;
  std::uint64_t z_pruned = 0;
};

struct SearchResult {
  mpz_class k;
  Residue cls;
  /// Set when k lies in class 4 or 5; no work is done and no triples are returned.
  bool skipped = false;
  /// Sorted by (x, y, z).
  std::vector<Representation> representations;
  SearchStats stats;
};

/// All triples with |x|,|y|,|z| <= bound and x <= y <= z whose cubes sum to k.
SearchResult search_k(const mpz_class& k, const SearchBounds& bounds);

/// search_k for every k in [from, to]. Work is spread over `workers` threads
/// (0 = hardware concurrency); results come back in k order regardless.
std::vector<SearchResult> scan_range(std::int64_t from, std::int64_t to, const SearchBounds& bounds,
                                     unsigned workers = 0);

}  // namespace sumcubes
