#pragma once

// Mod-9 arithmetic of cubes: residue classes, feasibility of x^3+y^3+z^3 = k,
// decomposition of a class into cubic-residue triples and solution labeling.

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sumcubes {

/// Class of an integer mod 9, always in 0..8 (mathematical modulus).
class Residue {
 public:
  constexpr Residue() = default;
  constexpr explicit Residue(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value < 0 || value > 8) throw std::out_of_range("residue must lie in 0..8");
  }

  static Residue of(const mpz_class& n);
  static constexpr Residue of(std::int64_t n) {
    const std::int64_t r = n % 9;
    return Residue(static_cast<int>(r < 0 ? r + 9 : r));
  }

  constexpr int value() const { return value_; }
  constexpr auto operator<=>(const Residue&) const = default;

 private:
  std::uint8_t value_ = 0;
};

/// A residue that a cube can take mod 9: one of 0, 1, 8.
class CubicResidue {
 public:
  constexpr CubicResidue() = default;
  constexpr explicit CubicResidue(int value) : value_(static_cast<std::uint8_t>(value)) {
    if (value != 0 && value != 1 && value != 8)
      throw std::out_of_range("cubic residue must be 0, 1 or 8");
  }

  constexpr int value() const { return value_; }
  constexpr Residue residue() const { return Residue(value_); }
  constexpr auto operator<=>(const CubicResidue&) const = default;

 private:
  std::uint8_t value_ = 0;
};

inline constexpr std::array<CubicResidue, 3> kCubicResidues{CubicResidue(0), CubicResidue(1),
                                                             CubicResidue(8)};

/// Unordered multiset of three cubic residues, stored sorted ascending.
class ResidueTriple {
 public:
  ResidueTriple() = default;
  ResidueTriple(CubicResidue a, CubicResidue b, CubicResidue c);
  ResidueTriple(int a, int b, int c) : ResidueTriple(CubicResidue(a), CubicResidue(b), CubicResidue(c)) {}

  const std::array<CubicResidue, 3>& residues() const { return residues_; }
  Residue sum() const;

  auto operator<=>(const ResidueTriple&) const = default;

 private:
  std::array<CubicResidue, 3> residues_{};
};

/// A triple written with mixed representatives, -1 standing for residue 8.
/// Entries follow the triple's ascending order with every -1 in a residue-8 slot.
struct SignedSpelling {
  std::array<int, 3> entries{};

  ResidueTriple triple() const;
  auto operator<=>(const SignedSpelling&) const = default;
};

CubicResidue cube_residue(const mpz_class& n);
constexpr CubicResidue cube_residue(std::int64_t n) {
  const int r = Residue::of(n).value();
  return CubicResidue(r * r * r % 9);
}

Residue class_of(const mpz_class& k);
bool is_feasible(const mpz_class& k);
constexpr bool is_feasible(Residue r) { return r.value() != 4 && r.value() != 5; }

/// Every multiset of cubic residues summing to `z` mod 9, ascending. Empty for 4 and 5.
std::vector<ResidueTriple> decompose(Residue z);

/// All distinct spellings of `t` obtained by writing any residue-8 entry as -1.
std::vector<SignedSpelling> signed_spellings(const ResidueTriple& t);

/// Thrown when a claimed representation does not satisfy x^3+y^3+z^3 = k.
class SumMismatch : public std::runtime_error {
 public:
  SumMismatch(mpz_class expected, mpz_class actual);

  const mpz_class& expected() const { return expected_; }
  const mpz_class& actual() const { return actual_; }
  /// True when the claimed k lies in class 4 or 5, so no triple could ever match.
  bool infeasible_class() const { return !is_feasible(expected_); }

 private:
  mpz_class expected_;
  mpz_class actual_;
};

mpz_class cube_sum(const mpz_class& x, const mpz_class& y, const mpz_class& z);

/// Residue path of a representation. Throws SumMismatch if the cubes do not sum to k.
ResidueTriple label_solution(const mpz_class& x, const mpz_class& y, const mpz_class& z,
                             const mpz_class& k);

/// "8+8+8", "0+1+1"
std::string spell(const ResidueTriple& t);
/// "8-1-1", "-1-1-1"
std::string spell(const SignedSpelling& s);
std::string spell(std::array<int, 3> entries);

/// Positional spelling of a representation: residue 8 becomes -1 when its base is negative.
std::string signed_path(const mpz_class& x, const mpz_class& y, const mpz_class& z);

}  // namespace sumcubes
