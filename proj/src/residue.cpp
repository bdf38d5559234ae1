#include "sumcubes/residue.hpp"

#include <algorithm>

namespace sumcubes {

Residue Residue::of(const mpz_class& n) {
  // fdiv rounds toward -inf, so the remainder is already non-negative.
  return Residue(static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 9)));
}

ResidueTriple::ResidueTriple(CubicResidue a, CubicResidue b, CubicResidue c) : residues_{a, b, c} {
  std::sort(residues_.begin(), residues_.end());
}

Residue ResidueTriple::sum() const {
  return Residue((residues_[0].value() + residues_[1].value() + residues_[2].value()) % 9);
}

ResidueTriple SignedSpelling::triple() const {
  auto as_class = [](int e) { return CubicResidue(e == -1 ? 8 : e); };
  return ResidueTriple(as_class(entries[0]), as_class(entries[1]), as_class(entries[2]));
}

CubicResidue cube_residue(const mpz_class& n) {
  const int r = Residue::of(n).value();
  return CubicResidue(r * r * r % 9);
}

Residue class_of(const mpz_class& k) { return Residue::of(k); }

bool is_feasible(const mpz_class& k) { return is_feasible(class_of(k)); }

std::vector<ResidueTriple> decompose(Residue z) {
  std::vector<ResidueTriple> out;
  for (std::size_t i = 0; i < kCubicResidues.size(); ++i)
    for (std::size_t j = i; j < kCubicResidues.size(); ++j)
      for (std::size_t l = j; l < kCubicResidues.size(); ++l) {
        ResidueTriple t(kCubicResidues[i], kCubicResidues[j], kCubicResidues[l]);
        if (t.sum() == z) out.push_back(t);
      }
  return out;
}

std::vector<SignedSpelling> signed_spellings(const ResidueTriple& t) {
  const auto& r = t.residues();
  const auto eights = std::count_if(r.begin(), r.end(), [](CubicResidue c) { return c.value() == 8; });
  // Residue-8 entries sit at the tail; spelling the last m of them as -1 gives
  // every distinct multiset exactly once.
  std::vector<SignedSpelling> out;
  for (int minus = 0; minus <= eights; ++minus) {
    SignedSpelling s;
    for (std::size_t i = 0; i < 3; ++i) s.entries[i] = r[i].value();
    for (int m = 0; m < minus; ++m) s.entries[2 - m] = -1;
    out.push_back(s);
  }
  return out;
}

SumMismatch::SumMismatch(mpz_class expected, mpz_class actual)
    : std::runtime_error("cubes sum to " + actual.get_str() + ", not " + expected.get_str()),
      expected_(std::move(expected)),
      actual_(std::move(actual)) {}

mpz_class cube_sum(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
  return mpz_class(x * x * x) + mpz_class(y * y * y) + mpz_class(z * z * z);
}

ResidueTriple label_solution(const mpz_class& x, const mpz_class& y, const mpz_class& z,
                             const mpz_class& k) {
  mpz_class actual = cube_sum(x, y, z);
  if (actual != k) throw SumMismatch(k, std::move(actual));
  return ResidueTriple(cube_residue(x), cube_residue(y), cube_residue(z));
}

std::string spell(std::array<int, 3> entries) {
  std::string out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i] < 0)
      out += '-' + std::to_string(-entries[i]);
    else
      out += (i == 0 ? "" : "+") + std::to_string(entries[i]);
  }
  return out;
}

std::string spell(const ResidueTriple& t) {
  const auto& r = t.residues();
  return spell(std::array<int, 3>{r[0].value(), r[1].value(), r[2].value()});
}

std::string spell(const SignedSpelling& s) { return spell(s.entries); }

std::string signed_path(const mpz_class& x, const mpz_class& y, const mpz_class& z) {
  auto entry = [](const mpz_class& n) {
    const int r = cube_residue(n).value();
    return (r == 8 && sgn(n) < 0) ? -1 : r;
  };
  return spell(std::array<int, 3>{entry(x), entry(y), entry(z)});
}

}  // namespace sumcubes
