#include "sumcubes/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "int128.hpp"

namespace sumcubes {

using detail::cube;
using detail::int128;
using detail::mod9;

bool Representation::operator<(const Representation& o) const {
  auto key = [](const Representation& r) { return std::tie(r.k_, r.x_, r.y_, r.z_); };
  return key(*this) < key(o);
}

Representation verify(mpz_class x, mpz_class y, mpz_class z, mpz_class k) {
  Representation r;
  r.path_ = label_solution(x, y, z, k);
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  r.x_ = std::move(x);
  r.y_ = std::move(y);
  r.z_ = std::move(z);
  r.k_ = std::move(k);
  return r;
}

namespace {

// k - z^3 reaches 4B^3 in magnitude, which is the binding constraint.
constexpr std::int64_t max_bound() {
  constexpr int128 limit = static_cast<int128>((static_cast<unsigned __int128>(1) << 127) - 1);
  std::int64_t lo = 1, hi = std::int64_t{1} << 42;
  while (lo < hi) {
    const std::int64_t mid = lo + (hi - lo + 1) / 2;
    if (cube(mid) <= limit / 4)
      lo = mid;
    else
      hi = mid - 1;
  }
  return lo;
}

// Residues of x^3 + y^3 mod 9 over all x, y: {0,1,8} + {0,1,8}.
constexpr bool kTwoCubeClass[9] = {true, true, true, false, false, false, false, true, true};

}  // namespace

const std::int64_t SearchBounds::kMaxBound = max_bound();

void SearchBounds::validate() const {
  if (bound < 1 || bound > kMaxBound)
    throw BoundOverflow("search bound must lie in 1.." + std::to_string(kMaxBound) + ", got " +
                        std::to_string(bound));
}

SearchResult search_k(const mpz_class& k, const SearchBounds& bounds) {
  bounds.validate();
  SearchResult result;
  result.k = k;
  result.cls = class_of(k);
  if (!is_feasible(result.cls)) {
    result.skipped = true;
    return result;
  }

  const std::int64_t b = bounds.bound;
  const int128 cube_b = cube(b);
  // |x^3 + y^3 + z^3| <= 3B^3, so a larger k has nothing to find.
  if (abs(k) > detail::to_mpz(3 * cube_b)) return result;
  const int128 target = detail::to_int128(k);

  std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> hits;
  for (std::int64_t z = -b; z <= b; ++z) {
    const int128 rest = target - cube(z);
    if (!kTwoCubeClass[mod9(rest)]) {
      ++result.stats.z_pruned;
      continue;
    }
    // x <= y <= z, so x^3 + y^3 lies in [-2B^3, 2z^3].
    if (rest > 2 * cube(z) || rest < -2 * cube_b) continue;

    std::int64_t x = -b, y = z;
    int128 cx = cube(x), cy = cube(y);
    while (x <= y) {
      ++result.stats.pairs_scanned;
      const int128 s = cx + cy;
      if (s < rest) {
        cx = cube(++x);
      } else if (s > rest) {
        cy = cube(--y);
      } else {
        hits.emplace_back(x, y, z);
        cx = cube(++x);
        cy = cube(--y);
      }
    }
  }

  std::sort(hits.begin(), hits.end());
  result.representations.reserve(hits.size());
  for (const auto& [x, y, z] : hits)
    result.representations.push_back(verify(mpz_class(static_cast<long>(x)), mpz_class(static_cast<long>(y)),
                                            mpz_class(static_cast<long>(z)), k));
  return result;
}

std::vector<SearchResult> scan_range(std::int64_t from, std::int64_t to, const SearchBounds& bounds,
                                     unsigned workers) {
  bounds.validate();
  if (from > to) return {};
  const auto count = static_cast<std::size_t>(to - from) + 1;
  std::vector<SearchResult> results(count);

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));

  // Each k is a separate work unit written to its own slot.
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    for (std::size_t i = next++; i < count; i = next++)
      results[i] = search_k(mpz_class(static_cast<long>(from + static_cast<std::int64_t>(i))), bounds);
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  pool.clear();
  return results;
}

}  // namespace sumcubes
