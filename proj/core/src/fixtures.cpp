#include "leaderline/fixtures.hpp"

#include <algorithm>
#include <random>

#include "leaderline/errors.hpp"

namespace leaderline {
namespace {

// Draws below `bound` without the implementation-defined std distributions.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) { return rng() % bound; }

std::vector<int> distinct_values(std::mt19937_64& rng, int count, int lo, int hi) {
  std::vector<int> pool;
  for (int v = lo; v <= hi; ++v) pool.push_back(v);
  for (int i = 0; i < count; ++i) std::swap(pool[i], pool[i + draw(rng, pool.size() - i)]);
  pool.resize(count);
  return pool;
}

}  // namespace

Instance gen_cities_like(const CitiesLikeOptions& opt) {
  if (opt.sites < 1) throw MalformedInput("cities-like fixtures need at least one site");
  const int n = opt.sites;
  const int m = 2 * n;
  const Rational h = 2;
  std::mt19937_64 rng(opt.seed);

  Instance inst;
  inst.mode = CandidateMode::Fixed;
  inst.objective = opt.objective;
  int y = 0;
  for (int c = 0; c < m; ++c) {
    y += 2 + static_cast<int>(draw(rng, 2));
    inst.candidates.push_back(Candidate{c, Side::Right, y});
  }
  const int top = y + 2;
  const int width = std::max(100, 4 * n);
  inst.boundary = Boundary{0, width, 0, top};
  auto xs = distinct_values(rng, n, 1, width - 1);
  auto ys = distinct_values(rng, n, 1, top - 1);
  for (int i = 0; i < n; ++i) inst.sites.push_back(Site{i, xs[i], ys[i], h});

  std::vector<int> by_y(n);
  for (int i = 0; i < n; ++i) by_y[i] = i;
  std::sort(by_y.begin(), by_y.end(), [&](int a, int b) { return ys[a] > ys[b]; });
  const int bands = std::min(opt.groups, n / 2);
  for (int g = 0; g < bands; ++g) {
    int size = 2 + static_cast<int>(draw(rng, std::min(4, n - 1)));
    size = std::min(size, n);
    int start = static_cast<int>(draw(rng, n - size + 1));
    std::vector<int> group(by_y.begin() + start, by_y.begin() + start + size);
    std::sort(group.begin(), group.end());
    inst.constraints.groups.push_back(group);
  }
  for (int r = 0; r < opt.order_pairs && n > 1; ++r) {
    int i = static_cast<int>(draw(rng, n - 1));
    inst.constraints.order.emplace_back(by_y[i], by_y[i + 1]);
  }
  inst.constraints = normalize_constraints(inst.constraints);
  validate_instance(inst);
  return inst;
}

}  // namespace leaderline
