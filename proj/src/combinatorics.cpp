#include <locnorm/combinatorics.hpp>

#include <algorithm>
#include <numeric>

namespace locnorm {

std::string to_string(const IndexPair& p) {
  return "(" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("composition must have at least one part");
  for (int p : parts_)
    if (p <= 0) throw std::invalid_argument("composition parts must be positive");
}

int Composition::total() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

ParabolicChart::ParabolicChart(Composition levi, std::vector<int> sigma)
    : levi_(std::move(levi)), sigma_(std::move(sigma)) {
  if (static_cast<int>(sigma_.size()) != levi_.size())
    throw std::invalid_argument("chart permutation length differs from number of Levi blocks");
  std::vector<bool> seen(sigma_.size(), false);
  for (int v : sigma_) {
    if (v < 0 || v >= static_cast<int>(sigma_.size()) || seen[v])
      throw std::invalid_argument("chart permutation is not a bijection");
    seen[v] = true;
  }
}

ParabolicChart ParabolicChart::standard(const Composition& levi) {
  std::vector<int> s(levi.size());
  std::iota(s.begin(), s.end(), 0);
  return ParabolicChart(levi, s);
}

ParabolicChart ParabolicChart::opposite(const Composition& levi) {
  std::vector<int> s(levi.size());
  for (int i = 0; i < levi.size(); ++i) s[i] = levi.size() - 1 - i;
  return ParabolicChart(levi, s);
}

ParabolicChart ParabolicChart::from_one_based(const Composition& levi, const std::vector<int>& sigma) {
  std::vector<int> s(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) s[i] = sigma[i] - 1;
  return ParabolicChart(levi, s);
}

std::vector<int> ParabolicChart::one_based_sigma() const {
  std::vector<int> out(sigma_);
  for (int& v : out) ++v;
  return out;
}

std::vector<int> ParabolicChart::position_to_block() const {
  std::vector<int> inv(sigma_.size());
  for (std::size_t i = 0; i < sigma_.size(); ++i) inv[sigma_[i]] = static_cast<int>(i);
  return inv;
}

CrossedPairSet::CrossedPairSet(std::vector<IndexPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  for (const auto& p : pairs_) {
    if (p.i == p.j) throw std::invalid_argument("crossed pair with equal indices");
    if (std::binary_search(pairs_.begin(), pairs_.end(), IndexPair{p.j, p.i}))
      throw std::invalid_argument("crossed pair set contains a pair and its transpose");
  }
}

bool CrossedPairSet::contains(const IndexPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

CrossedPairSet CrossedPairSet::transposed() const {
  std::vector<IndexPair> t;
  t.reserve(pairs_.size());
  for (const auto& p : pairs_) t.push_back({p.j, p.i});
  return CrossedPairSet(std::move(t));
}

std::vector<IndexPair> parabolic_root_set(const ParabolicChart& chart) {
  const auto& s = chart.sigma();
  std::vector<IndexPair> out;
  for (int i = 0; i < chart.rank(); ++i)
    for (int j = 0; j < chart.rank(); ++j)
      if (i != j && s[i] < s[j]) out.push_back({i, j});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_same_levi(const ParabolicChart& a, const ParabolicChart& b) {
  if (!(a.levi() == b.levi())) throw IncompatibleCharts("charts do not share the same Levi composition");
}

std::vector<int> out_of_order_positions(const std::vector<int>& pos_to_block, const std::vector<int>& target) {
  std::vector<int> ks;
  for (std::size_t k = 0; k + 1 < pos_to_block.size(); ++k)
    if (target[pos_to_block[k]] > target[pos_to_block[k + 1]]) ks.push_back(static_cast<int>(k));
  return ks;
}

ParabolicChart swap_positions(const ParabolicChart& c, int k) {
  auto sigma = c.sigma();
  auto inv = c.position_to_block();
  std::swap(sigma[inv[k]], sigma[inv[k + 1]]);
  return ParabolicChart(c.levi(), sigma);
}

template <class Choose>
std::vector<ParabolicChart> walk(const ParabolicChart& from, const ParabolicChart& to, Choose choose) {
  require_same_levi(from, to);
  std::vector<ParabolicChart> path{from};
  while (!(path.back() == to)) {
    auto ks = out_of_order_positions(path.back().position_to_block(), to.sigma());
    path.push_back(swap_positions(path.back(), choose(ks)));
  }
  return path;
}

}  // namespace

CrossedPairSet crossed_pairs(const ParabolicChart& from, const ParabolicChart& to) {
  require_same_levi(from, to);
  const auto& a = from.sigma();
  const auto& b = to.sigma();
  std::vector<IndexPair> out;
  for (int i = 0; i < from.rank(); ++i)
    for (int j = 0; j < from.rank(); ++j)
      if (i != j && a[i] < a[j] && b[i] > b[j]) out.push_back({i, j});
  return CrossedPairSet(std::move(out));
}

std::vector<ParabolicChart> rank_one_path(const ParabolicChart& from, const ParabolicChart& to) {
  return walk(from, to, [](const std::vector<int>& ks) { return ks.front(); });
}

std::vector<ParabolicChart> random_reduced_path(const ParabolicChart& from, const ParabolicChart& to,
                                                std::mt19937_64& rng) {
  return walk(from, to, [&rng](const std::vector<int>& ks) { return ks[rng() % ks.size()]; });
}

IndexPair adjacent_crossed_pair(const ParabolicChart& a, const ParabolicChart& b) {
  auto c = crossed_pairs(a, b);
  if (c.size() != 1) throw IncompatibleCharts("charts are not adjacent");
  return c.pairs().front();
}

Flattening::Flattening(std::vector<int> multiplicities) : mult_(std::move(multiplicities)) {
  offset_.assign(1, 0);
  for (int m : mult_) {
    if (m <= 0) throw std::invalid_argument("multiplicities must be positive");
    offset_.push_back(offset_.back() + m);
  }
}

int Flattening::index(int block, int member) const {
  if (block < 0 || block >= static_cast<int>(mult_.size()) || member < 0 || member >= mult_[block])
    throw std::out_of_range("flattening index out of range");
  return offset_[block] + member;
}

std::pair<int, int> Flattening::position(int flat) const {
  if (flat < 0 || flat >= total()) throw std::out_of_range("flat index out of range");
  auto it = std::upper_bound(offset_.begin(), offset_.end(), flat);
  int block = static_cast<int>(it - offset_.begin()) - 1;
  return {block, flat - offset_[block]};
}

FlattenResult flatten_and_embed(const std::vector<int>& multiplicities, std::span<const double> s) {
  Flattening map(multiplicities);
  auto e = map.embed(s);
  return {std::move(map), std::move(e)};
}

ParabolicChart lift_chart(const ParabolicChart& chart, const Flattening& flat, const Composition& refined) {
  if (flat.multiplicities().size() != static_cast<std::size_t>(chart.rank()))
    throw IncompatibleCharts("flattening does not match chart rank");
  if (refined.size() != flat.total()) throw IncompatibleCharts("refined Levi does not match flattening");
  for (int b = 0; b < chart.rank(); ++b) {
    int sum = 0;
    for (int m = 0; m < flat.multiplicities()[b]; ++m) sum += refined.parts()[flat.index(b, m)];
    if (sum != chart.levi().parts()[b]) throw IncompatibleCharts("refined Levi does not refine the chart Levi");
  }
  auto order = chart.position_to_block();
  std::vector<int> sigma(flat.total());
  int next = 0;
  for (int block : order)
    for (int m = 0; m < flat.multiplicities()[block]; ++m) sigma[flat.index(block, m)] = next++;
  return ParabolicChart(refined, sigma);
}

}  // namespace locnorm
