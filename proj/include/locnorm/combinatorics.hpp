#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace locnorm {

class IncompatibleCharts : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Ordered pair of 0-based block indices.
struct IndexPair {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(const IndexPair& p);  // 1-based "(i,j)"

class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  int total() const;

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
};

// A standard parabolic with Levi `levi` conjugated by sigma: block i sits at
// position sigma[i] (0-based) along the diagonal.
class ParabolicChart {
 public:
  ParabolicChart() = default;
  ParabolicChart(Composition levi, std::vector<int> sigma);

  static ParabolicChart standard(const Composition& levi);
  static ParabolicChart opposite(const Composition& levi);
  static ParabolicChart from_one_based(const Composition& levi, const std::vector<int>& sigma);

  const Composition& levi() const { return levi_; }
  const std::vector<int>& sigma() const { return sigma_; }
  int rank() const { return levi_.size(); }
  std::vector<int> one_based_sigma() const;
  // Block occupying a given diagonal position.
  std::vector<int> position_to_block() const;

  friend bool operator==(const ParabolicChart&, const ParabolicChart&) = default;

 private:
  Composition levi_;
  std::vector<int> sigma_;
};

// Sorted set of ordered pairs; never contains both (i,j) and (j,i).
class CrossedPairSet {
 public:
  CrossedPairSet() = default;
  explicit CrossedPairSet(std::vector<IndexPair> pairs);

  const std::vector<IndexPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool contains(const IndexPair& p) const;
  CrossedPairSet transposed() const;

  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  friend bool operator==(const CrossedPairSet&, const CrossedPairSet&) = default;

 private:
  std::vector<IndexPair> pairs_;
};

std::vector<IndexPair> parabolic_root_set(const ParabolicChart& chart);

CrossedPairSet crossed_pairs(const ParabolicChart& from, const ParabolicChart& to);

// Bubble-sort path from `from` to `to`: each step swaps the lowest adjacent
// pair of positions that is still out of order. Includes both endpoints.
std::vector<ParabolicChart> rank_one_path(const ParabolicChart& from, const ParabolicChart& to);

// Reduced path choosing uniformly among the out-of-order adjacent swaps.
std::vector<ParabolicChart> random_reduced_path(const ParabolicChart& from, const ParabolicChart& to,
                                                std::mt19937_64& rng);

// The single pair crossed between two adjacent charts.
IndexPair adjacent_crossed_pair(const ParabolicChart& a, const ParabolicChart& b);

// Index map (block, member) -> position in the concatenated list.
class Flattening {
 public:
  explicit Flattening(std::vector<int> multiplicities);

  const std::vector<int>& multiplicities() const { return mult_; }
  int total() const { return static_cast<int>(offset_.back()); }
  int index(int block, int member) const;
  std::pair<int, int> position(int flat) const;

  // Repeats entry i of s multiplicity[i] times.
  template <class T>
  std::vector<T> embed(std::span<const T> s) const {
    if (s.size() != mult_.size()) throw std::invalid_argument("embed: length mismatch");
    std::vector<T> out;
    out.reserve(total());
    for (std::size_t i = 0; i < s.size(); ++i)
      for (int j = 0; j < mult_[i]; ++j) out.push_back(s[i]);
    return out;
  }

 private:
  std::vector<int> mult_;
  std::vector<int> offset_;
};

struct FlattenResult {
  Flattening map;
  std::vector<double> embedded;
};

FlattenResult flatten_and_embed(const std::vector<int>& multiplicities, std::span<const double> s);

// Chart on the refined Levi whose blocks are the members of each block of
// `chart`, kept in their internal order.
ParabolicChart lift_chart(const ParabolicChart& chart, const Flattening& flat, const Composition& refined);

}  // namespace locnorm
