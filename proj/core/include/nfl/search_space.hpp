#pragma once

#include "nfl/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nfl {

// A finite indexed point set, optionally carrying a neighborhood relation and
// a distance. The NFL/SNFL machinery needs neither; the structure metrics need
// one or both, so both are optional and checked at the point of use.
class SearchSpace {
public:
  // Points 0..size-1, no neighborhood, no distance.
  static SearchSpace plain(int size);

  // Points are the 2^bits assignments, indexed by reading the assignment as a
  // binary number with variable 0 as the most significant bit. Optional
  // one-bit-flip neighborhood and Hamming distance.
  static SearchSpace bitstrings(int bits, bool bitflip_neighbors = true,
                                bool hamming_distance = true);

  // Explicit undirected edges; validated symmetric-irreflexive on build.
  static SearchSpace with_edges(int size, const std::vector<std::pair<int, int>>& edges);

  int size() const { return size_; }

  bool has_bits() const { return bits_.has_value(); }
  int bits() const; // error if not a bitstring space

  bool has_neighborhood() const { return has_neighborhood_; }
  const std::vector<int>& neighbors(int point) const; // sorted ascending

  bool has_distance() const { return has_distance_; }
  const Rat& distance(int a, int b) const;

  // Distances are validated for d(x,x)=0 and symmetry on construction; the
  // triangle inequality is not required and only checked on request.
  bool satisfies_triangle_inequality() const;

  SearchSpace& set_distance(std::vector<std::vector<Rat>> matrix);
  SearchSpace& set_neighbors(std::vector<std::vector<int>> adjacency);

private:
  explicit SearchSpace(int size);

  int size_ = 0;
  std::optional<int> bits_;
  bool has_neighborhood_ = false;
  std::vector<std::vector<int>> neighbors_;
  bool has_distance_ = false;
  std::vector<std::vector<Rat>> distance_;
};

} // namespace nfl
