#include "nfl/search_space.hpp"

#include "nfl/errors.hpp"

#include <algorithm>
#include <string>

namespace nfl {

SearchSpace::SearchSpace(int size) : size_(size) {
  if (size < 1) throw Error(ErrorKind::invariant, "space size must be >= 1");
}

SearchSpace SearchSpace::plain(int size) { return SearchSpace(size); }

SearchSpace SearchSpace::bitstrings(int bits, bool bitflip_neighbors, bool hamming_distance) {
  if (bits < 1 || bits > 20)
    throw Error(ErrorKind::invariant, "bitstring width out of range: " + std::to_string(bits));
  SearchSpace space(1 << bits);
  space.bits_ = bits;
  if (bitflip_neighbors) {
    std::vector<std::vector<int>> adj(space.size_);
    for (int x = 0; x < space.size_; ++x) {
      for (int b = 0; b < bits; ++b) adj[x].push_back(x ^ (1 << b));
      std::sort(adj[x].begin(), adj[x].end());
    }
    space.set_neighbors(std::move(adj));
  }
  if (hamming_distance) {
    std::vector<std::vector<Rat>> dist(space.size_, std::vector<Rat>(space.size_));
    for (int x = 0; x < space.size_; ++x)
      for (int y = 0; y < space.size_; ++y)
        dist[x][y] = Rat(__builtin_popcount(static_cast<unsigned>(x ^ y)));
    space.set_distance(std::move(dist));
  }
  return space;
}

SearchSpace SearchSpace::with_edges(int size, const std::vector<std::pair<int, int>>& edges) {
  SearchSpace space(size);
  std::vector<std::vector<int>> adj(size);
  for (const auto& [a, b] : edges) {
    if (a < 0 || a >= size || b < 0 || b >= size)
      throw Error(ErrorKind::invariant, "edge endpoint out of range");
    if (a == b) throw Error(ErrorKind::invariant, "neighborhood must be irreflexive");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
  space.set_neighbors(std::move(adj));
  return space;
}

int SearchSpace::bits() const {
  if (!bits_) throw Error(ErrorKind::precondition, "space has no bitstring encoding");
  return *bits_;
}

const std::vector<int>& SearchSpace::neighbors(int point) const {
  if (!has_neighborhood_)
    throw Error(ErrorKind::precondition, "space has no neighborhood");
  if (point < 0 || point >= size_)
    throw Error(ErrorKind::invariant, "point out of range");
  return neighbors_[point];
}

const Rat& SearchSpace::distance(int a, int b) const {
  if (!has_distance_) throw Error(ErrorKind::precondition, "space has no distance");
  if (a < 0 || a >= size_ || b < 0 || b >= size_)
    throw Error(ErrorKind::invariant, "point out of range");
  return distance_[a][b];
}

bool SearchSpace::satisfies_triangle_inequality() const {
  if (!has_distance_) throw Error(ErrorKind::precondition, "space has no distance");
  for (int a = 0; a < size_; ++a)
    for (int b = 0; b < size_; ++b)
      for (int c = 0; c < size_; ++c)
        if (distance_[a][c] > distance_[a][b] + distance_[b][c]) return false;
  return true;
}

SearchSpace& SearchSpace::set_distance(std::vector<std::vector<Rat>> matrix) {
  if (static_cast<int>(matrix.size()) != size_)
    throw Error(ErrorKind::invariant, "distance matrix size mismatch");
  for (int a = 0; a < size_; ++a) {
    if (static_cast<int>(matrix[a].size()) != size_)
      throw Error(ErrorKind::invariant, "distance matrix row size mismatch");
    if (matrix[a][a] != 0)
      throw Error(ErrorKind::invariant, "distance d(x,x) must be 0");
    for (int b = 0; b < size_; ++b) {
      if (matrix[a][b] < 0)
        throw Error(ErrorKind::invariant, "distances must be nonnegative");
      if (matrix[a][b] != matrix[b][a])
        throw Error(ErrorKind::invariant, "distance must be symmetric");
    }
  }
  distance_ = std::move(matrix);
  has_distance_ = true;
  return *this;
}

SearchSpace& SearchSpace::set_neighbors(std::vector<std::vector<int>> adjacency) {
  if (static_cast<int>(adjacency.size()) != size_)
    throw Error(ErrorKind::invariant, "adjacency size mismatch");
  for (int a = 0; a < size_; ++a) {
    for (int b : adjacency[a]) {
      if (b < 0 || b >= size_)
        throw Error(ErrorKind::invariant, "adjacency endpoint out of range");
      if (b == a) throw Error(ErrorKind::invariant, "neighborhood must be irreflexive");
      const auto& back = adjacency[b];
      if (!std::binary_search(back.begin(), back.end(), a))
        throw Error(ErrorKind::invariant, "neighborhood must be symmetric");
    }
    if (!std::is_sorted(adjacency[a].begin(), adjacency[a].end()))
      throw Error(ErrorKind::invariant, "adjacency rows must be sorted");
  }
  neighbors_ = std::move(adjacency);
  has_neighborhood_ = true;
  return *this;
}

} // namespace nfl
