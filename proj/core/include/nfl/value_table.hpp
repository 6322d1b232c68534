#pragma once

#include "nfl/rational.hpp"
#include "nfl/search_space.hpp"

#include <string>
#include <vector>

namespace nfl {

enum class Orientation { maximize, minimize };

const char* orientation_name(Orientation o);
Orientation parse_orientation(const std::string& name);

// True when `candidate` is strictly better than `incumbent` under `o`.
bool value_improves(const Rat& candidate, const Rat& incumbent, Orientation o);

// An objective function as one exact value per point.
struct ValueTable {
  std::vector<Rat> values;
  Orientation orientation = Orientation::maximize;

  ValueTable() = default;
  ValueTable(std::vector<Rat> vals, Orientation o);

  int size() const { return static_cast<int>(values.size()); }
  const Rat& at(int point) const;

  // Index of the unique best/worst point; precondition error on ties.
  int unique_optimum() const;
  int unique_pessimum() const;

  bool operator==(const ValueTable& other) const;
};

// Lexicographic order on value sequences (orientation ignored); the canonical
// order for reproducible reports.
bool table_less(const ValueTable& a, const ValueTable& b);

// The sorted multiset of objective values: the invariant that names a CUP class.
struct CupSignature {
  std::vector<Rat> sorted_values;

  bool operator==(const CupSignature& other) const {
    return sorted_values == other.sorted_values;
  }
  bool operator<(const CupSignature& other) const {
    return sorted_values < other.sorted_values;
  }
};

CupSignature cup_signature(const ValueTable& f);

// Distinct values, ascending — the natural codomain for policies over f.
std::vector<Rat> distinct_values(const std::vector<Rat>& values);

// Named generators used across fixtures and the CLI.
ValueTable onemax_table(int bits);
ValueTable zeromax_table(int bits);
ValueTable parity_table(int bits);

} // namespace nfl
