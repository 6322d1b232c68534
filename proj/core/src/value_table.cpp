#include "nfl/value_table.hpp"

#include "nfl/errors.hpp"

#include <algorithm>

namespace nfl {

const char* orientation_name(Orientation o) {
  return o == Orientation::maximize ? "maximize" : "minimize";
}

Orientation parse_orientation(const std::string& name) {
  if (name == "maximize") return Orientation::maximize;
  if (name == "minimize") return Orientation::minimize;
  throw Error(ErrorKind::schema, "unknown orientation '" + name + "'");
}

bool value_improves(const Rat& candidate, const Rat& incumbent, Orientation o) {
  return o == Orientation::maximize ? candidate > incumbent : candidate < incumbent;
}

ValueTable::ValueTable(std::vector<Rat> vals, Orientation o)
    : values(std::move(vals)), orientation(o) {
  if (values.empty()) throw Error(ErrorKind::invariant, "value table must be nonempty");
}

const Rat& ValueTable::at(int point) const {
  if (point < 0 || point >= size())
    throw Error(ErrorKind::invariant, "point out of range");
  return values[point];
}

int ValueTable::unique_optimum() const {
  int best = 0;
  int count = 1;
  for (int x = 1; x < size(); ++x) {
    if (value_improves(values[x], values[best], orientation)) {
      best = x;
      count = 1;
    } else if (values[x] == values[best]) {
      ++count;
    }
  }
  if (count != 1)
    throw Error(ErrorKind::precondition, "optimum value is tied across points");
  return best;
}

int ValueTable::unique_pessimum() const {
  const Orientation flipped =
      orientation == Orientation::maximize ? Orientation::minimize : Orientation::maximize;
  ValueTable mirror(values, flipped);
  try {
    return mirror.unique_optimum();
  } catch (const Error&) {
    throw Error(ErrorKind::precondition, "pessimum value is tied across points");
  }
}

bool ValueTable::operator==(const ValueTable& other) const {
  return orientation == other.orientation && values == other.values;
}

bool table_less(const ValueTable& a, const ValueTable& b) {
  // Consistent with operator==: tables tie on values alone only when their
  // orientations also match, so containers keyed by this ordering never merge
  // a maximizing table with its minimizing twin.
  if (a.values != b.values)
    return std::lexicographical_compare(a.values.begin(), a.values.end(),
                                        b.values.begin(), b.values.end());
  return a.orientation < b.orientation;
}

CupSignature cup_signature(const ValueTable& f) {
  CupSignature sig{f.values};
  std::sort(sig.sorted_values.begin(), sig.sorted_values.end());
  return sig;
}

std::vector<Rat> distinct_values(const std::vector<Rat>& values) {
  std::vector<Rat> out = values;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

ValueTable bit_counting_table(int bits, bool count_ones) {
  if (bits < 1 || bits > 20)
    throw Error(ErrorKind::invariant, "bitstring width out of range");
  const int size = 1 << bits;
  std::vector<Rat> values(size);
  for (int x = 0; x < size; ++x) {
    const int ones = __builtin_popcount(static_cast<unsigned>(x));
    values[x] = Rat(count_ones ? ones : bits - ones);
  }
  return ValueTable(std::move(values), Orientation::maximize);
}

} // namespace

ValueTable onemax_table(int bits) { return bit_counting_table(bits, true); }

ValueTable zeromax_table(int bits) { return bit_counting_table(bits, false); }

ValueTable parity_table(int bits) {
  if (bits < 1 || bits > 20)
    throw Error(ErrorKind::invariant, "bitstring width out of range");
  const int size = 1 << bits;
  std::vector<Rat> values(size);
  for (int x = 0; x < size; ++x)
    values[x] = Rat(__builtin_popcount(static_cast<unsigned>(x)) & 1);
  return ValueTable(std::move(values), Orientation::maximize);
}

} // namespace nfl
