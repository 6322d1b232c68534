#include "nfl/enumeration.hpp"

#include "nfl/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace nfl {

FunctionSet::FunctionSet(std::vector<ValueTable> tables) : members(std::move(tables)) {
  if (members.empty())
    throw Error(ErrorKind::invariant, "function set must be nonempty");
  const int size = members.front().size();
  const Orientation orientation = members.front().orientation;
  for (const auto& f : members) {
    if (f.size() != size)
      throw Error(ErrorKind::invariant, "function set members live on different spaces");
    if (f.orientation != orientation)
      throw Error(ErrorKind::invariant, "function set members disagree on orientation");
  }
  std::sort(members.begin(), members.end(), table_less);
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

int FunctionSet::space_size() const { return members.front().size(); }

Orientation FunctionSet::orientation() const { return members.front().orientation; }

bool FunctionSet::contains(const ValueTable& f) const {
  const auto it = std::lower_bound(members.begin(), members.end(), f, table_less);
  return it != members.end() && it->values == f.values;
}

BigInt cup_class_size(const CupSignature& signature) {
  const auto& vals = signature.sorted_values;
  BigInt count = 1;
  // |X|! / prod(multiplicity!) built incrementally: multiply by the running
  // length, divide by the running multiplicity of the value just appended.
  BigInt run = 0;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    run = (i > 0 && vals[i] == vals[i - 1]) ? run + 1 : BigInt(1);
    count = count * BigInt(i + 1) / run;
  }
  return count;
}

namespace {

void check_cap(const BigInt& count, std::uint64_t cap, const std::string& what) {
  if (count > BigInt(cap))
    throw Error(ErrorKind::cap_exceeded,
                what + " would enumerate " + count.str() + " objects (cap " +
                    std::to_string(cap) + ")");
}

} // namespace

FunctionSet enumerate_functions(const SearchSpace& space, const std::vector<Rat>& codomain,
                                Orientation orientation, std::uint64_t cap) {
  const std::vector<Rat> values = distinct_values(codomain);
  if (values.empty()) throw Error(ErrorKind::invariant, "empty codomain");
  BigInt total = 1;
  for (int i = 0; i < space.size(); ++i) total *= BigInt(values.size());
  check_cap(total, cap, "function enumeration");

  std::vector<ValueTable> tables;
  tables.reserve(static_cast<std::size_t>(total));
  std::vector<std::size_t> digits(static_cast<std::size_t>(space.size()), 0);
  // Odometer over value indices; lexicographic because values are sorted.
  while (true) {
    std::vector<Rat> row(static_cast<std::size_t>(space.size()));
    for (int p = 0; p < space.size(); ++p)
      row[static_cast<std::size_t>(p)] = values[digits[static_cast<std::size_t>(p)]];
    tables.emplace_back(std::move(row), orientation);
    int pos = space.size() - 1;
    while (pos >= 0 && digits[static_cast<std::size_t>(pos)] + 1 == values.size()) {
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++digits[static_cast<std::size_t>(pos)];
  }
  return FunctionSet(std::move(tables));
}

FunctionSet cup_class(const ValueTable& f, std::uint64_t cap) {
  const CupSignature sig = cup_signature(f);
  check_cap(cup_class_size(sig), cap, "CUP class");
  std::vector<ValueTable> tables;
  std::vector<Rat> perm = sig.sorted_values;
  // next_permutation over the sorted multiset yields each distinct arrangement
  // exactly once, in lexicographic order.
  do {
    tables.emplace_back(perm, f.orientation);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return FunctionSet(std::move(tables));
}

std::vector<FunctionSet> partition_cup(const FunctionSet& fs) {
  std::map<CupSignature, std::vector<ValueTable>> groups;
  for (const auto& f : fs.members) groups[cup_signature(f)].push_back(f);
  std::vector<FunctionSet> parts;
  parts.reserve(groups.size());
  for (auto& [sig, tables] : groups) parts.emplace_back(std::move(tables));
  return parts;
}

CupCheck is_cup(const FunctionSet& fs) {
  for (const FunctionSet& part : partition_cup(fs)) {
    const CupSignature sig = cup_signature(part.members.front());
    if (BigInt(part.size()) == cup_class_size(sig)) continue;
    // Incomplete class: the witness is the lexicographically smallest
    // arrangement of the signature that the set is missing. Scanning stops
    // after at most |part|+1 arrangements, so no cap is needed.
    std::vector<Rat> perm = sig.sorted_values;
    do {
      ValueTable candidate(perm, part.orientation());
      if (!part.contains(candidate))
        return CupCheck{false, std::make_pair(part.members.front(), std::move(candidate))};
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error(ErrorKind::invariant, "class counted incomplete but no arrangement missing");
  }
  return CupCheck{true, std::nullopt};
}

PolicyEnumeration::PolicyEnumeration(const SearchSpace& space, std::vector<Rat> codomain,
                                     std::uint64_t cap)
    : space_size_(space.size()), codomain_(distinct_values(codomain)) {
  if (codomain_.empty()) throw Error(ErrorKind::invariant, "empty codomain");
  count_ = PolicyTree::count(space_size_, static_cast<int>(codomain_.size()));
  check_cap(count_, cap, "policy enumeration");
}

PolicyTree PolicyEnumeration::at(const BigInt& index) const {
  return PolicyTree::from_index(space_size_, codomain_, index);
}

std::vector<PolicyTree> PolicyEnumeration::to_vector() const {
  std::vector<PolicyTree> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (BigInt i = 0; i < count_; ++i) out.push_back(at(i));
  return out;
}

} // namespace nfl
