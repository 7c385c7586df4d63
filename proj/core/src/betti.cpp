#include "sqtriplets/betti.hpp"

#include <sstream>

#include "sqtriplets/sqdegree.hpp"

namespace sqt {

void BettiTable::add(int pos, unsigned mask, long v) {
  if (v == 0) return;
  auto it = entries_.find({pos, mask});
  if (it == entries_.end()) {
    entries_.emplace(Key{pos, mask}, v);
  } else {
    it->second += v;
    if (it->second == 0) entries_.erase(it);
  }
}

long BettiTable::get(int pos, unsigned mask) const {
  auto it = entries_.find({pos, mask});
  return it == entries_.end() ? 0 : it->second;
}

std::map<std::pair<int, int>, long> BettiTable::singly_graded() const {
  std::map<std::pair<int, int>, long> out;
  for (const auto& [key, v] : entries_)
    out[{key.first, mask_card(key.second)}] += v;
  return out;
}

BettiTable BettiTable::translated(int k) const {
  BettiTable out;
  for (const auto& [key, v] : entries_) out.add(key.first - k, key.second, v);
  return out;
}

long BettiTable::total() const {
  long t = 0;
  for (const auto& [key, v] : entries_) t += v;
  return t;
}

std::string BettiTable::to_string(int n) const {
  std::ostringstream os;
  for (const auto& [key, v] : entries_) {
    os << "(" << key.first << ", {";
    bool first = true;
    for (int m : mask_members(key.second, n)) {
      if (!first) os << ",";
      os << m;
      first = false;
    }
    os << "}) -> " << v << "\n";
  }
  return os.str();
}

}  // namespace sqt
