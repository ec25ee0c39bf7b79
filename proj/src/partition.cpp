#include "fcensus/partition.hpp"

#include <algorithm>
#include <numeric>

namespace fcensus {

bool is_partition(const Partition& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) return false;
    if (i > 0 && p[i] > p[i - 1]) return false;
  }
  return true;
}

unsigned weight(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0u); }

namespace {

void generate(unsigned rest, unsigned max_part, Partition& cur, std::vector<Partition>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
    cur.push_back(part);
    generate(rest - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_bounded(unsigned n, unsigned max_part) {
  std::vector<Partition> out;
  Partition cur;
  if (max_part == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  generate(n, max_part, cur, out);
  return out;
}

std::vector<Partition> partitions_of(unsigned n) { return partitions_bounded(n, n); }

std::vector<Partition> partitions_with_parts(unsigned n, unsigned k) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(n)) {
    if (p.size() == k) out.push_back(std::move(p));
  }
  return out;
}

Partition conjugate(const Partition& p) {
  Partition out(p.empty() ? 0 : p.front(), 0);
  for (unsigned part : p) {
    for (unsigned i = 0; i < part; ++i) ++out[i];
  }
  return out;
}

}  // namespace fcensus
