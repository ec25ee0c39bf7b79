#pragma once

#include <vector>

namespace fcensus {

/// Weakly decreasing list of positive integers.
using Partition = std::vector<unsigned>;

bool is_partition(const Partition& p);
unsigned weight(const Partition& p);

/// All partitions of n in descending lexicographic order.
std::vector<Partition> partitions_of(unsigned n);
/// Partitions of n with exactly k parts.
std::vector<Partition> partitions_with_parts(unsigned n, unsigned k);
/// Partitions of n whose parts are all <= max_part.
std::vector<Partition> partitions_bounded(unsigned n, unsigned max_part);

Partition conjugate(const Partition& p);

}  // namespace fcensus
