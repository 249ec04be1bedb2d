#pragma once

#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "necollapse/complex.hpp"
#include "necollapse/poset.hpp"
#include "necollapse/poset_map.hpp"

namespace nec {

// "a", "b", ..., "z", "a1", ... (sorted for n <= 26).
std::vector<std::string> default_labels(unsigned n);

// Every labeled poset on the elements default_labels(n), each exactly once.
void for_each_poset(unsigned n, const std::function<void(const Poset&)>& visit);

void for_each_monotone_map(const Poset& p, const std::function<void(const PosetMap&)>& visit);
void for_each_increasing_map(const Poset& p, const std::function<void(const PosetMap&)>& visit);

// Every nonvoid complex whose vertices are drawn from the first n default
// labels (all antichains of nonempty subsets).
void for_each_complex(unsigned n, const std::function<void(const SimplicialComplex&)>& visit);

// Random complex on a subset of `labels`: `facet_count` random nonempty
// faces, each vertex kept with probability one half.
SimplicialComplex random_complex(std::mt19937_64& rng, std::span<const std::string> labels, unsigned facet_count);

}  // namespace nec
