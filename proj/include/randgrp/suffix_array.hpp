#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace randgrp {

// Suffix array of s by induced sorting (SA-IS), O(n).  Every value of s
// must lie in [0, upper].
std::vector<std::int32_t> suffix_array(std::span<std::int32_t const> s,
                                       std::int32_t upper);

// Kasai's algorithm.  lcp[k] is the longest common prefix of the suffixes
// sa[k-1] and sa[k]; lcp[0] = 0.
std::vector<std::int32_t> lcp_array(std::span<std::int32_t const> s,
                                    std::span<std::int32_t const> sa);

}  // namespace randgrp
