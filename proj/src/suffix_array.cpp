#include "randgrp/suffix_array.hpp"

#include <algorithm>
#include <numeric>

namespace randgrp {

namespace {

using Index = std::int32_t;

std::vector<Index> sort_naive(std::span<Index const> s) {
  Index const n = static_cast<Index>(s.size());
  std::vector<Index> sa(s.size());
  std::iota(sa.begin(), sa.end(), 0);
  std::sort(sa.begin(), sa.end(), [&](Index a, Index b) {
    return std::lexicographical_compare(s.begin() + a, s.begin() + n,
                                        s.begin() + b, s.begin() + n);
  });
  return sa;
}

std::vector<Index> sa_is(std::span<Index const> s, Index upper) {
  Index const n = static_cast<Index>(s.size());
  if (n < 16) {
    return sort_naive(s);
  }
  std::vector<Index> sa(s.size());
  // is_s[i]: suffix i is S-type (smaller than suffix i+1).
  std::vector<bool> is_s(s.size(), false);
  for (Index i = n - 2; i >= 0; --i) {
    is_s[i] = s[i] == s[i + 1] ? is_s[i + 1] : s[i] < s[i + 1];
  }
  // Bucket boundaries: start_l[c] = first slot of bucket c (L part),
  // start_s[c] = first slot of the S part of bucket c.
  std::vector<Index> start_l(static_cast<std::size_t>(upper) + 2, 0);
  std::vector<Index> start_s(static_cast<std::size_t>(upper) + 2, 0);
  for (Index i = 0; i < n; ++i) {
    if (is_s[i]) {
      ++start_l[s[i] + 1];
    } else {
      ++start_s[s[i]];
    }
  }
  for (Index c = 0; c <= upper; ++c) {
    start_s[c] += start_l[c];
    if (c < upper) {
      start_l[c + 1] += start_s[c];
    }
  }

  auto induce = [&](std::vector<Index> const& lms) {
    std::fill(sa.begin(), sa.end(), -1);
    std::vector<Index> slot(start_s);
    for (Index d : lms) {
      if (d != n) {
        sa[slot[s[d]]++] = d;
      }
    }
    slot = start_l;
    sa[slot[s[n - 1]]++] = n - 1;
    for (Index i = 0; i < n; ++i) {
      Index v = sa[i];
      if (v >= 1 && !is_s[v - 1]) {
        sa[slot[s[v - 1]]++] = v - 1;
      }
    }
    slot = start_l;
    for (Index i = n - 1; i >= 0; --i) {
      Index v = sa[i];
      if (v >= 1 && is_s[v - 1]) {
        sa[--slot[s[v - 1] + 1]] = v - 1;
      }
    }
  };

  std::vector<Index> lms_id(s.size() + 1, -1);
  std::vector<Index> lms;
  for (Index i = 1; i < n; ++i) {
    if (!is_s[i - 1] && is_s[i]) {
      lms_id[i] = static_cast<Index>(lms.size());
      lms.push_back(i);
    }
  }
  Index const m = static_cast<Index>(lms.size());
  induce(lms);

  if (m > 0) {
    std::vector<Index> sorted_lms;
    sorted_lms.reserve(lms.size());
    for (Index v : sa) {
      if (lms_id[v] != -1) {
        sorted_lms.push_back(v);
      }
    }
    // Name LMS substrings; equal substrings share a name.
    std::vector<Index> reduced(lms.size());
    Index name = 0;
    reduced[lms_id[sorted_lms[0]]] = 0;
    for (Index i = 1; i < m; ++i) {
      Index a = sorted_lms[i - 1];
      Index b = sorted_lms[i];
      Index end_a = lms_id[a] + 1 < m ? lms[lms_id[a] + 1] : n;
      Index end_b = lms_id[b] + 1 < m ? lms[lms_id[b] + 1] : n;
      bool same = end_a - a == end_b - b;
      if (same) {
        while (a < end_a && s[a] == s[b]) {
          ++a;
          ++b;
        }
        if (a == n || s[a] != s[b]) {
          same = false;
        }
      }
      if (!same) {
        ++name;
      }
      reduced[lms_id[sorted_lms[i]]] = name;
    }
    std::vector<Index> reduced_sa = sa_is(reduced, name);
    for (Index i = 0; i < m; ++i) {
      sorted_lms[i] = lms[reduced_sa[i]];
    }
    induce(sorted_lms);
  }
  return sa;
}

}  // namespace

std::vector<std::int32_t> suffix_array(std::span<std::int32_t const> s,
                                       std::int32_t upper) {
  return sa_is(s, upper);
}

std::vector<std::int32_t> lcp_array(std::span<std::int32_t const> s,
                                    std::span<std::int32_t const> sa) {
  Index const n = static_cast<Index>(s.size());
  std::vector<Index> lcp(s.size(), 0);
  if (n == 0) {
    return lcp;
  }
  std::vector<Index> rank(s.size());
  for (Index i = 0; i < n; ++i) {
    rank[sa[i]] = i;
  }
  Index h = 0;
  for (Index i = 0; i < n; ++i) {
    if (h > 0) {
      --h;
    }
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    Index j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) {
      ++h;
    }
    lcp[rank[i]] = h;
  }
  return lcp;
}

}  // namespace randgrp
