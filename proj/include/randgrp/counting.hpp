#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace randgrp {

using BigInt = boost::multiprecision::cpp_int;

// Counts of reduced words of length n+2 with prescribed end letters:
//   p_n : s u s          (last letter equals the first)
//   q_n : s u s^-1       (last letter inverse to the first)
//   r_n : s u t          (t a fixed letter other than s, s^-1)
// for a fixed first letter s.  n = 0 is the degenerate "s t" case
// (p_0 = r_0 = 1, q_0 = 0), convenient as a recursion base.
struct EndpointCounts {
  int n = 0;
  BigInt p;
  BigInt q;
  BigInt r;
};

// Runs the three-term recurrence from n = 1.  Requires m >= 2, n >= 1.
EndpointCounts endpoint_counts(int m, int n);

// Rows 0..n_max of the recurrence.
std::vector<EndpointCounts> endpoint_count_table(int m, int n_max);

// Closed form for q_n (n >= 0), independent of the recurrence.
BigInt closed_form_q(int m, int n);

// Number of reduced words of length l (2m(2m-1)^(l-1), and 1 for l = 0).
BigInt count_reduced(int m, int l);

// N_l: cyclically reduced words of length exactly l, via 2m p_(l-1).
BigInt count_cyclically_reduced(int m, int l);

// N_l from the closed form (2m-1)^l + 1 + (2m-2)[l even]; used by the
// sampler on hot paths.  Agrees with count_cyclically_reduced.
BigInt count_cyclically_reduced_closed(int m, int l);

// N_(<=l) = N_1 + ... + N_l.
BigInt count_cyclically_reduced_upto(int m, int l);

struct OmissionBoundInput {
  int m = 2;
  std::int64_t l = 0;  // relator length
  std::int64_t g = 0;  // length of the omitted word
};

// Upper bound on the fraction of cyclically reduced words of length l that
// omit a fixed reduced word of length g:
//   exp( 2/(2m-1)^(l/2 - 1) - l / (9 g (2m-1)^g) ),  clamped to <= 1.
// Requires m >= 2 and 4 < g < l/4.
double omission_bound(OmissionBoundInput const& in);

// Natural log of the unclamped bound (no underflow for large l).
double log_omission_bound(OmissionBoundInput const& in);

}  // namespace randgrp
