#include "randgrp/counting.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "randgrp/error.hpp"

namespace randgrp {

namespace {

void require_m(int m) {
  if (m < 2) {
    throw PreconditionError("generator count must be at least 2, got " +
                            std::to_string(m));
  }
}

BigInt ipow(int base, int exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

}  // namespace

std::vector<EndpointCounts> endpoint_count_table(int m, int n_max) {
  require_m(m);
  if (n_max < 0) {
    throw PreconditionError("endpoint_count_table: negative length");
  }
  std::vector<EndpointCounts> rows;
  rows.reserve(static_cast<std::size_t>(n_max) + 1);
  rows.push_back({0, BigInt(1), BigInt(0), BigInt(1)});
  for (int n = 1; n <= n_max; ++n) {
    auto const& prev = rows.back();
    EndpointCounts next;
    next.n = n;
    next.p = prev.p + (2 * m - 2) * prev.r;
    next.q = prev.q + (2 * m - 2) * prev.r;
    next.r = prev.p + prev.q + (2 * m - 3) * prev.r;
    rows.push_back(std::move(next));
  }
  return rows;
}

EndpointCounts endpoint_counts(int m, int n) {
  require_m(m);
  if (n < 1) {
    throw PreconditionError("endpoint_counts: n must be at least 1, got " +
                            std::to_string(n));
  }
  EndpointCounts cur{1, BigInt(2 * m - 1), BigInt(2 * m - 2),
                     BigInt(2 * m - 2)};
  for (int k = 2; k <= n; ++k) {
    BigInt p = cur.p + (2 * m - 2) * cur.r;
    BigInt q = cur.q + (2 * m - 2) * cur.r;
    BigInt r = cur.p + cur.q + (2 * m - 3) * cur.r;
    cur = {k, std::move(p), std::move(q), std::move(r)};
  }
  return cur;
}

BigInt closed_form_q(int m, int n) {
  require_m(m);
  if (n < 0) {
    throw PreconditionError("closed_form_q: negative n");
  }
  BigInt top = ipow(2 * m - 1, n + 1);
  top -= (n % 2 == 1) ? 1 : (2 * m - 1);
  return top / (2 * m);
}

BigInt count_reduced(int m, int l) {
  require_m(m);
  if (l < 0) {
    throw PreconditionError("count_reduced: negative length");
  }
  if (l == 0) {
    return BigInt(1);
  }
  return 2 * m * ipow(2 * m - 1, l - 1);
}

BigInt count_cyclically_reduced(int m, int l) {
  require_m(m);
  if (l < 1) {
    throw PreconditionError("count_cyclically_reduced: l must be >= 1, got " +
                            std::to_string(l));
  }
  if (l == 1) {
    return BigInt(2 * m);
  }
  return 2 * m * endpoint_counts(m, l - 1).p;
}

BigInt count_cyclically_reduced_closed(int m, int l) {
  require_m(m);
  if (l < 1) {
    throw PreconditionError("count_cyclically_reduced: l must be >= 1, got " +
                            std::to_string(l));
  }
  BigInt n = ipow(2 * m - 1, l) + 1;
  if (l % 2 == 0) {
    n += 2 * m - 2;
  }
  return n;
}

BigInt count_cyclically_reduced_upto(int m, int l) {
  require_m(m);
  if (l < 1) {
    throw PreconditionError(
        "count_cyclically_reduced_upto: l must be >= 1, got " +
        std::to_string(l));
  }
  // N_1 = 2m; N_k = 2m p_(k-1) for k >= 2.
  BigInt total(2 * m);
  if (l == 1) {
    return total;
  }
  BigInt p(2 * m - 1);
  BigInt q(2 * m - 2);
  BigInt r(2 * m - 2);
  total += 2 * m * p;
  for (int k = 3; k <= l; ++k) {
    BigInt np = p + (2 * m - 2) * r;
    BigInt nq = q + (2 * m - 2) * r;
    BigInt nr = p + q + (2 * m - 3) * r;
    p = std::move(np);
    q = std::move(nq);
    r = std::move(nr);
    total += 2 * m * p;
  }
  return total;
}

double log_omission_bound(OmissionBoundInput const& in) {
  require_m(in.m);
  if (!(in.g > 4)) {
    throw PreconditionError("omission_bound: requires g > 4, got g = " +
                            std::to_string(in.g));
  }
  if (!(4 * in.g < in.l)) {
    throw PreconditionError("omission_bound: requires g < l/4, got g = " +
                            std::to_string(in.g) +
                            ", l = " + std::to_string(in.l));
  }
  double const lb = std::log(2.0 * in.m - 1.0);
  double const l = static_cast<double>(in.l);
  double const g = static_cast<double>(in.g);
  double const tail = 2.0 * std::exp(-(l / 2.0 - 1.0) * lb);
  double const gain = std::exp(std::log(l) - std::log(9.0 * g) - g * lb);
  return tail - gain;
}

double omission_bound(OmissionBoundInput const& in) {
  double e = log_omission_bound(in);
  return std::exp(std::min(e, 0.0));
}

}  // namespace randgrp
