#pragma once

namespace bom {

/// Sum of |n|^{-a} |m|^{-b} over nonzero integer pairs with |n|, |m| <= N and
/// |n+m| > threshold (threshold <= 0 means N).  Exact: the inner range is
/// closed out with prefix sums, so the cost is O(N).
double pair_tail_sum(int N, double a, double b, int threshold = 0);

/// Sum of |n|^{-e1} |m|^{-e2} |l|^{-e3} over nonzero triples bounded by N
/// with |n+m+l| > threshold (threshold <= 0 means N).  The l-range is closed
/// out analytically per (n, m); O(N^2).  N > 512 is rejected as a cost guard.
double triple_tail_sum(int N, double e1, double e2, double e3, int threshold = 0);

/// Sum of |n|^{-e} over 0 < |n| <= N (with lower cutoff |n| > from when
/// given).
double power_tail_sum(int N, double e, int from = 0);

/// The two sums whose ln(N)/N decay the experiments track.
double high_pair_sum(int N);    // exponents (2, 1)
double high_triple_sum(int N);  // exponents (2, 2, 1)

}  // namespace bom
