#pragma once

#include <vector>

#include "hermite/rational.hpp"

namespace hermite {

// Memoized tables for unsigned Stirling numbers of the first kind [n m],
// Stirling numbers of the second kind {n m}, binomial coefficients and the
// Gregory coefficients
//
//   G_n = (1/n!) * sum_{j=0}^{n} [n j] (-1)^(n-j) / (j+1).
//
// An instance is not synchronized.  The free functions below share one table
// behind a mutex, so they are safe to call from concurrent sweeps; warm_up()
// can be used to precompute everything up front.
class CombinatoricsTable {
 public:
  const Integer& stirling_first(unsigned n, unsigned m);
  const Integer& stirling_second(unsigned n, unsigned m);
  const Integer& binomial(unsigned n, unsigned k);
  const Rational& gregory(unsigned n);

  void warm_up(unsigned n);

 private:
  void extend_first(unsigned n);
  void extend_second(unsigned n);
  void extend_binomial(unsigned n);
  void extend_gregory(unsigned n);

  std::vector<std::vector<Integer>> first_;     // first_[n][m], m <= n
  std::vector<std::vector<Integer>> second_;    // second_[n][m], m <= n
  std::vector<std::vector<Integer>> binomial_;  // binomial_[n][k], k <= n
  std::vector<Rational> gregory_;
};

Integer stirling_first(unsigned n, unsigned m);
Integer stirling_second(unsigned n, unsigned m);
Integer binomial(unsigned n, unsigned k);
Rational gregory(unsigned n);
Integer factorial(unsigned n);

void warm_up_combinatorics(unsigned n);

}  // namespace hermite
