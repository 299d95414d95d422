#include "hermite/combinatorics.hpp"

#include <mutex>

namespace hermite {

namespace {

Integer int_pow(unsigned base, unsigned exp) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

}  // namespace

void CombinatoricsTable::extend_first(unsigned n) {
  if (first_.empty()) first_.push_back({Integer(1)});
  while (first_.size() <= n) {
    unsigned row = static_cast<unsigned>(first_.size());
    const auto& prev = first_[row - 1];
    std::vector<Integer> cur(row + 1);
    cur[0] = 0;
    for (unsigned m = 1; m <= row; ++m) {
      // [n+1 m] = n [n m] + [n m-1]
      Integer v = (m < prev.size()) ? prev[m] * (row - 1) : Integer(0);
      v += prev[m - 1];
      cur[m] = v;
    }
    first_.push_back(std::move(cur));
  }
}

void CombinatoricsTable::extend_second(unsigned n) {
  while (second_.size() <= n) {
    unsigned row = static_cast<unsigned>(second_.size());
    extend_binomial(row);
    std::vector<Integer> cur(row + 1);
    for (unsigned m = 0; m <= row; ++m) {
      // {n m} = (1/m!) sum_{j=0}^{m} C(m,j) (-1)^(m-j) j^n, with 0^0 = 1
      Integer sum = 0;
      for (unsigned j = 0; j <= m; ++j) {
        Integer term = binomial_[m][j] * int_pow(j, row);
        if ((m - j) % 2 == 1) term = -term;
        sum += term;
      }
      Integer mfact;
      mpz_fac_ui(mfact.get_mpz_t(), m);
      Integer q;
      mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), mfact.get_mpz_t());
      cur[m] = q;
    }
    second_.push_back(std::move(cur));
  }
}

void CombinatoricsTable::extend_binomial(unsigned n) {
  if (binomial_.empty()) binomial_.push_back({Integer(1)});
  while (binomial_.size() <= n) {
    unsigned row = static_cast<unsigned>(binomial_.size());
    const auto& prev = binomial_[row - 1];
    std::vector<Integer> cur(row + 1);
    cur[0] = 1;
    cur[row] = 1;
    for (unsigned k = 1; k < row; ++k) cur[k] = prev[k - 1] + prev[k];
    binomial_.push_back(std::move(cur));
  }
}

void CombinatoricsTable::extend_gregory(unsigned n) {
  extend_first(n);
  while (gregory_.size() <= n) {
    unsigned row = static_cast<unsigned>(gregory_.size());
    Rational sum = 0;
    for (unsigned j = 0; j <= row; ++j) {
      Rational term(first_[row][j], Integer(j + 1));
      term.canonicalize();
      if ((row - j) % 2 == 1) term = -term;
      sum += term;
    }
    Integer nfact;
    mpz_fac_ui(nfact.get_mpz_t(), row);
    Rational g = sum / Rational(nfact);
    g.canonicalize();
    gregory_.push_back(g);
  }
}

const Integer& CombinatoricsTable::stirling_first(unsigned n, unsigned m) {
  static const Integer zero(0);
  if (m > n) return zero;
  extend_first(n);
  return first_[n][m];
}

const Integer& CombinatoricsTable::stirling_second(unsigned n, unsigned m) {
  static const Integer zero(0);
  if (m > n) return zero;
  extend_second(n);
  return second_[n][m];
}

const Integer& CombinatoricsTable::binomial(unsigned n, unsigned k) {
  static const Integer zero(0);
  if (k > n) return zero;
  extend_binomial(n);
  return binomial_[n][k];
}

const Rational& CombinatoricsTable::gregory(unsigned n) {
  extend_gregory(n);
  return gregory_[n];
}

void CombinatoricsTable::warm_up(unsigned n) {
  extend_first(n);
  extend_second(n);
  extend_binomial(n);
  extend_gregory(n);
}

namespace {

std::mutex table_mutex;

CombinatoricsTable& shared_table() {
  static CombinatoricsTable table;
  return table;
}

}  // namespace

Integer stirling_first(unsigned n, unsigned m) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return shared_table().stirling_first(n, m);
}

Integer stirling_second(unsigned n, unsigned m) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return shared_table().stirling_second(n, m);
}

Integer binomial(unsigned n, unsigned k) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return shared_table().binomial(n, k);
}

Rational gregory(unsigned n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  return shared_table().gregory(n);
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

void warm_up_combinatorics(unsigned n) {
  std::lock_guard<std::mutex> lock(table_mutex);
  shared_table().warm_up(n);
}

}  // namespace hermite
