#pragma once

// Schubert monomials q^d sigma_k in the small quantum cohomology ring of CP^1,
// with sigma_2 = 1 (the fundamental class), sigma_1 the point class and
// sigma_1 * sigma_1 = q. Products of the two Schubert classes never leave this
// monomial form, so no general polynomial ring is needed.
//
// A word (i_1, ..., i_n) in {1,2}^n whose product is q^d sigma_k yields the
// inequality
//   sum_j (-1)^(i_j - 1) l_j + (-1)^k l_{n+1} <= 2d pi
// and the 2^n words reproduce the membership system over n + 1 angles.

#include <vector>

#include "classprod/membership.hpp"

namespace classprod {

class QHClass {
 public:
  /// The unit sigma_2 = q^0 sigma_2.
  QHClass() = default;
  /// Throws ContractError unless d >= 0 and k in {1, 2}.
  QHClass(int d, int k);

  static QHClass unit() { return {}; }
  static QHClass sigma1() { return {0, 1}; }
  static QHClass q() { return {1, 2}; }

  int d() const noexcept { return d_; }
  int k() const noexcept { return k_; }
  /// Real degree with deg q = 4 and deg sigma_1 = 2.
  int degree() const noexcept { return 4 * d_ + (k_ == 1 ? 2 : 0); }

  friend bool operator==(const QHClass&, const QHClass&) = default;

 private:
  int d_ = 0;
  int k_ = 2;
};

QHClass qh_mul(const QHClass& x, const QHClass& y);

/// Letters i_1..i_n, each 1 or 2.
class SchubertWord {
 public:
  /// Throws ContractError on an empty word or a letter outside {1, 2}.
  explicit SchubertWord(std::vector<int> letters);
  /// The word whose j-th letter is 2 when bit (n-1-j) of `twos_mask` is set.
  static SchubertWord from_mask(int n, std::uint64_t twos_mask);

  const std::vector<int>& letters() const noexcept { return letters_; }
  int size() const noexcept { return static_cast<int>(letters_.size()); }

 private:
  std::vector<int> letters_;
};

/// sigma_{i_1} * ... * sigma_{i_n}.
QHClass qh_word_product(const SchubertWord& w);

/// The inequality over n + 1 angles attached to the word.
SignedInequality qh_inequality(const SchubertWord& w);

/// All 2^n words, canonicalized; a system over n + 1 angles.
InequalitySystem qh_system(int n, int cap = kDefaultCap);

}  // namespace classprod
