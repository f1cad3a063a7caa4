#include "classprod/qh_cp1.hpp"

#include <string>

namespace classprod {

QHClass::QHClass(int d, int k) : d_(d), k_(k) {
  if (d < 0) throw ContractError("q exponent must be nonnegative");
  if (k != 1 && k != 2) throw ContractError("Schubert index must be 1 or 2");
}

QHClass qh_mul(const QHClass& x, const QHClass& y) {
  const int ones = (x.k() == 1 ? 1 : 0) + (y.k() == 1 ? 1 : 0);
  return QHClass(x.d() + y.d() + ones / 2, ones % 2 == 1 ? 1 : 2);
}

SchubertWord::SchubertWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) throw ContractError("Schubert word must be nonempty");
  for (int i : letters_)
    if (i != 1 && i != 2) throw ContractError("Schubert letters must be 1 or 2, got " + std::to_string(i));
}

SchubertWord SchubertWord::from_mask(int n, std::uint64_t twos_mask) {
  std::vector<int> letters(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) letters[static_cast<std::size_t>(j)] = ((twos_mask >> (n - 1 - j)) & 1U) ? 2 : 1;
  return SchubertWord(std::move(letters));
}

QHClass qh_word_product(const SchubertWord& w) {
  int ones = 0;
  for (int i : w.letters()) ones += (i == 1);
  return QHClass(ones / 2, ones % 2 == 1 ? 1 : 2);
}

SignedInequality qh_inequality(const SchubertWord& w) {
  const QHClass product = qh_word_product(w);
  const int n = w.size();
  std::vector<int> signs;
  signs.reserve(static_cast<std::size_t>(n) + 1);
  for (int i : w.letters()) signs.push_back(i == 1 ? 1 : -1);  // (-1)^(i-1)
  signs.push_back(product.k() == 2 ? 1 : -1);                  // (-1)^k
  return {SignPattern::from_signs(signs), ScaledValue::multiple_of_pi(2 * product.d())};
}

InequalitySystem qh_system(int n, int cap) {
  check_cap(n, cap, "word length");
  InequalitySystem sys;
  sys.count_angles = n + 1;
  const std::uint64_t end = 1ULL << n;
  sys.inequalities.reserve(end);
  for (std::uint64_t mask = 0; mask < end; ++mask)
    sys.inequalities.push_back(qh_inequality(SchubertWord::from_mask(n, mask)));
  sys.canonicalize();
  return sys;
}

}  // namespace classprod
