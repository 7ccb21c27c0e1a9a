#include "loopcalc/word.hpp"

#include <algorithm>

namespace loopcalc {

Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

Word free_reduce(std::span<const Letter> w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word cyclic_reduce(std::span<const Letter> w) {
  Word r = free_reduce(w);
  std::size_t lo = 0;
  std::size_t hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word rotate(std::span<const Letter> w, std::size_t start) {
  Word out;
  if (w.empty()) return out;
  out.reserve(w.size());
  start %= w.size();
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(start), w.end());
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(start));
  return out;
}

Word least_rotation(std::span<const Letter> w) {
  const std::size_t n = w.size();
  if (n == 0) return {};
  // Booth's least-rotation over the doubled word.
  std::vector<long> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    Letter sj = at(j);
    long i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return rotate(w, k);
}

Word cyclic_segment(std::span<const Letter> w, std::size_t from, std::size_t to) {
  Word out;
  if (w.empty()) return out;
  const std::size_t n = w.size();
  from %= n;
  to %= n;
  for (std::size_t i = from; i != to; i = (i + 1) % n) out.push_back(w[i]);
  return out;
}

Word concat(std::span<const Letter> u, std::span<const Letter> v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

HomotopyClass HomotopyClass::of(std::span<const Letter> w) {
  HomotopyClass c;
  c.word_ = least_rotation(cyclic_reduce(w));
  return c;
}

HomotopyClass HomotopyClass::inverse() const { return of(loopcalc::inverse(word_)); }

}  // namespace loopcalc
