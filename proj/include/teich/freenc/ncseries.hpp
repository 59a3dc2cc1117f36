#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "teich/error.hpp"
#include "teich/qseries/rational.hpp"

namespace teich::freenc {

/// Word in the letters 0..r-1.
using Word = std::vector<std::uint8_t>;

/// Length first, then lexicographic.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

/// "[x1x2]" with 1-based letters; "[]" for the empty word.
std::string word_to_string(const Word& w);

namespace detail {
inline bool is_zero(const Rational& c) { return sgn(c) == 0; }
inline bool is_zero(double c) { return c == 0.0; }
inline std::string coeff_string(const Rational& c) { return teich::to_string(c); }
inline std::string coeff_string(double c) {
  std::ostringstream out;
  out.precision(12);
  out << c;
  return out.str();
}
}  // namespace detail

/// Truncated noncommutative power series in r letters: words longer than
/// `max_length` are dropped, zero coefficients are never stored.
template <class Coeff>
class BasicNCSeries {
 public:
  using Terms = std::map<Word, Coeff, WordLess>;

  BasicNCSeries(int letters, int max_length) : r_(letters), m_(max_length) {
    if (letters < 0 || max_length < 0) throw Error(ErrorKind::precondition, "negative alphabet or length");
  }

  static BasicNCSeries one(int r, int m) { return word(r, m, {}, Coeff(1)); }
  static BasicNCSeries letter(int r, int m, int i) { return word(r, m, {static_cast<std::uint8_t>(i)}, Coeff(1)); }
  static BasicNCSeries word(int r, int m, const Word& w, const Coeff& c) {
    BasicNCSeries s(r, m);
    s.add(w, c);
    return s;
  }

  int letters() const noexcept { return r_; }
  int max_length() const noexcept { return m_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coeff coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Coeff(0) : it->second;
  }
  Coeff augmentation() const { return coefficient({}); }

  void add(const Word& w, const Coeff& c) {
    if (detail::is_zero(c) || static_cast<int>(w.size()) > m_) return;
    for (auto l : w) {
      if (l >= r_) throw Error(ErrorKind::precondition, "letter outside the alphabet");
    }
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (detail::is_zero(it->second)) terms_.erase(it);
    }
  }

  BasicNCSeries operator-() const {
    BasicNCSeries r(*this);
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
  }
  BasicNCSeries& operator+=(const BasicNCSeries& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  BasicNCSeries& operator-=(const BasicNCSeries& o) {
    check(o);
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  BasicNCSeries& operator*=(const Coeff& s) {
    if (detail::is_zero(s)) {
      terms_.clear();
      return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
  }
  friend BasicNCSeries operator+(BasicNCSeries a, const BasicNCSeries& b) { return a += b; }
  friend BasicNCSeries operator-(BasicNCSeries a, const BasicNCSeries& b) { return a -= b; }
  friend BasicNCSeries operator*(BasicNCSeries a, const Coeff& s) { return a *= s; }
  friend BasicNCSeries operator*(const Coeff& s, BasicNCSeries a) { return a *= s; }

  friend BasicNCSeries operator*(const BasicNCSeries& a, const BasicNCSeries& b) {
    a.check(b);
    BasicNCSeries out(a.r_, a.m_);
    Word w;
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) {
        if (static_cast<int>(u.size() + v.size()) > a.m_) break;  // sorted by length
        w = u;
        w.insert(w.end(), v.begin(), v.end());
        out.add(w, cu * cv);
      }
    }
    return out;
  }

  /// Component of exact word length k.
  BasicNCSeries homogeneous(int k) const {
    BasicNCSeries out(r_, m_);
    for (const auto& [w, c] : terms_) {
      if (static_cast<int>(w.size()) == k) out.terms_.emplace(w, c);
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      std::string cs = detail::coeff_string(c);
      const bool negative = !cs.empty() && cs[0] == '-';
      if (negative) cs.erase(0, 1);
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
      if (w.empty()) {
        out += cs;
      } else {
        if (cs != "1") out += cs + "*";
        out += word_to_string(w);
      }
      first = false;
    }
    return out;
  }

  friend bool operator==(const BasicNCSeries& a, const BasicNCSeries& b) {
    return a.r_ == b.r_ && a.m_ == b.m_ && a.terms_ == b.terms_;
  }

 private:
  void check(const BasicNCSeries& o) const {
    if (r_ != o.r_ || m_ != o.m_) {
      throw Error(ErrorKind::precondition, "series with different alphabets or truncation lengths");
    }
  }

  int r_;
  int m_;
  Terms terms_;
};

using NCSeries = BasicNCSeries<Rational>;
using RealNCSeries = BasicNCSeries<double>;

/// exp(y) = sum y^k / k!; requires aug(y) = 0.
template <class C>
BasicNCSeries<C> nc_exp(const BasicNCSeries<C>& y) {
  if (!detail::is_zero(y.augmentation())) {
    throw Error(ErrorKind::precondition, "nc_exp needs augmentation 0");
  }
  auto out = BasicNCSeries<C>::one(y.letters(), y.max_length());
  auto power = out;
  for (int k = 1; k <= y.max_length(); ++k) {
    power = power * y * (C(1) / C(k));
    out += power;
  }
  return out;
}

/// log(x) = sum (-1)^(k+1) (x - 1)^k / k; requires aug(x) = 1.
template <class C>
BasicNCSeries<C> nc_log(const BasicNCSeries<C>& x) {
  const auto one = BasicNCSeries<C>::one(x.letters(), x.max_length());
  if (x.augmentation() != C(1)) throw Error(ErrorKind::precondition, "nc_log needs augmentation 1");
  const auto y = x - one;
  BasicNCSeries<C> out(x.letters(), x.max_length());
  auto power = one;
  for (int k = 1; k <= x.max_length(); ++k) {
    power = power * y;
    out += power * (C(k % 2 ? 1 : -1) / C(k));
  }
  return out;
}

/// Two-sided inverse; requires an invertible augmentation.
template <class C>
BasicNCSeries<C> nc_inverse(const BasicNCSeries<C>& x) {
  const C a = x.augmentation();
  if (detail::is_zero(a)) throw Error(ErrorKind::not_invertible, "augmentation 0 is not invertible");
  const auto one = BasicNCSeries<C>::one(x.letters(), x.max_length());
  const auto y = one - x * (C(1) / a);  // x = a (1 - y)
  auto out = one, power = one;
  for (int k = 1; k <= x.max_length(); ++k) {
    power = power * y;
    out += power;
  }
  return out * (C(1) / a);
}

/// [x, y] = xy - yx.
template <class C>
BasicNCSeries<C> bracket(const BasicNCSeries<C>& x, const BasicNCSeries<C>& y) {
  return x * y - y * x;
}

/// Element of the free group: letters +-(i+1), negative for inverses.
using FreeWord = std::vector<int>;

/// "1,-2,1" -> {1, -2, 1}.
FreeWord parse_free_word(const std::string& text);
FreeWord free_reduce(const FreeWord& w);
FreeWord free_inverse(const FreeWord& w);

/// gamma_i -> 1 + X_i, gamma_i^-1 -> sum_k (-X_i)^k.
NCSeries magnus_embed(int r, int m, const FreeWord& w);
/// gamma_i -> exp(X_i).
NCSeries exp_embed(int r, int m, const FreeWord& w);

/// Sparse tensor square element u (x) v.
template <class C>
using Tensor = std::map<std::pair<Word, Word>, C>;

/// Deshuffle coproduct with primitive letters.
template <class C>
Tensor<C> coproduct(const BasicNCSeries<C>& x) {
  Tensor<C> out;
  for (const auto& [w, c] : x.terms()) {
    const std::size_t n = w.size();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Word left, right;
      for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? left : right).push_back(w[i]);
      auto& slot = out[{left, right}];
      slot += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = detail::is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return out;
}

/// x (x) y truncated at total length m.
template <class C>
Tensor<C> tensor(const BasicNCSeries<C>& x, const BasicNCSeries<C>& y) {
  Tensor<C> out;
  for (const auto& [u, cu] : x.terms()) {
    for (const auto& [v, cv] : y.terms()) {
      if (static_cast<int>(u.size() + v.size()) > x.max_length()) continue;
      out[{u, v}] += cu * cv;
    }
  }
  for (auto it = out.begin(); it != out.end();) {
    it = detail::is_zero(it->second) ? out.erase(it) : std::next(it);
  }
  return out;
}

template <class C>
Tensor<C> tensor_sum(Tensor<C> a, const Tensor<C>& b) {
  for (const auto& [k, c] : b) a[k] += c;
  for (auto it = a.begin(); it != a.end();) {
    it = detail::is_zero(it->second) ? a.erase(it) : std::next(it);
  }
  return a;
}

/// Largest |coefficient| of a - b.
template <class C>
double tensor_distance(const Tensor<C>& a, const Tensor<C>& b) {
  double worst = 0;
  auto diff = tensor_sum(a, [&] {
    Tensor<C> neg;
    for (const auto& [k, c] : b) neg[k] = -c;
    return neg;
  }());
  for (const auto& [k, c] : diff) {
    if constexpr (std::is_same_v<C, double>) {
      worst = std::max(worst, std::abs(c));
    } else {
      worst = std::max(worst, std::abs(c.get_d()));
    }
  }
  return worst;
}

/// Delta x - x (x) x; zero (and aug 1) iff grouplike at the truncation.
template <class C>
double grouplike_defect(const BasicNCSeries<C>& x) {
  double aug_gap;
  if constexpr (std::is_same_v<C, double>) {
    aug_gap = std::abs(x.augmentation() - 1.0);
  } else {
    aug_gap = std::abs((x.augmentation() - 1).get_d());
  }
  return std::max(aug_gap, tensor_distance(coproduct(x), tensor(x, x)));
}

template <class C>
double primitive_defect(const BasicNCSeries<C>& x) {
  const auto one = BasicNCSeries<C>::one(x.letters(), x.max_length());
  double aug;
  if constexpr (std::is_same_v<C, double>) {
    aug = std::abs(x.augmentation());
  } else {
    aug = std::abs(x.augmentation().get_d());
  }
  return std::max(aug, tensor_distance(coproduct(x), tensor_sum(tensor(x, one), tensor(one, x))));
}

/// Exact checks for rational series.
bool is_grouplike(const NCSeries& x);
bool is_primitive(const NCSeries& x);

/// Product of grouplike elements; throws Error(precondition) otherwise.
NCSeries torsor_compose(const NCSeries& p, const NCSeries& q);

/// Multiset of shuffles of u and v.
std::map<Word, long, WordLess> shuffle(const Word& u, const Word& v);

}  // namespace teich::freenc
