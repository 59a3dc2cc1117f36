#include "teich/freenc/ncseries.hpp"

#include <sstream>

namespace teich::freenc {

std::string word_to_string(const Word& w) {
  std::string out = "[";
  for (auto l : w) out += "x" + std::to_string(l + 1);
  return out + "]";
}

FreeWord parse_free_word(const std::string& text) {
  FreeWord out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (v == 0) throw Error(ErrorKind::parse, "free-group letters are nonzero");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::parse, "bad free-group letter '" + item + "'");
    }
  }
  return out;
}

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

namespace {

NCSeries embed(int r, int m, const FreeWord& w, bool exponential) {
  auto out = NCSeries::one(r, m);
  for (int l : w) {
    const int i = std::abs(l) - 1;
    if (l == 0 || i >= r) throw Error(ErrorKind::precondition, "letter outside the free group's rank");
    auto x = NCSeries::letter(r, m, i);
    if (l < 0) x = -x;
    NCSeries factor = exponential ? nc_exp(x) : NCSeries::one(r, m);
    if (!exponential) {
      if (l > 0) {
        factor += x;
      } else {
        // (1 + X)^{-1} = sum (-X)^k, and x already holds -X.
        auto power = NCSeries::one(r, m);
        for (int k = 1; k <= m; ++k) {
          power = power * x;
          factor += power;
        }
      }
    }
    out = out * factor;
  }
  return out;
}

}  // namespace

NCSeries magnus_embed(int r, int m, const FreeWord& w) { return embed(r, m, w, false); }

NCSeries exp_embed(int r, int m, const FreeWord& w) { return embed(r, m, w, true); }

bool is_grouplike(const NCSeries& x) {
  return x.augmentation() == 1 && coproduct(x) == tensor(x, x);
}

bool is_primitive(const NCSeries& x) {
  const auto one = NCSeries::one(x.letters(), x.max_length());
  return sgn(x.augmentation()) == 0 && coproduct(x) == tensor_sum(tensor(x, one), tensor(one, x));
}

NCSeries torsor_compose(const NCSeries& p, const NCSeries& q) {
  if (!is_grouplike(p) || !is_grouplike(q)) {
    throw Error(ErrorKind::precondition, "torsor composition needs grouplike elements");
  }
  return p * q;
}

std::map<Word, long, WordLess> shuffle(const Word& u, const Word& v) {
  std::map<Word, long, WordLess> out;
  if (u.empty() || v.empty()) {
    out[u.empty() ? v : u] = 1;
    return out;
  }
  // sh(au', bv') = a sh(u', bv') + b sh(au', v')
  for (const auto& [w, c] : shuffle(Word(u.begin() + 1, u.end()), v)) {
    Word x{u.front()};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += c;
  }
  for (const auto& [w, c] : shuffle(u, Word(v.begin() + 1, v.end()))) {
    Word x{v.front()};
    x.insert(x.end(), w.begin(), w.end());
    out[x] += c;
  }
  return out;
}

}  // namespace teich::freenc
