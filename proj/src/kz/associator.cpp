#include "teich/kz/associator.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>

#include "teich/error.hpp"

namespace teich::kz {

NilpotentPair::NilpotentPair(RationalMatrix a, RationalMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (!a_.square() || !b_.square() || a_.rows() != b_.rows()) {
    throw Error(ErrorKind::precondition, "residues must be square matrices of equal size");
  }
  index_a_ = nilpotency_index(a_);
  index_b_ = nilpotency_index(b_);
  if (a_.rows() > 0 && (index_a_ == 0 || index_b_ == 0)) {
    throw Error(ErrorKind::precondition, std::string("residue ") + (index_a_ == 0 ? "A" : "B") +
                                             " is not nilpotent");
  }
}

NilpotentPair random_nilpotent_pair(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-2, 2), unit(-1, 1);
  RationalMatrix a(n, n), b(n, n), lower = RationalMatrix::identity(n), upper = RationalMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = entry(rng);
      b(i, j) = entry(rng);
      lower(j, i) = unit(rng);
      upper(i, j) = unit(rng);
    }
  }
  const RationalMatrix p = lower * upper;
  const RationalMatrix pinv = inverse(p);
  return NilpotentPair(p * a * pinv, p * b * pinv);
}

std::string to_string(ConnectionMatrix::Method m) {
  return m == ConnectionMatrix::Method::ode ? "ode" : "universal-series";
}

double effective_epsilon(const ConnectionOptions& options) {
  if (options.epsilon) return *options.epsilon;
  return options.regularization == Regularization::frobenius ? 1e-2 : 1e-6;
}

std::string to_string(Regularization r) { return r == Regularization::frobenius ? "frobenius" : "plain"; }

namespace {

RealMatrix commutator(const RealMatrix& x, const RealMatrix& y) { return x * y - y * x; }

// Local solution H(t) t^A at 0 of G' = (A/t + B/(t-1)) G, with H = sum H_k t^k,
// k H_k - [A, H_k] = -B sum_{j<k} H_j. Returns H(eps) and the size of the last term.
std::pair<RealMatrix, double> frobenius_factor(const RealMatrix& a, const RealMatrix& b, double eps, int terms) {
  const std::size_t n = a.rows();
  RealMatrix partial = RealMatrix::identity(n);  // sum_{j<k} H_j
  RealMatrix value = RealMatrix::identity(n);    // sum_{j<k} H_j eps^j
  double last = 0, power = 1;
  for (int k = 1; k <= terms; ++k) {
    const double dk = k;
    RealMatrix term = (-(b * partial)) * (1.0 / dk);
    RealMatrix hk = term;
    for (std::size_t p = 1; p < 2 * n && !term.is_zero(); ++p) {
      term = commutator(a, term) * (1.0 / dk);
      hk += term;
    }
    power *= eps;
    partial += hk;
    value += hk * power;
    last = max_abs(hk) * power;
  }
  return {value, last};
}

struct Run {
  RealMatrix result;
  double remainder;
};

Run integrate_connection(const RealMatrix& a, const RealMatrix& b, const RealMatrix& start, double eps,
                         double rtol, Regularization reg) {
  const std::size_t n = a.rows(), p = start.cols();
  const double log_eps = std::log(eps);
  RealMatrix y0 = exp_nilpotent(a, log_eps) * start;
  RealMatrix end_correction = exp_nilpotent(b, -log_eps);
  double remainder = 0;
  if (reg == Regularization::frobenius) {
    const int terms = std::max(2, static_cast<int>(std::ceil(17.0 / -std::log10(eps))) + 1);
    auto [h0, r0] = frobenius_factor(a, b, eps, terms);
    auto [h1, r1] = frobenius_factor(b, a, eps, terms);
    y0 = h0 * y0;
    end_correction = end_correction * inverse(h1);
    remainder = r0 + r1;
  }

  const auto& kern = kernels::active_kernels();
  std::vector<double> y(y0.values());
  auto rhs = [&](double u, const double* state, double* dy) {
    const double t = 1.0 / (1.0 + std::exp(-u));
    const double s = 1.0 / (1.0 + std::exp(u));
    std::fill(dy, dy + n * p, 0.0);
    kern.gemm_acc(s, a.data(), state, dy, n, n, p);
    kern.gemm_acc(-t, b.data(), state, dy, n, n, p);
  };
  const double u1 = std::log1p(-eps) - log_eps;
  OdeOptions ode;
  ode.rtol = rtol;
  ode.atol = rtol * 1e-3;
  ode.h_min = 1e-10;
  integrate_dopri5(rhs, -u1, u1, y, ode, kern);

  RealMatrix g(n, p);
  std::copy(y.begin(), y.end(), g.data());
  const RealMatrix out = end_correction * g;
  // cancellation in the end correction amplifies local errors of the large intermediate state
  const double rounding = (64 * std::numeric_limits<double>::epsilon() + rtol) * static_cast<double>(n) *
                          max_abs(end_correction) * std::max(max_abs(g), max_abs(y0));
  return {out, remainder * std::max(1.0, max_abs(out)) + rounding};
}

// Regularized result with its boundary error: the truncation remainder of the
// local series, or the Richardson correction in the plain scheme.
Run regularized(const RealMatrix& a, const RealMatrix& b, const RealMatrix& start, const ConnectionOptions& options) {
  const double eps = effective_epsilon(options);
  if (!(eps > 0 && eps < 0.5)) throw Error(ErrorKind::precondition, "epsilon must lie in (0, 1/2)");
  if (a.rows() != start.rows()) throw Error(ErrorKind::precondition, "start vectors have the wrong size");
  if (options.regularization == Regularization::frobenius) {
    return integrate_connection(a, b, start, eps, options.rtol, options.regularization);
  }
  const Run coarse = integrate_connection(a, b, start, eps, options.rtol, options.regularization);
  const Run fine = integrate_connection(a, b, start, eps / 2, options.rtol, options.regularization);
  RealMatrix extrapolated = fine.result * 2.0 - coarse.result;
  const double correction = max_abs(extrapolated - fine.result) + fine.remainder + coarse.remainder;
  return {std::move(extrapolated), correction};
}

// Tight run plus a looser run; their distance bounds the integration error.
std::pair<RealMatrix, double> estimated_apply(const RealMatrix& a, const RealMatrix& b, const RealMatrix& start,
                                              const ConnectionOptions& options) {
  ConnectionOptions loose = options;
  loose.rtol = options.rtol * 100;
  Run tight = regularized(a, b, start, options);
  const Run rough = regularized(a, b, start, loose);
  return {std::move(tight.result), max_abs(tight.result - rough.result) + tight.remainder};
}

}  // namespace

RealMatrix connection_apply(const RealMatrix& a, const RealMatrix& b, const RealMatrix& start,
                            const ConnectionOptions& options) {
  return regularized(a, b, start, options).result;
}

ConnectionMatrix ode_connection_matrix(const NilpotentPair& pair, const ConnectionOptions& options) {
  const RealMatrix a = to_real(pair.a()), b = to_real(pair.b());
  auto [phi, error] = estimated_apply(a, b, RealMatrix::identity(pair.size()), options);
  return {to_complex(phi), ConnectionMatrix::Method::ode, error, std::nullopt};
}

namespace {

// Words of length <= w in two letters, shortlex order, with index lookup.
struct WordIndex {
  std::vector<freenc::Word> words;
  std::map<freenc::Word, std::size_t> index;

  explicit WordIndex(int w) {
    words.push_back({});
    for (std::size_t i = 0; i < words.size(); ++i) {
      if (static_cast<int>(words[i].size()) == w) continue;
      for (std::uint8_t l = 0; l < 2; ++l) {
        auto next = words[i];
        next.push_back(l);
        words.push_back(next);
      }
    }
    std::sort(words.begin(), words.end(), freenc::WordLess{});
    for (std::size_t i = 0; i < words.size(); ++i) index.emplace(words[i], i);
  }

  RealMatrix left_multiplication(std::uint8_t letter, int w) const {
    RealMatrix m(words.size(), words.size());
    for (std::size_t j = 0; j < words.size(); ++j) {
      if (static_cast<int>(words[j].size()) == w) continue;
      freenc::Word target{letter};
      target.insert(target.end(), words[j].begin(), words[j].end());
      m(index.at(target), j) = 1;
    }
    return m;
  }
};

}  // namespace

double UniversalAssociator::coefficient(const std::string& word) const {
  freenc::Word w;
  for (char c : word) {
    if (c != 'a' && c != 'b') throw Error(ErrorKind::parse, "associator words use the letters a and b");
    w.push_back(c == 'a' ? 0 : 1);
  }
  return coefficients.coefficient(w);
}

UniversalAssociator universal_associator(int weight, const ConnectionOptions& options) {
  if (weight < 0 || weight > 8) {
    throw Error(ErrorKind::bound_exceeded, "associator weight must lie in [0, 8]");
  }
  const WordIndex words(weight);
  const RealMatrix la = words.left_multiplication(0, weight);
  const RealMatrix lb = words.left_multiplication(1, weight);
  RealMatrix start(words.words.size(), 1);
  start(0, 0) = 1;
  auto [phi, error] = estimated_apply(la, lb, start, options);
  freenc::RealNCSeries series(2, weight);
  for (std::size_t i = 0; i < words.words.size(); ++i) series.add(words.words[i], phi(i, 0));
  return {weight, std::move(series), error};
}

ConnectionMatrix specialize_associator(const UniversalAssociator& u, const NilpotentPair& pair) {
  const std::size_t n = pair.size();
  RealMatrix sum(n, n);
  double error = 0;
  bool truncated = false;
  const RationalMatrix* letters[2] = {&pair.a(), &pair.b()};
  freenc::Word word;
  std::function<void(const RationalMatrix&)> visit = [&](const RationalMatrix& prefix) {
    if (prefix.is_zero()) return;
    if (static_cast<int>(word.size()) > u.weight) {
      truncated = true;
      return;
    }
    const RealMatrix p = to_real(prefix);
    sum += p * u.coefficients.coefficient(word);
    error += u.error * max_abs(p);
    for (std::uint8_t l = 0; l < 2 && !truncated; ++l) {
      word.push_back(l);
      visit(prefix * *letters[l]);
      word.pop_back();
    }
  };
  visit(RationalMatrix::identity(n));
  ConnectionMatrix out{to_complex(sum), ConnectionMatrix::Method::universal_series, error, std::nullopt};
  if (truncated) {
    out.warning = "a word of length " + std::to_string(u.weight + 1) +
                  " in the residues is nonzero; the weight truncation is not exact";
  }
  return out;
}

freenc::RealNCSeries swap_letters(const freenc::RealNCSeries& x) {
  freenc::RealNCSeries out(x.letters(), x.max_length());
  for (const auto& [w, c] : x.terms()) {
    freenc::Word s = w;
    for (auto& l : s) l = static_cast<std::uint8_t>(1 - l);
    out.add(s, c);
  }
  return out;
}

}  // namespace teich::kz
