#pragma once

// Finitely supported integer-indexed sequences, strictly positive weights on
// an explicit window, Morrey exponent pairs and evaluation plans. Everything
// here is an immutable value type; operations are pure functions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace morrey {

using index_t = std::int64_t;

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// index -> u64, order-free encoding so negative indices hash fine
inline std::uint64_t zigzag(index_t k) {
  return (static_cast<std::uint64_t>(k) << 1) ^ static_cast<std::uint64_t>(k >> 63);
}

// uniform in [0,1) from 53 high bits; avoids libstdc++ distribution quirks so
// streams are reproducible across standard libraries
inline double unit_double(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Seq: finitely supported real sequence over Z. values[i] = b_{support_lo+i};
// everything outside [support_lo, support_hi] is an exact zero.
// ---------------------------------------------------------------------------
struct Seq {
  index_t support_lo = 0;
  std::vector<double> values;

  index_t support_hi() const {
    return support_lo + static_cast<index_t>(values.size()) - 1;
  }
  index_t size() const { return static_cast<index_t>(values.size()); }

  double at(index_t k) const {
    if (k < support_lo || k > support_hi()) return 0.0;
    return values[static_cast<std::size_t>(k - support_lo)];
  }

  bool is_zero() const {
    for (double v : values)
      if (v != 0.0) return false;
    return true;
  }

  // fold in increasing index order; this order is part of the contract
  double sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }

  double l1_norm() const {
    double s = 0.0;
    for (double v : values) s += std::abs(v);
    return s;
  }

  double max_abs() const {
    double s = 0.0;
    for (double v : values) s = std::max(s, std::abs(v));
    return s;
  }
};

inline Seq make_sequence(std::vector<double> values, index_t offset) {
  if (values.empty()) throw std::invalid_argument("make_sequence: empty value list");
  return Seq{offset, std::move(values)};
}

// Documented post-step: shrink the stored window to the nonzero support.
// The zero sequence keeps a single stored zero at its original offset.
inline Seq trim_zeros(const Seq& b) {
  index_t lo = 0, hi = b.size() - 1;
  while (lo < hi && b.values[static_cast<std::size_t>(lo)] == 0.0) ++lo;
  while (hi > lo && b.values[static_cast<std::size_t>(hi)] == 0.0) --hi;
  std::vector<double> vals(b.values.begin() + lo, b.values.begin() + hi + 1);
  return Seq{b.support_lo + lo, std::move(vals)};
}

// b'_{factor*k} = b_k; gaps are exact zeros. factor >= 1.
inline Seq dilate(const Seq& b, index_t factor) {
  if (factor < 1) throw std::invalid_argument("dilate: factor must be >= 1");
  if (factor == 1) return b;
  std::vector<double> vals(static_cast<std::size_t>((b.size() - 1) * factor + 1), 0.0);
  for (index_t i = 0; i < b.size(); ++i)
    vals[static_cast<std::size_t>(i * factor)] = b.values[static_cast<std::size_t>(i)];
  return Seq{b.support_lo * factor, std::move(vals)};
}

// ---------------------------------------------------------------------------
// Morrey exponent pair (p, lambda), 1 <= p < inf, 0 <= lambda <= 1/p.
// ---------------------------------------------------------------------------
struct MorreyParams {
  double p = 2.0;
  double lambda = 0.25;

  MorreyParams() = default;
  MorreyParams(double p_, double lambda_) : p(p_), lambda(lambda_) { validate(); }

  void validate() const {
    if (!(p >= 1.0) || !std::isfinite(p))
      throw std::invalid_argument("MorreyParams: require 1 <= p < inf");
    if (!(lambda >= 0.0) || !(lambda <= 1.0 / p))
      throw std::invalid_argument("MorreyParams: require 0 <= lambda <= 1/p");
  }

  // the theorems' proofs live on the open range
  bool strict_interior() const { return lambda > 0.0 && lambda < 1.0 / p; }
};

// ---------------------------------------------------------------------------
// Prefix sums over a contiguous integer window; window_sum(m, n) is exact
// up to the fixed left-to-right fold.
// ---------------------------------------------------------------------------
struct PrefixSums {
  index_t lo = 0;
  std::vector<double> prefix;  // prefix[i] = sum of first i stored values

  PrefixSums() = default;
  PrefixSums(index_t lo_, const std::vector<double>& vals) : lo(lo_) {
    prefix.resize(vals.size() + 1);
    prefix[0] = 0.0;
    for (std::size_t i = 0; i < vals.size(); ++i) prefix[i + 1] = prefix[i] + vals[i];
  }

  index_t hi() const { return lo + static_cast<index_t>(prefix.size()) - 2; }

  bool covers(index_t m, index_t n) const { return m >= lo && n <= hi() && m <= n; }

  double window_sum(index_t m, index_t n) const {
    if (!covers(m, n))
      throw std::out_of_range("PrefixSums::window_sum: window outside stored range");
    return prefix[static_cast<std::size_t>(n - lo + 1)] -
           prefix[static_cast<std::size_t>(m - lo)];
  }
};

// ---------------------------------------------------------------------------
// Weight family descriptors. Values are generated per index so that widening
// the window never changes already-generated entries.
// ---------------------------------------------------------------------------
struct WeightSpec {
  enum class Family { Constant, Power, BoundedRandom, Step };

  Family family = Family::Constant;
  double value = 1.0;        // Constant
  double alpha = 0.0;        // Power: (1+|k|)^alpha
  std::uint64_t seed = 0;    // BoundedRandom
  double ratio = 2.0;        // BoundedRandom: values in [1, ratio]
  double low = 1.0;          // Step: low for k < split, high otherwise
  double high = 2.0;
  index_t split = 0;

  static WeightSpec constant(double c) {
    if (!(c > 0.0)) throw std::invalid_argument("weight constant must be > 0");
    WeightSpec s;
    s.family = Family::Constant;
    s.value = c;
    return s;
  }
  static WeightSpec power(double alpha) {
    WeightSpec s;
    s.family = Family::Power;
    s.alpha = alpha;
    return s;
  }
  static WeightSpec bounded_random(std::uint64_t seed, double ratio) {
    if (!(ratio >= 1.0)) throw std::invalid_argument("bounded_random: ratio must be >= 1");
    WeightSpec s;
    s.family = Family::BoundedRandom;
    s.seed = seed;
    s.ratio = ratio;
    return s;
  }
  static WeightSpec step(double low, double high, index_t split = 0) {
    if (!(low > 0.0) || !(high > 0.0))
      throw std::invalid_argument("step weight levels must be > 0");
    WeightSpec s;
    s.family = Family::Step;
    s.low = low;
    s.high = high;
    s.split = split;
    return s;
  }

  double value_at(index_t k) const {
    switch (family) {
      case Family::Constant:
        return value;
      case Family::Power:
        return std::pow(1.0 + static_cast<double>(k < 0 ? -k : k), alpha);
      case Family::BoundedRandom: {
        // log-uniform in [1, ratio]: ratio bound holds by construction
        std::uint64_t h = detail::splitmix64(seed ^ (0x51ed270b9ULL + detail::zigzag(k)));
        double u = detail::unit_double(h);
        return std::pow(ratio, u);
      }
      case Family::Step:
        return k < split ? low : high;
    }
    return 1.0;
  }

  std::string tag() const;
};

// ---------------------------------------------------------------------------
// Weight: strictly positive values on [window_lo, window_hi], with prefix
// sums for O(1) window sums.
// ---------------------------------------------------------------------------
struct Weight {
  index_t window_lo = 0;
  std::vector<double> values;
  std::string family;  // descriptor tag, empty for ad hoc weights
  PrefixSums sums;

  Weight() = default;
  Weight(index_t lo, std::vector<double> vals, std::string family_tag = "")
      : window_lo(lo), values(std::move(vals)), family(std::move(family_tag)) {
    if (values.empty()) throw std::invalid_argument("Weight: empty window");
    for (double v : values)
      if (!(v > 0.0) || !std::isfinite(v))
        throw std::invalid_argument("Weight: all values must be finite and > 0");
    sums = PrefixSums(window_lo, values);
  }

  index_t window_hi() const {
    return window_lo + static_cast<index_t>(values.size()) - 1;
  }

  bool covers(index_t m, index_t n) const { return m >= window_lo && n <= window_hi(); }

  double at(index_t k) const {
    if (k < window_lo || k > window_hi())
      throw std::out_of_range("Weight::at: index outside window");
    return values[static_cast<std::size_t>(k - window_lo)];
  }

  double min_value() const { return *std::min_element(values.begin(), values.end()); }
};

inline Weight make_weight(const WeightSpec& spec, index_t lo, index_t hi) {
  if (lo > hi) throw std::invalid_argument("make_weight: empty window");
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (index_t k = lo; k <= hi; ++k) vals.push_back(spec.value_at(k));
  return Weight(lo, std::move(vals), spec.tag());
}

inline Weight scale_weight(const Weight& w, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scale_weight: factor must be > 0");
  std::vector<double> vals = w.values;
  for (double& v : vals) v *= c;
  return Weight(w.window_lo, std::move(vals), w.family);
}

// Exact partial sum over [m, n]; never silently extends the window.
inline double window_sum(const Weight& w, index_t m, index_t n) {
  if (m > n) throw std::invalid_argument("window_sum: require m <= n");
  if (!w.covers(m, n)) throw std::out_of_range("window_sum: window outside weight range");
  return w.sums.window_sum(m, n);
}

// ---------------------------------------------------------------------------
// Evaluation plan: the transform window, the extra search margin for norm
// sups, and the policy for bounding what the window cuts off.
// ---------------------------------------------------------------------------
enum class TailPolicy { ReportLowerBound, AnalyticTail };

struct EvalPlan {
  index_t eval_lo = 0;
  index_t eval_hi = 0;
  index_t search_margin = 0;
  TailPolicy tail_policy = TailPolicy::AnalyticTail;

  static EvalPlan symmetric(index_t halfwidth, index_t margin = 0,
                            TailPolicy policy = TailPolicy::AnalyticTail) {
    if (halfwidth < 0) throw std::invalid_argument("EvalPlan: negative halfwidth");
    if (margin < 0) throw std::invalid_argument("EvalPlan: negative margin");
    return EvalPlan{-halfwidth, halfwidth, margin, policy};
  }

  index_t width() const { return eval_hi - eval_lo + 1; }

  void require_contains(const Seq& b) const {
    if (eval_lo > b.support_lo || eval_hi < b.support_hi())
      throw std::invalid_argument("EvalPlan: evaluation window must contain the support");
    if (search_margin < 0) throw std::invalid_argument("EvalPlan: negative margin");
  }
};

inline std::string WeightSpec::tag() const {
  auto fmt = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", x);
    return std::string(buf);
  };
  switch (family) {
    case Family::Constant:
      return "const:" + fmt(value);
    case Family::Power:
      return "power:" + fmt(alpha);
    case Family::BoundedRandom:
      return "random:" + std::to_string(seed) + ":" + fmt(ratio);
    case Family::Step:
      return "step:" + fmt(low) + ":" + fmt(high) + ":" + std::to_string(split);
  }
  return "";
}

// "const:1", "power:0.5", "random:7:4", "step:1:100:0"
inline WeightSpec parse_weight_spec(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  auto num = [&](std::size_t i) {
    if (i >= parts.size()) throw std::invalid_argument("weight spec: missing field in '" + text + "'");
    std::size_t pos = 0;
    double v = std::stod(parts[i], &pos);
    if (pos != parts[i].size()) throw std::invalid_argument("weight spec: bad number '" + parts[i] + "'");
    return v;
  };
  if (parts.empty()) throw std::invalid_argument("weight spec: empty");
  const std::string& kind = parts[0];
  if (kind == "const") return WeightSpec::constant(num(1));
  if (kind == "power") return WeightSpec::power(num(1));
  if (kind == "random")
    return WeightSpec::bounded_random(static_cast<std::uint64_t>(num(1)), num(2));
  if (kind == "step")
    return WeightSpec::step(num(1), num(2),
                            parts.size() > 3 ? static_cast<index_t>(num(3)) : 0);
  throw std::invalid_argument("weight spec: unknown family '" + kind + "'");
}

}  // namespace morrey
