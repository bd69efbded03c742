#include "lpsquare/norms.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "lpsquare/quadrature.hpp"
#include "lpsquare/summation.hpp"

namespace lpsquare {

namespace {

void check_profile(const RearrangedProfile& prof) {
  if (prof.total_samples == 0 || prof.values.size() != prof.total_samples)
    throw std::invalid_argument("profile size does not match total_samples");
  for (std::size_t i = 1; i < prof.values.size(); ++i)
    if (prof.values[i] > prof.values[i - 1])
      throw std::invalid_argument("profile must be sorted descending");
  if (!prof.values.empty() &&
      (!(prof.values.back() >= 0.0) || !std::isfinite(prof.values.front())))
    throw std::invalid_argument("profile values must be finite and >= 0");
}

}  // namespace

double lp_norm(const GridSignal& g, double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("exponent p must be positive and finite");
  const auto v = g.values();
  const double inv = 1.0 / static_cast<double>(g.size());
  double s;
  if (p == 2.0) {
    s = pairwise_sum(v.size(), [&](std::size_t i) { return std::norm(v[i]); });
  } else if (p == 1.0) {
    s = pairwise_sum(v.size(), [&](std::size_t i) { return std::abs(v[i]); });
  } else {
    s = pairwise_sum(v.size(),
                     [&](std::size_t i) { return std::pow(std::abs(v[i]), p); });
  }
  return std::pow(s * inv, 1.0 / p);
}

RearrangedProfile rearrange(const GridSignal& g) {
  RearrangedProfile prof;
  prof.total_samples = g.size();
  prof.values.resize(g.size());
  const auto v = g.values();
  for (std::size_t i = 0; i < v.size(); ++i) prof.values[i] = std::abs(v[i]);
  std::sort(prof.values.begin(), prof.values.end(), std::greater<double>());
  return prof;
}

double weak_l1(const RearrangedProfile& prof) {
  check_profile(prof);
  double best = 0.0;
  for (std::size_t j = 0; j < prof.values.size(); ++j)
    best = std::max(best, prof.values[j] * static_cast<double>(j + 1));
  return best / static_cast<double>(prof.total_samples);
}

double weak_l1_dual(const RearrangedProfile& prof) {
  check_profile(prof);
  const double m = static_cast<double>(prof.total_samples);
  double prefix = 0.0;
  double best = 0.0;
  for (std::size_t j = 0; j < prof.values.size(); ++j) {
    prefix += std::sqrt(prof.values[j]);
    best = std::max(best, prefix * prefix / (m * static_cast<double>(j + 1)));
  }
  return best;
}

double llogr_norm(const RearrangedProfile& prof, double r) {
  check_profile(prof);
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("exponent r must be positive and finite");
  const std::size_t m = prof.total_samples;
  const double inv = 1.0 / static_cast<double>(m);
  const auto& gl = gauss_legendre_rule(8);
  const auto& glag = gauss_laguerre_rule(32);

  // cell [0, 1/M): substitute t = e^{-u}, u = ln M + v, leaving
  // (1/M) * int_0^inf (ln M + v)^r e^{-v} dv.
  const double u0 = std::log(static_cast<double>(m));
  double w0 = 0.0;
  for (std::size_t i = 0; i < glag.nodes.size(); ++i)
    w0 += glag.weights[i] * std::pow(u0 + glag.nodes[i], r);
  w0 *= inv;

  auto term = [&](std::size_t j) {
    const double vj = prof.values[j];
    if (vj == 0.0) return 0.0;
    if (j == 0) return vj * w0;
    const double lo = static_cast<double>(j) * inv;
    const double half = 0.5 * inv;
    const double mid = lo + half;
    double w = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double t = mid + half * gl.nodes[i];
      w += gl.weights[i] * std::pow(-std::log(t), r);
    }
    return vj * w * half;
  };
  return pairwise_sum(m, term);
}

double entropy_functional(const GridSignal& g, double r) {
  if (!(r > 0.0) || !std::isfinite(r))
    throw std::invalid_argument("exponent r must be positive and finite");
  const auto v = g.values();
  const double inv = 1.0 / static_cast<double>(g.size());
  return inv * pairwise_sum(v.size(), [&](std::size_t i) {
           const double ab = std::abs(v[i]);
           if (ab == 0.0) return 0.0;
           return ab * std::pow(std::log1p(ab), r);
         });
}

namespace {

// Count pairs with a[i]*b[j] > lam (gt) and >= lam (ge) among the positive
// prefixes, by a two-pointer sweep. Rounding of the product is monotone in
// the real product, so the staircase structure survives in floating point and
// the counts refer to exactly the same doubles a brute-force materialization
// would produce.
void count_products(std::span<const double> a, std::span<const double> b,
                    double lam, std::uint64_t& gt, std::uint64_t& ge) {
  gt = 0;
  ge = 0;
  std::size_t jg = b.size();
  std::size_t je = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    while (jg > 0 && !(a[i] * b[jg - 1] > lam)) --jg;
    while (je > 0 && !(a[i] * b[je - 1] >= lam)) --je;
    gt += jg;
    ge += je;
    if (je == 0) break;
  }
}

struct ThresholdInterval {
  double lo = 0.0, hi = 0.0;     // candidates live in (lo, hi]
  std::uint64_t gt_lo = 0;       // pairs with product > lo
  std::uint64_t gt_hi = 0;       // pairs with product > hi
  double ub() const { return hi * static_cast<double>(gt_lo); }
};

struct ByUpperBound {
  bool operator()(const ThresholdInterval& x,
                  const ThresholdInterval& y) const {
    return x.ub() < y.ub();
  }
};

}  // namespace

double weak_l1_tensor(const RearrangedProfile& a, const RearrangedProfile& b) {
  check_profile(a);
  check_profile(b);
  const double denom = static_cast<double>(a.total_samples) *
                       static_cast<double>(b.total_samples);

  // positive prefixes; zero products never matter for a positive threshold
  auto positive_prefix = [](const std::vector<double>& v) {
    std::size_t n = v.size();
    while (n > 0 && v[n - 1] <= 0.0) --n;
    return std::span<const double>(v.data(), n);
  };
  const auto pa = positive_prefix(a.values);
  const auto pb = positive_prefix(b.values);
  if (pa.empty() || pb.empty()) return 0.0;

  const double vmax = pa[0] * pb[0];
  const double vmin = pa[pa.size() - 1] * pb[pb.size() - 1];

  std::uint64_t gt, ge;
  count_products(pa, pb, vmax, gt, ge);
  double best = vmax * static_cast<double>(ge);  // vmax is achieved

  std::priority_queue<ThresholdInterval, std::vector<ThresholdInterval>,
                      ByUpperBound>
      queue;
  const double lo0 = vmin > 0.0 ? std::nextafter(vmin, 0.0) : 0.0;
  if (lo0 < vmax) {
    const std::uint64_t all =
        static_cast<std::uint64_t>(pa.size()) * pb.size();
    queue.push({lo0, vmax, all, gt});
  }

  std::uint64_t probes = 0;
  constexpr std::uint64_t kMaxProbes = 5'000'000;
  while (!queue.empty()) {
    const ThresholdInterval node = queue.top();
    queue.pop();
    if (node.ub() <= best) break;  // heap order: nothing better remains

    double mid = std::sqrt(std::max(node.lo, 1e-300)) * std::sqrt(node.hi);
    if (mid <= node.lo) mid = std::nextafter(node.lo, node.hi);
    if (mid >= node.hi) mid = std::nextafter(node.hi, node.lo);
    if (mid <= node.lo) {
      // (lo, hi] spans adjacent doubles; every candidate inside equals hi and
      // appears gt_lo - gt_hi >= 0 times beyond the hi-exceeders
      best = std::max(best, node.hi * static_cast<double>(node.gt_lo));
      continue;
    }

    if (++probes > kMaxProbes)
      throw std::runtime_error("tensor weak norm search did not converge");
    count_products(pa, pb, mid, gt, ge);
    if (ge > gt) best = std::max(best, mid * static_cast<double>(ge));
    best = std::max(best, mid * static_cast<double>(gt));

    if (node.gt_lo > gt) {
      ThresholdInterval left{node.lo, mid, node.gt_lo, gt};
      if (left.ub() > best) queue.push(left);
    }
    if (gt > node.gt_hi) {
      ThresholdInterval right{mid, node.hi, gt, node.gt_hi};
      if (right.ub() > best) queue.push(right);
    }
  }
  return best / denom;
}

}  // namespace lpsquare
