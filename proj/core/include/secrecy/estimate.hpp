#pragma once

#include <cmath>
#include <cstdint>
#include <string>

namespace secrecy {

enum class BoundKind { lower, upper };

inline const char* to_string(BoundKind k) {
  return k == BoundKind::lower ? "lower" : "upper";
}

// A Monte Carlo estimate of a capacity bound, in bits per channel use.
// ci_halfwidth is a 95% normal-approximation halfwidth computed before any
// clamping of the value itself.
struct BoundEstimate {
  double value = 0.0;
  double ci_halfwidth = 0.0;
  std::uint64_t n_samples = 0;
  BoundKind kind = BoundKind::lower;
};

// Neumaier-compensated sum: the error stays O(eps) independent of the number
// of addends, which keeps point-mass instances exact to ~1 ulp.
struct CompensatedSum {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  }
  void merge(const CompensatedSum& o) {
    add(o.sum);
    comp += o.comp;
  }
  double value() const { return sum + comp; }
};

// Streaming mean/variance accumulator.  merge() must be called in a fixed
// order (chunk order) to keep results thread-count independent.
struct MeanAccum {
  CompensatedSum sum;
  CompensatedSum sumsq;
  std::uint64_t count = 0;

  void add(double x) {
    sum.add(x);
    sumsq.add(x * x);
    ++count;
  }
  void merge(const MeanAccum& o) {
    sum.merge(o.sum);
    sumsq.merge(o.sumsq);
    count += o.count;
  }
  double mean() const { return count ? sum.value() / double(count) : 0.0; }
  double variance() const {
    if (count < 2) return 0.0;
    const double m = mean();
    const double v =
        (sumsq.value() - double(count) * m * m) / double(count - 1);
    return v > 0.0 ? v : 0.0;
  }
  // 95% halfwidth for the mean.
  double ci95() const {
    return count ? 1.959963984540054 * std::sqrt(variance() / double(count))
                 : 0.0;
  }
};

// Ratio-of-means estimator mean(w)/mean(t) with a delta-method CI; the
// renewal-reward rate and the session rate both reduce to this.
struct RatioAccum {
  CompensatedSum sw, st, sww, stt, swt;
  std::uint64_t count = 0;

  void add(double w, double t) {
    sw.add(w);
    st.add(t);
    sww.add(w * w);
    stt.add(t * t);
    swt.add(w * t);
    ++count;
  }
  void merge(const RatioAccum& o) {
    sw.merge(o.sw);
    st.merge(o.st);
    sww.merge(o.sww);
    stt.merge(o.stt);
    swt.merge(o.swt);
    count += o.count;
  }
  double mean_w() const { return count ? sw.value() / double(count) : 0.0; }
  double mean_t() const { return count ? st.value() / double(count) : 0.0; }
  double ratio() const {
    const double mt = mean_t();
    return mt != 0.0 ? mean_w() / mt : 0.0;
  }
  double ci95() const {
    if (count < 2) return 0.0;
    const double n = double(count);
    const double mw = mean_w(), mt = mean_t(), r = ratio();
    if (mt == 0.0) return 0.0;
    const double var_w = (sww.value() - n * mw * mw) / (n - 1.0);
    const double var_t = (stt.value() - n * mt * mt) / (n - 1.0);
    const double cov = (swt.value() - n * mw * mt) / (n - 1.0);
    const double v = (var_w - 2.0 * r * cov + r * r * var_t) / (n * mt * mt);
    return v > 0.0 ? 1.959963984540054 * std::sqrt(v) : 0.0;
  }
};

}  // namespace secrecy
