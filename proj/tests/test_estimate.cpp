#include <cmath>
#include <vector>

#include "doctest.h"
#include "secrecy/estimate.hpp"

using namespace secrecy;

TEST_SUITE("estimate") {

TEST_CASE("compensated sum survives magnitude cancellation") {
  // Naive summation returns 0.0 here; the compensation term preserves the 1.
  CompensatedSum s;
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 1.0);
}

TEST_CASE("compensated sum keeps tiny addends that naive addition drops") {
  CompensatedSum s;
  s.add(1.0);
  double naive = 1.0;
  // 30 addends of 1e-17 accumulate to 3e-16, above half an ulp of 1.0, so
  // the compensated total must round up while naive addition drops them all.
  for (int i = 0; i < 30; ++i) {
    s.add(1e-17);
    naive += 1e-17;  // no-op in double precision
  }
  CHECK(naive == 1.0);
  CHECK(s.value() == doctest::Approx(1.0 + 3e-16).epsilon(1e-12));
  CHECK(s.value() > 1.0);
}

TEST_CASE("merging partial sums equals sequential accumulation") {
  CompensatedSum whole, left, right;
  for (int i = 0; i < 1000; ++i) {
    const double x = std::sin(double(i)) * 1e8 + 1e-8;
    whole.add(x);
    (i < 500 ? left : right).add(x);
  }
  left.merge(right);
  CHECK(left.value() == doctest::Approx(whole.value()).epsilon(1e-15));
}

TEST_CASE("mean accumulator reproduces closed-form mean, variance and ci") {
  MeanAccum acc;
  for (double x : {1.0, 2.0, 3.0, 4.0}) acc.add(x);
  CHECK(acc.count == 4);
  CHECK(acc.mean() == doctest::Approx(2.5));
  CHECK(acc.variance() == doctest::Approx(5.0 / 3.0));
  CHECK(acc.ci95() ==
        doctest::Approx(1.959963984540054 * std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("mean accumulator merge matches a single pass") {
  MeanAccum whole, a, b;
  for (int i = 0; i < 101; ++i) {
    const double x = 0.1 * double(i * i) - 3.0;
    whole.add(x);
    (i % 2 ? a : b).add(x);
  }
  a.merge(b);
  CHECK(a.count == whole.count);
  CHECK(a.mean() == doctest::Approx(whole.mean()).epsilon(1e-14));
  CHECK(a.variance() == doctest::Approx(whole.variance()).epsilon(1e-12));
}

TEST_CASE("degenerate accumulators report zero spread") {
  MeanAccum empty;
  CHECK(empty.mean() == 0.0);
  CHECK(empty.variance() == 0.0);
  CHECK(empty.ci95() == 0.0);

  MeanAccum single;
  single.add(3.25);
  CHECK(single.mean() == 3.25);
  CHECK(single.variance() == 0.0);

  MeanAccum constant;
  for (int i = 0; i < 10; ++i) constant.add(2.0);
  CHECK(constant.variance() == 0.0);
  CHECK(constant.ci95() == 0.0);
}

TEST_CASE("ratio accumulator with constant denominator reduces to a mean") {
  // mean(w)/c with var only from w: the delta-method interval must match the
  // plain mean interval divided by c.
  MeanAccum plain;
  RatioAccum ratio;
  const double c = 2.0;
  for (int i = 0; i < 50; ++i) {
    const double w = std::cos(double(i));
    plain.add(w);
    ratio.add(w, c);
  }
  CHECK(ratio.ratio() == doctest::Approx(plain.mean() / c).epsilon(1e-14));
  CHECK(ratio.ci95() == doctest::Approx(plain.ci95() / c).epsilon(1e-10));
}

TEST_CASE("ratio accumulator handles proportional numerators exactly") {
  // w = k*t for every sample: the ratio is exactly k with zero variance.
  RatioAccum acc;
  for (double t : {1.0, 2.0, 5.0, 8.0}) acc.add(3.0 * t, t);
  CHECK(acc.ratio() == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(acc.ci95() == doctest::Approx(0.0).epsilon(1e-10));
}

TEST_CASE("ratio accumulator merge matches single pass") {
  RatioAccum whole, a, b;
  for (int i = 1; i <= 200; ++i) {
    const double w = 1.0 / double(i);
    const double t = 1.0 + (i % 7);
    whole.add(w, t);
    (i % 3 ? a : b).add(w, t);
  }
  a.merge(b);
  CHECK(a.ratio() == doctest::Approx(whole.ratio()).epsilon(1e-14));
  CHECK(a.ci95() == doctest::Approx(whole.ci95()).epsilon(1e-12));
}

TEST_CASE("bound estimate labels survive round-trip") {
  const BoundEstimate lo{0.5, 0.01, 100, BoundKind::lower};
  const BoundEstimate hi{0.7, 0.02, 100, BoundKind::upper};
  CHECK(std::string(to_string(lo.kind)) == "lower");
  CHECK(std::string(to_string(hi.kind)) == "upper");
}

}  // TEST_SUITE
