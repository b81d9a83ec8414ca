#include "chiral/random.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chiral {

namespace {

constexpr std::uint64_t kPhiloxM0 = 0xD2E7470EE14C6C93ull;
constexpr std::uint64_t kPhiloxM1 = 0xCA5A826395121157ull;
constexpr std::uint64_t kPhiloxW0 = 0x9E3779B97F4A7C15ull;
constexpr std::uint64_t kPhiloxW1 = 0xBB67AE8584CAA73Bull;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b,
                             std::uint64_t& hi) noexcept {
#if defined(__SIZEOF_INT128__)
  const unsigned __int128 product =
      static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b);
  hi = static_cast<std::uint64_t>(product >> 64);
  return static_cast<std::uint64_t>(product);
#else
  const std::uint64_t a_lo = a & 0xFFFFFFFFull, a_hi = a >> 32;
  const std::uint64_t b_lo = b & 0xFFFFFFFFull, b_hi = b >> 32;
  const std::uint64_t t = a_hi * b_lo + ((a_lo * b_lo) >> 32);
  const std::uint64_t u = a_lo * b_hi + (t & 0xFFFFFFFFull);
  hi = a_hi * b_hi + (t >> 32) + (u >> 32);
  return a * b;
#endif
}

}  // namespace

namespace detail {

std::array<std::uint64_t, 4> philox4x64_block(
    std::array<std::uint64_t, 4> counter,
    std::array<std::uint64_t, 2> key) noexcept {
  for (int round = 0; round < 10; ++round) {
    if (round > 0) {
      key[0] += kPhiloxW0;
      key[1] += kPhiloxW1;
    }
    std::uint64_t hi0, hi1;
    const std::uint64_t lo0 = mulhilo(kPhiloxM0, counter[0], hi0);
    const std::uint64_t lo1 = mulhilo(kPhiloxM1, counter[2], hi1);
    counter = {hi1 ^ counter[1] ^ key[0], lo1, hi0 ^ counter[3] ^ key[1], lo0};
  }
  return counter;
}

}  // namespace detail

void Philox4x64::refill() noexcept {
  // increment the 256-bit counter, then encrypt it
  for (auto& word : counter_) {
    if (++word != 0) break;
  }
  block_ = detail::philox4x64_block(counter_, key_);
  block_pos_ = 0;
}

double normal_quantile(double p) noexcept {
  // Wichura (1988), algorithm AS 241, routine PPND16.
  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    const double num =
        (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) * r +
              6.7265770927008700853e+4) * r + 4.5921953931549871457e+4) * r +
            1.3731693765509461125e+4) * r + 1.9715909503065514427e+3) * r +
          1.3314166789178437745e+2) * r + 3.3871328727963666080e+0);
    const double den =
        (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) * r +
              3.9307895800092710610e+4) * r + 2.1213794301586595867e+4) * r +
            5.3941960214247511077e+3) * r + 6.8718700749205790830e+2) * r +
          4.2313330701600911252e+1) * r + 1.0);
    return q * num / den;
  }

  double r = q < 0.0 ? p : 1.0 - p;
  if (r <= 0.0) {  // p outside (0, 1): saturate rather than return NaN
    return q < 0.0 ? -HUGE_VAL : HUGE_VAL;
  }
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    const double num =
        (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
              2.41780725177450611770e-1) * r + 1.27045825245236838258e+0) * r +
            3.64784832476320460504e+0) * r + 5.76949722146069140550e+0) * r +
          4.63033784615654529590e+0) * r + 1.42343711074968357734e+0);
    const double den =
        (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
              1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
            6.89767334985100004550e-1) * r + 1.67638483018380384940e+0) * r +
          2.05319162663775882187e+0) * r + 1.0);
    value = num / den;
  } else {
    r -= 5.0;
    const double num =
        (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
              1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
            2.96560571828504891230e-1) * r + 1.78482653991729133580e+0) * r +
          5.46378491116411436990e+0) * r + 6.65790464350110377720e+0);
    const double den =
        (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
              1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
            1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
          5.99832206555887937690e-1) * r + 1.0);
    value = num / den;
  }
  return q < 0.0 ? -value : value;
}

void draw_into(GeneratorState& gen, const DistributionSpec& spec,
               std::span<double> out) noexcept {
  if (spec.law == Law::uniform) {
    const double a = spec.param1;
    const double width = spec.param2 - spec.param1;
    for (double& value : out) {
      value = a + width * gen.next_unit();
    }
  } else {
    const double m = spec.param1;
    const double s = spec.param2;
    for (double& value : out) {
      value = m + s * normal_quantile(gen.next_unit_open());
    }
  }
}

Sample draw_sample(GeneratorState& gen, const DistributionSpec& spec,
                   Eigen::Index n) {
  if (n < 1) {
    throw std::invalid_argument("draw_sample needs n >= 1, got " +
                                std::to_string(n));
  }
  Eigen::ArrayXd values(n);
  draw_into(gen, spec, std::span<double>(values.data(),
                                         static_cast<std::size_t>(n)));
  return Sample(std::move(values));
}

}  // namespace chiral
