#include "tube/kernels/subset_filter.hpp"

#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace tube::kernels::detail {

#if defined(__aarch64__)

void scan_neon_u32(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  static const std::uint32_t kIota[4] = {0, 1, 2, 3};
  const uint32x4_t iota = vld1q_u32(kIota);
  std::uint64_t mask = begin;
  for (; mask + 4 <= end; mask += 4) {
    const uint32x4_t s = vaddq_u32(vdupq_n_u32(static_cast<std::uint32_t>(mask)), iota);
    uint32x4_t bad = vdupq_n_u32(0);
    for (std::size_t c = 0; c < count; ++c) {
      const uint32x4_t p = vdupq_n_u32(static_cast<std::uint32_t>(premise[c]));
      const uint32x4_t r = vdupq_n_u32(static_cast<std::uint32_t>(required[c]));
      const uint32x4_t has_p = vceqq_u32(vandq_u32(s, p), p);
      const uint32x4_t has_r = vceqq_u32(vandq_u32(s, r), r);
      bad = vorrq_u32(bad, vbicq_u32(has_p, has_r));
      if ((c + 1) % 8 == 0 && vminvq_u32(bad) != 0) break;
    }
    std::uint32_t lanes[4];
    vst1q_u32(lanes, bad);
    for (int lane = 0; lane < 4; ++lane) {
      if (lanes[lane] == 0) out.push_back(mask + static_cast<std::uint64_t>(lane));
    }
  }
  scan_scalar(premise, required, count, mask, end, out);
}

void scan_neon_u64(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  static const std::uint64_t kIota[2] = {0, 1};
  const uint64x2_t iota = vld1q_u64(kIota);
  std::uint64_t mask = begin;
  for (; mask + 2 <= end; mask += 2) {
    const uint64x2_t s = vaddq_u64(vdupq_n_u64(mask), iota);
    uint64x2_t bad = vdupq_n_u64(0);
    for (std::size_t c = 0; c < count; ++c) {
      const uint64x2_t p = vdupq_n_u64(premise[c]);
      const uint64x2_t r = vdupq_n_u64(required[c]);
      const uint64x2_t has_p = vceqq_u64(vandq_u64(s, p), p);
      const uint64x2_t has_r = vceqq_u64(vandq_u64(s, r), r);
      bad = vorrq_u64(bad, vbicq_u64(has_p, has_r));
    }
    if (vgetq_lane_u64(bad, 0) == 0) out.push_back(mask);
    if (vgetq_lane_u64(bad, 1) == 0) out.push_back(mask + 1);
  }
  scan_scalar(premise, required, count, mask, end, out);
}

#else

void scan_neon_u32(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  scan_scalar(premise, required, count, begin, end, out);
}

void scan_neon_u64(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  scan_scalar(premise, required, count, begin, end, out);
}

#endif

}  // namespace tube::kernels::detail
