#include "tube/kernels/subset_filter.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define TUBE_HAVE_X86 1
#endif

namespace tube::kernels::detail {

#ifdef TUBE_HAVE_X86

namespace {

// Constraints are checked in blocks; a block boundary is where we test
// whether every lane has already failed.
constexpr std::size_t kExitStride = 8;

}  // namespace

__attribute__((target("avx2"))) void scan_avx2_u32(
    const std::uint64_t* premise, const std::uint64_t* required, std::size_t count,
    std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& out) {
  const __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  const __m256i ones = _mm256_set1_epi32(-1);
  std::uint64_t mask = begin;
  for (; mask + 8 <= end; mask += 8) {
    const __m256i s =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(mask))), iota);
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t c = 0; c < count; ++c) {
      const __m256i p = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(premise[c])));
      const __m256i r = _mm256_set1_epi32(static_cast<int>(static_cast<std::uint32_t>(required[c])));
      const __m256i has_p = _mm256_cmpeq_epi32(_mm256_and_si256(s, p), p);
      const __m256i has_r = _mm256_cmpeq_epi32(_mm256_and_si256(s, r), r);
      bad = _mm256_or_si256(bad, _mm256_andnot_si256(has_r, has_p));
      if ((c + 1) % kExitStride == 0 && _mm256_testc_si256(bad, ones)) break;
    }
    unsigned keep = ~static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(bad))) & 0xFFu;
    while (keep != 0) {
      const int lane = __builtin_ctz(keep);
      out.push_back(mask + static_cast<std::uint64_t>(lane));
      keep &= keep - 1;
    }
  }
  scan_scalar(premise, required, count, mask, end, out);
}

__attribute__((target("avx2"))) void scan_avx2_u64(
    const std::uint64_t* premise, const std::uint64_t* required, std::size_t count,
    std::uint64_t begin, std::uint64_t end, std::vector<std::uint64_t>& out) {
  const __m256i iota = _mm256_setr_epi64x(0, 1, 2, 3);
  const __m256i ones = _mm256_set1_epi64x(-1);
  std::uint64_t mask = begin;
  for (; mask + 4 <= end; mask += 4) {
    const __m256i s = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(mask)), iota);
    __m256i bad = _mm256_setzero_si256();
    for (std::size_t c = 0; c < count; ++c) {
      const __m256i p = _mm256_set1_epi64x(static_cast<long long>(premise[c]));
      const __m256i r = _mm256_set1_epi64x(static_cast<long long>(required[c]));
      const __m256i has_p = _mm256_cmpeq_epi64(_mm256_and_si256(s, p), p);
      const __m256i has_r = _mm256_cmpeq_epi64(_mm256_and_si256(s, r), r);
      bad = _mm256_or_si256(bad, _mm256_andnot_si256(has_r, has_p));
      if ((c + 1) % kExitStride == 0 && _mm256_testc_si256(bad, ones)) break;
    }
    unsigned keep = ~static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(bad))) & 0xFu;
    while (keep != 0) {
      const int lane = __builtin_ctz(keep);
      out.push_back(mask + static_cast<std::uint64_t>(lane));
      keep &= keep - 1;
    }
  }
  scan_scalar(premise, required, count, mask, end, out);
}

#else

void scan_avx2_u32(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  scan_scalar(premise, required, count, begin, end, out);
}

void scan_avx2_u64(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out) {
  scan_scalar(premise, required, count, begin, end, out);
}

#endif

}  // namespace tube::kernels::detail
