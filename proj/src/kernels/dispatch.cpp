#include "tube/kernels/subset_filter.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>

namespace tube::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
    case Isa::Neon: return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::Neon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::Avx2)) return Isa::Avx2;
  if (isa_available(Isa::Neon)) return Isa::Neon;
  return Isa::Scalar;
}

ImplicationSet::ImplicationSet(int width) : width_(width) {
  if (width < 0 || width > kMaxWidth) {
    throw std::invalid_argument("implication set width out of range: " + std::to_string(width));
  }
}

void ImplicationSet::add(std::uint64_t premise, std::uint64_t required) {
  auto [it, inserted] = index_.try_emplace(premise, premise_.size());
  if (inserted) {
    premise_.push_back(premise);
    required_.push_back(required);
  } else {
    required_[it->second] |= required;
  }
}

bool ImplicationSet::satisfied_by(std::uint64_t mask) const {
  for (std::size_t c = 0; c < premise_.size(); ++c) {
    if ((mask & premise_[c]) == premise_[c] && (mask & required_[c]) != required_[c]) return false;
  }
  return true;
}

std::vector<std::uint64_t> closed_subsets(const ImplicationSet& set, std::uint64_t begin,
                                          std::uint64_t end, Isa isa) {
  if (!isa_available(isa)) {
    throw std::invalid_argument("ISA not available: " + std::string(isa_name(isa)));
  }
  std::vector<std::uint64_t> out;
  const std::uint64_t* p = set.premises().data();
  const std::uint64_t* r = set.requirements().data();
  const std::size_t c = set.size();
  const bool narrow = set.width() <= 31;
  switch (isa) {
    case Isa::Scalar: detail::scan_scalar(p, r, c, begin, end, out); break;
    case Isa::Avx2:
      narrow ? detail::scan_avx2_u32(p, r, c, begin, end, out)
             : detail::scan_avx2_u64(p, r, c, begin, end, out);
      break;
    case Isa::Neon:
      narrow ? detail::scan_neon_u32(p, r, c, begin, end, out)
             : detail::scan_neon_u64(p, r, c, begin, end, out);
      break;
  }
  return out;
}

unsigned thread_count() {
  if (const char* env = std::getenv("TUBE_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<std::uint64_t> closed_subsets(const ImplicationSet& set) {
  const std::uint64_t total = std::uint64_t{1} << set.width();
  const Isa isa = best_isa();
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(thread_count(), std::max<std::uint64_t>(1, total >> 12)));
  if (workers <= 1) return closed_subsets(set, 0, total, isa);

  // Chunks are concatenated in range order, so the output stays sorted.
  std::vector<std::vector<std::uint64_t>> parts(workers);
  std::vector<std::thread> pool;
  const std::uint64_t step = (total + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t lo = std::min(total, w * step);
    const std::uint64_t hi = std::min(total, lo + step);
    pool.emplace_back([&, w, lo, hi] { parts[w] = closed_subsets(set, lo, hi, isa); });
  }
  for (auto& t : pool) t.join();
  std::vector<std::uint64_t> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace tube::kernels
