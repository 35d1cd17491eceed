#include "tube/kernels/subset_filter.hpp"

namespace tube::kernels::detail {

void scan_scalar(const std::uint64_t* premise, const std::uint64_t* required,
                 std::size_t count, std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& out) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    bool ok = true;
    for (std::size_t c = 0; c < count; ++c) {
      if ((mask & premise[c]) == premise[c] && (mask & required[c]) != required[c]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(mask);
  }
}

}  // namespace tube::kernels::detail
