#pragma once

// Exhaustive filtering of bitmask subsets against a set of implications
// "premise bits all present => required bits all present". Both brute-force
// enumerators (periodic diagrams and polygon diagrams) reduce the Ptolemy
// condition to such a set and scan every subset of their ground set.
//
// Each ISA variant scans a half-open mask range [begin, end) and returns the
// accepted masks in increasing order. The scalar variant is the reference;
// the vector variants must agree with it bit for bit.

#include <cstdint>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tube::kernels {

enum class Isa { Scalar, Avx2, Neon };

std::string_view isa_name(Isa isa);
bool isa_available(Isa isa);
/// Widest ISA supported by the running CPU.
Isa best_isa();

/// Maximum ground-set width. Bit 63 is reserved so that a required mask of
/// all ones can never be met.
inline constexpr int kMaxWidth = 63;

class ImplicationSet {
 public:
  /// A required mask that no scanned subset can contain.
  static constexpr std::uint64_t kUnsatisfiable = ~std::uint64_t{0};

  explicit ImplicationSet(int width);

  int width() const { return width_; }
  std::size_t size() const { return premise_.size(); }
  const std::vector<std::uint64_t>& premises() const { return premise_; }
  const std::vector<std::uint64_t>& requirements() const { return required_; }

  /// Adds premise => required. Implications with equal premises are merged.
  void add(std::uint64_t premise, std::uint64_t required);

  bool satisfied_by(std::uint64_t mask) const;

 private:
  int width_;
  std::vector<std::uint64_t> premise_;
  std::vector<std::uint64_t> required_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Accepted masks in [begin, end), scanned with the given ISA.
std::vector<std::uint64_t> closed_subsets(const ImplicationSet& set, std::uint64_t begin,
                                          std::uint64_t end, Isa isa);

/// Accepted masks among all 2^width subsets, using best_isa() and the worker
/// count from TUBE_THREADS (default: hardware concurrency).
std::vector<std::uint64_t> closed_subsets(const ImplicationSet& set);

/// Worker count honoured by the parallel scans.
unsigned thread_count();

namespace detail {

void scan_scalar(const std::uint64_t* premise, const std::uint64_t* required,
                 std::size_t count, std::uint64_t begin, std::uint64_t end,
                 std::vector<std::uint64_t>& out);

void scan_avx2_u32(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out);
void scan_avx2_u64(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out);

void scan_neon_u32(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out);
void scan_neon_u64(const std::uint64_t* premise, const std::uint64_t* required,
                   std::size_t count, std::uint64_t begin, std::uint64_t end,
                   std::vector<std::uint64_t>& out);

}  // namespace detail

}  // namespace tube::kernels
