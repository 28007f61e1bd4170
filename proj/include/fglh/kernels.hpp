#pragma once

// Exponent-vector kernels used by the monomial arithmetic.
//
// A monomial is a fixed block of kMaxSlots unsigned byte exponents. The two hot
// operations are exponent addition (monomial product, with overflow detection)
// and the weighted degree (dot product with the per-slot weights). Each has a
// scalar reference implementation and an AVX2 variant; the active table is
// picked once at startup from the CPU feature bits.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace fglh {

inline constexpr std::size_t kMaxSlots = 32;

using ExponentBlock = std::array<std::uint8_t, kMaxSlots>;

namespace kernels {

/// out = a + b slot-wise. Returns false if any slot overflows 255 (out is then unspecified).
using AddFn = bool (*)(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) noexcept;
/// Σ e[i] * w[i] over all kMaxSlots slots.
using WeightFn = std::uint32_t (*)(const std::uint8_t* e, const std::uint8_t* w) noexcept;

struct KernelTable {
    std::string_view name;
    AddFn add_exponents;
    WeightFn weighted_degree;
};

namespace scalar {
bool add_exponents(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) noexcept;
std::uint32_t weighted_degree(const std::uint8_t* e, const std::uint8_t* w) noexcept;
const KernelTable& table() noexcept;
} // namespace scalar

namespace avx2 {
/// True when this build carries the AVX2 kernels and the running CPU supports them.
bool available() noexcept;
bool add_exponents(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) noexcept;
std::uint32_t weighted_degree(const std::uint8_t* e, const std::uint8_t* w) noexcept;
const KernelTable& table() noexcept;
} // namespace avx2

/// The kernel table selected for this process (AVX2 when available, else scalar).
/// Setting FGLH_KERNELS=scalar in the environment forces the reference path.
const KernelTable& active() noexcept;

} // namespace kernels
} // namespace fglh
