#include "fglh/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#define FGLH_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#endif

namespace fglh::kernels::avx2 {

#if FGLH_HAVE_AVX2_KERNELS

static_assert(kMaxSlots == 32, "AVX2 kernels process exactly one 256-bit block");

bool available() noexcept
{
    return __builtin_cpu_supports("avx2");
}

__attribute__((target("avx2"))) bool add_exponents(const std::uint8_t* a, const std::uint8_t* b,
                                                   std::uint8_t* out) noexcept
{
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
    const __m256i wrapped = _mm256_add_epi8(va, vb);
    const __m256i saturated = _mm256_adds_epu8(va, vb);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out), wrapped);
    const __m256i same = _mm256_cmpeq_epi8(wrapped, saturated);
    return _mm256_movemask_epi8(same) == -1;
}

__attribute__((target("avx2"))) std::uint32_t weighted_degree(const std::uint8_t* e,
                                                              const std::uint8_t* w) noexcept
{
    const __m256i ve = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(e));
    const __m256i vw = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(w));
    // widen to 16 bits; products of two bytes fit in the signed 32-bit madd lanes
    const __m256i e_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(ve));
    const __m256i e_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(ve, 1));
    const __m256i w_lo = _mm256_cvtepu8_epi16(_mm256_castsi256_si128(vw));
    const __m256i w_hi = _mm256_cvtepu8_epi16(_mm256_extracti128_si256(vw, 1));
    const __m256i acc = _mm256_add_epi32(_mm256_madd_epi16(e_lo, w_lo), _mm256_madd_epi16(e_hi, w_hi));
    __m128i s = _mm_add_epi32(_mm256_castsi256_si128(acc), _mm256_extracti128_si256(acc, 1));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
    s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
    return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

#else

bool available() noexcept { return false; }

bool add_exponents(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) noexcept
{
    return scalar::add_exponents(a, b, out);
}

std::uint32_t weighted_degree(const std::uint8_t* e, const std::uint8_t* w) noexcept
{
    return scalar::weighted_degree(e, w);
}

#endif

const KernelTable& table() noexcept
{
    static constexpr KernelTable t{"avx2", &add_exponents, &weighted_degree};
    return t;
}

} // namespace fglh::kernels::avx2
