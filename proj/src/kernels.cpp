#include "fglh/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace fglh::kernels {

namespace scalar {

bool add_exponents(const std::uint8_t* a, const std::uint8_t* b, std::uint8_t* out) noexcept
{
    bool ok = true;
    for (std::size_t i = 0; i < kMaxSlots; ++i) {
        const unsigned s = unsigned(a[i]) + unsigned(b[i]);
        ok &= s <= 0xFFu;
        out[i] = static_cast<std::uint8_t>(s);
    }
    return ok;
}

std::uint32_t weighted_degree(const std::uint8_t* e, const std::uint8_t* w) noexcept
{
    std::uint32_t sum = 0;
    for (std::size_t i = 0; i < kMaxSlots; ++i)
        sum += std::uint32_t(e[i]) * std::uint32_t(w[i]);
    return sum;
}

const KernelTable& table() noexcept
{
    static constexpr KernelTable t{"scalar", &add_exponents, &weighted_degree};
    return t;
}

} // namespace scalar

const KernelTable& active() noexcept
{
    static const KernelTable& selected = [] () -> const KernelTable& {
        const char* forced = std::getenv("FGLH_KERNELS");
        if (forced != nullptr && std::strcmp(forced, "scalar") == 0)
            return scalar::table();
        if (avx2::available())
            return avx2::table();
        return scalar::table();
    }();
    return selected;
}

} // namespace fglh::kernels
