#include "wsp/bitrows.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define WSP_X86_64 1
#else
#define WSP_X86_64 0
#endif

namespace wsp::bitrows {

namespace {

void or_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] |= src[i];
}

void and_into_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] &= src[i];
}

bool intersects_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

std::size_t popcount_scalar(const std::uint64_t* a, std::size_t nwords) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(a[i]);
    return total;
}

#if WSP_X86_64

__attribute__((target("avx2"))) void or_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                  std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] |= src[i];
}

__attribute__((target("avx2"))) void and_into_avx2(std::uint64_t* dst, const std::uint64_t* src,
                                                   std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] &= src[i];
}

__attribute__((target("avx2"))) bool intersects_avx2(const std::uint64_t* a,
                                                     const std::uint64_t* b,
                                                     std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        if (!_mm256_testz_si256(va, vb)) return true;
    }
    for (; i < nwords; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

__attribute__((target("avx2"))) std::size_t popcount_avx2(const std::uint64_t* a,
                                                          std::size_t nwords) {
    // No vector popcount below AVX-512; stay on the word path.
    std::size_t total = 0;
    for (std::size_t i = 0; i < nwords; ++i) total += std::popcount(a[i]);
    return total;
}

const Kernels kAvx2{or_into_avx2, and_into_avx2, intersects_avx2, popcount_avx2, "avx2"};

#endif  // WSP_X86_64

const Kernels kScalar{or_into_scalar, and_into_scalar, intersects_scalar, popcount_scalar,
                      "scalar"};

const Kernels* resolve() {
#if WSP_X86_64
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return &kScalar;
}

}  // namespace

const Kernels& scalar() { return kScalar; }

const Kernels* avx2() {
#if WSP_X86_64
    if (__builtin_cpu_supports("avx2")) return &kAvx2;
#endif
    return nullptr;
}

const Kernels& active() {
    static const Kernels* chosen = resolve();
    return *chosen;
}

}  // namespace wsp::bitrows

namespace wsp {

std::vector<int> BitMatrix::row_members(std::size_t r) const {
    std::vector<int> out;
    const std::uint64_t* w = row(r);
    for (std::size_t i = 0; i < words_per_row_; ++i) {
        std::uint64_t word = w[i];
        while (word) {
            int bit = std::countr_zero(word);
            out.push_back(static_cast<int>(i * 64 + bit));
            word &= word - 1;
        }
    }
    return out;
}

}  // namespace wsp
