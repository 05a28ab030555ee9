#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wsp {

// Word-level kernels over rows of a packed bit matrix. These are the inner
// loops of transitive-closure propagation and authorization-list
// intersection, so they come in a scalar reference form and an AVX2 form
// picked at runtime. Both forms must agree bit for bit; the unit suite
// cross-checks them on random rows.
namespace bitrows {

struct Kernels {
    void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    // True iff a and b share at least one set bit.
    bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    std::size_t (*popcount)(const std::uint64_t* a, std::size_t nwords);
    const char* name;
};

const Kernels& scalar();
const Kernels* avx2();     // nullptr when the CPU lacks AVX2
const Kernels& active();   // scalar or avx2, resolved once

}  // namespace bitrows

// Row-major packed bit matrix with a fixed number of columns.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          data_(rows * words_per_row_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_per_row_; }

    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_per_row_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_per_row_; }

    bool test(std::size_t r, std::size_t c) const {
        return (row(r)[c >> 6] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
    void clear(std::size_t r, std::size_t c) { row(r)[c >> 6] &= ~(std::uint64_t{1} << (c & 63)); }

    void or_row(std::size_t dst, std::size_t src) {
        bitrows::active().or_into(row(dst), row(src), words_per_row_);
    }
    void and_row(std::size_t dst, std::size_t src) {
        bitrows::active().and_into(row(dst), row(src), words_per_row_);
    }
    bool rows_intersect(std::size_t a, std::size_t b) const {
        return bitrows::active().intersects(row(a), row(b), words_per_row_);
    }
    std::size_t row_popcount(std::size_t r) const {
        return bitrows::active().popcount(row(r), words_per_row_);
    }

    std::vector<int> row_members(std::size_t r) const;

    bool operator==(const BitMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_per_row_ = 0;
    std::vector<std::uint64_t> data_;
};

}  // namespace wsp
