#pragma once

#include <cstddef>
#include <vector>

#include "hyperschrod/util.hpp"

namespace hyperschrod {

bool is_pow2(std::size_t n);

// In-place radix-2 FFT.  Forward is unnormalized; inverse divides by n.
void fft(std::vector<cplx>& a, bool inverse);

// Row-major rows x cols transform (rows == cols == power of two).
void fft_2d(std::vector<cplx>& a, std::size_t rows, std::size_t cols, bool inverse);

} // namespace hyperschrod
