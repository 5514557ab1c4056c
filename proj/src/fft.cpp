#include "hyperschrod/fft.hpp"

#include <cmath>

#include "hyperschrod/errors.hpp"

namespace hyperschrod {

bool is_pow2(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

void fft(std::vector<cplx>& a, bool inverse) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw GridError("fft: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2.0 * M_PI / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
    cplx wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cplx w(1.0, 0.0);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cplx u = a[i + k];
        cplx v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (cplx& z : a) z /= static_cast<double>(n);
}

void fft_2d(std::vector<cplx>& a, std::size_t rows, std::size_t cols, bool inverse) {
  if (a.size() != rows * cols) throw GridError("fft_2d: size mismatch");
  std::vector<cplx> tmp;
  tmp.reserve(std::max(rows, cols));
  // rows
  for (std::size_t r = 0; r < rows; ++r) {
    tmp.assign(a.begin() + static_cast<long>(r * cols), a.begin() + static_cast<long>((r + 1) * cols));
    fft(tmp, inverse);
    std::copy(tmp.begin(), tmp.end(), a.begin() + static_cast<long>(r * cols));
  }
  // columns
  for (std::size_t c = 0; c < cols; ++c) {
    tmp.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) tmp[r] = a[r * cols + c];
    fft(tmp, inverse);
    for (std::size_t r = 0; r < rows; ++r) a[r * cols + c] = tmp[r];
  }
}

} // namespace hyperschrod
