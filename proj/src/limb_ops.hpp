#pragma once

// Limb-level helpers shared by the multiplication backends.

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace qxcorr::limb {

using Limb = std::uint64_t;
using Wide = unsigned __int128;

// z[0, nx + ny) = x * y, quadratic. z must not overlap x or y.
inline void mul_basecase(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny) {
  std::fill(z, z + nx + ny, Limb{0});
  for (std::size_t i = 0; i < nx; ++i) {
    const Limb xi = x[i];
    if (xi == 0) continue;
    Limb carry = 0;
    Limb* row = z + i;
    for (std::size_t j = 0; j < ny; ++j) {
      Wide t = static_cast<Wide>(xi) * y[j] + row[j] + carry;
      row[j] = static_cast<Limb>(t);
      carry = static_cast<Limb>(t >> 64);
    }
    row[ny] = carry;
  }
}

// z[0, nz) += x[0, nx), nx <= nz. Returns the carry out of z.
inline Limb add_into(Limb* z, std::size_t nz, const Limb* x, std::size_t nx) {
  Limb carry = 0;
  std::size_t i = 0;
  for (; i < nx; ++i) {
    Wide t = static_cast<Wide>(z[i]) + x[i] + carry;
    z[i] = static_cast<Limb>(t);
    carry = static_cast<Limb>(t >> 64);
  }
  for (; carry && i < nz; ++i) {
    z[i] += 1;
    carry = (z[i] == 0);
  }
  return carry;
}

// z[0, nz) -= x[0, nx), nx <= nz. Returns the borrow out of z.
inline Limb sub_into(Limb* z, std::size_t nz, const Limb* x, std::size_t nx) {
  Limb borrow = 0;
  std::size_t i = 0;
  for (; i < nx; ++i) {
    const Limb zi = z[i];
    const Limb d = zi - x[i] - borrow;
    borrow = (zi < x[i]) || (zi - x[i] < borrow);
    z[i] = d;
  }
  for (; borrow && i < nz; ++i) {
    borrow = (z[i] == 0);
    z[i] -= 1;
  }
  return borrow;
}

inline std::size_t normalized_size(const Limb* x, std::size_t n) {
  while (n > 0 && x[n - 1] == 0) --n;
  return n;
}

// z[0, nx + ny) = x * y by Karatsuba; quadratic below a small threshold.
void mul_karatsuba(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny);

// z[0, nx + ny) = x * y by Schoenhage-Strassen, Karatsuba for small operands.
void mul_ssa(Limb* z, const Limb* x, std::size_t nx, const Limb* y, std::size_t ny);

}  // namespace qxcorr::limb
