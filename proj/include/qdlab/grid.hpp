#pragma once

// Periodic lattice and complex fields on it. The frequency lattice is
// xi = 2 pi k / L with k in {-n/2, ..., n/2 - 1} per axis; the bin at index
// n/2 carries k = -n/2 (the Nyquist frequency). Fields are immutable values
// in spirit: operations return new fields.

#include <complex>
#include <cstddef>
#include <new>
#include <vector>

#include <fftw3.h>

namespace qdlab {

// Allocator handing out FFTW-aligned storage so transform plans and field
// buffers always share alignment (required for plan reuse across arrays).
template <class T>
struct FftwAllocator {
  using value_type = T;

  FftwAllocator() = default;
  template <class U>
  FftwAllocator(const FftwAllocator<U>&) {}

  T* allocate(std::size_t n) {
    void* p = fftw_malloc(n * sizeof(T));
    if (p == nullptr) throw std::bad_alloc();
    return static_cast<T*>(p);
  }
  void deallocate(T* p, std::size_t) noexcept { fftw_free(p); }

  template <class U>
  bool operator==(const FftwAllocator<U>&) const {
    return true;
  }
};

using complex_vector = std::vector<std::complex<double>, FftwAllocator<std::complex<double>>>;

struct Grid {
  int d = 0;                // dimension, 1..3 (1 only for smoke tests)
  int n = 0;                // points per axis, power of two
  double box_length = 0.0;  // period L per axis
  double spacing = 0.0;     // L / n

  Grid() = default;
  Grid(int d_, int n_, double box_length_);

  std::size_t size() const;

  // Integer frequency k for axis index i: i for i < n/2, i - n otherwise.
  int freq_int(int i) const { return i < n / 2 ? i : i - n; }
  // Physical frequency 2 pi k / L for axis index i.
  double xi_axis(int i) const { return two_pi_over_length * freq_int(i); }
  bool is_nyquist(int i) const { return i == n / 2; }
  // Largest |xi| on the lattice (attained at the Nyquist bin).
  double xi_max_axis() const { return two_pi_over_length * (n / 2); }

  double two_pi_over_length = 0.0;

  bool operator==(const Grid& other) const {
    return d == other.d && n == other.n && box_length == other.box_length;
  }
};

enum class Domain { Space, Frequency };

struct Field {
  Grid grid;
  Domain domain = Domain::Space;
  complex_vector values;

  Field() = default;
  Field(const Grid& g, Domain dom)
      : grid(g), domain(dom), values(g.size(), std::complex<double>(0.0, 0.0)) {}
};

struct VectorField {
  std::vector<Field> components;

  VectorField() = default;
  VectorField(const Grid& g, Domain dom) : components(g.d, Field(g, dom)) {}

  const Grid& grid() const { return components.front().grid; }
  Domain domain() const { return components.front().domain; }
  int dim() const { return static_cast<int>(components.size()); }
};

// l2 norm of the raw value vector (no lattice measure weights).
double l2_norm(const Field& f);

// max_i |f_i - g_i| over the value vectors.
double max_abs_diff(const Field& f, const Field& g);

}  // namespace qdlab
