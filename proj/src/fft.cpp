#include "qdlab/fft.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include <fftw3.h>

namespace qdlab {

namespace {

// Plan cache. FFTW's planner is not thread-safe, so creation is serialized;
// fftw_execute_dft on distinct arrays is safe to call concurrently.
struct PlanKey {
  int d;
  int n;
  int sign;
  bool operator<(const PlanKey& o) const {
    return std::tie(d, n, sign) < std::tie(o.d, o.n, o.sign);
  }
};

std::mutex plan_mutex;
std::map<PlanKey, fftw_plan>& plan_cache() {
  static std::map<PlanKey, fftw_plan> cache;
  return cache;
}

fftw_plan get_plan(const Grid& g, int sign) {
  const PlanKey key{g.d, g.n, sign};
  std::lock_guard<std::mutex> lock(plan_mutex);
  auto it = plan_cache().find(key);
  if (it != plan_cache().end()) return it->second;

  const std::size_t total = g.size();
  fftw_complex* in = fftw_alloc_complex(total);
  fftw_complex* out = fftw_alloc_complex(total);
  if (in == nullptr || out == nullptr) {
    fftw_free(in);
    fftw_free(out);
    throw std::bad_alloc();
  }
  int dims[3] = {g.n, g.n, g.n};
  fftw_plan plan = fftw_plan_dft(g.d, dims, in, out, sign, FFTW_MEASURE);
  fftw_free(in);
  fftw_free(out);
  if (plan == nullptr) throw std::runtime_error("fftw_plan_dft failed");
  plan_cache().emplace(key, plan);
  return plan;
}

Field transform(const Field& f, int sign, Domain from, Domain to, const char* name) {
  if (f.domain != from) throw std::invalid_argument(std::string(name) + ": wrong domain tag");
  fftw_plan plan = get_plan(f.grid, sign);
  Field out(f.grid, to);
  // Safe: std::complex<double> is layout-compatible with fftw_complex.
  auto* src = reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(f.values.data()));
  auto* dst = reinterpret_cast<fftw_complex*>(out.values.data());
  fftw_execute_dft(plan, src, dst);
  const double scale = 1.0 / std::sqrt(static_cast<double>(f.grid.size()));
  for (std::complex<double>& v : out.values) v *= scale;
  return out;
}

}  // namespace

Field fft(const Field& f) {
  return transform(f, FFTW_FORWARD, Domain::Space, Domain::Frequency, "fft");
}

Field ifft(const Field& f) {
  return transform(f, FFTW_BACKWARD, Domain::Frequency, Domain::Space, "ifft");
}

Field to_domain(const Field& f, Domain target) {
  if (f.domain == target) return f;
  return target == Domain::Frequency ? fft(f) : ifft(f);
}

}  // namespace qdlab
