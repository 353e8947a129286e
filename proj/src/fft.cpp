// FFTW-backed complex transforms on the odd M^d cube.
//
// Plans are created with FFTW_ESTIMATE (deterministic algorithm choice, so
// norm-level results are reproducible run to run) and cached per (size, sign).
// Execution goes through the new-array interface on fftw-aligned scratch
// buffers, so callers can pass ordinary vectors.

#include "nlwave/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>

namespace nlwave::fft {

namespace {

struct FftwDeleter {
  void operator()(fftw_complex* p) const { fftw_free(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwDeleter>;

FftwBuffer alloc(std::size_t n) {
  return FftwBuffer(fftw_alloc_complex(n));
}

class PlanCache {
 public:
  fftw_plan get(int rank, int size, std::int64_t total, int sign) {
    std::scoped_lock lock(mu_);
    const auto key = std::tuple{rank, size, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;

    FftwBuffer a = alloc(std::size_t(total));
    FftwBuffer b = alloc(std::size_t(total));
    int dims[3] = {size, size, size};
    fftw_plan plan =
        fftw_plan_dft(rank, dims, a.get(), b.get(), sign, FFTW_ESTIMATE);
    plans_.emplace(key, plan);
    return plan;
  }

  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

std::vector<std::complex<double>> run(const GridSpec& g,
                                      std::span<const std::complex<double>> in,
                                      int sign) {
  const std::int64_t n = g.total_modes();
  if (std::int64_t(in.size()) != n)
    throw ShapeError("transform input size does not match the grid");

  fftw_plan plan = cache().get(g.dim, g.points_per_axis(), n, sign);

  FftwBuffer a = alloc(std::size_t(n));
  FftwBuffer b = alloc(std::size_t(n));
  for (std::int64_t i = 0; i < n; ++i) {
    a[i][0] = in[i].real();
    a[i][1] = in[i].imag();
  }
  fftw_execute_dft(plan, a.get(), b.get());

  std::vector<std::complex<double>> out(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) out[i] = {b[i][0], b[i][1]};
  return out;
}

}  // namespace

std::vector<std::complex<double>> forward(
    const GridSpec& g, std::span<const std::complex<double>> in) {
  return run(g, in, FFTW_FORWARD);
}

std::vector<std::complex<double>> backward(
    const GridSpec& g, std::span<const std::complex<double>> in) {
  return run(g, in, FFTW_BACKWARD);
}

}  // namespace nlwave::fft
