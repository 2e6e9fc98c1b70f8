#include "sidelobe/detail/fft.hpp"

#include <fftw3.h>

#include <cassert>
#include <map>
#include <mutex>

namespace sidelobe::detail {
namespace {

// FFTW plan creation is not thread safe; execution via the new-array
// interface is. Plans are cached per (size, sign) behind a mutex and use
// FFTW_UNALIGNED so they accept arbitrary std::vector storage.
class PlanCache {
public:
    fftw_plan get(std::size_t size, int sign) {
        std::scoped_lock lock(mutex_);
        auto key = std::pair{size, sign};
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;

        fftw_complex* in = fftw_alloc_complex(size);
        fftw_complex* out = fftw_alloc_complex(size);
        fftw_plan plan =
            fftw_plan_dft_1d(static_cast<int>(size), in, out, sign,
                             FFTW_ESTIMATE | FFTW_UNALIGNED);
        fftw_free(in);
        fftw_free(out);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
    static PlanCache instance;
    return instance;
}

void execute(std::span<const std::complex<double>> in,
             std::span<std::complex<double>> out, int sign) {
    assert(in.size() == out.size());
    fftw_plan plan = cache().get(in.size(), sign);
    // Out-of-place c2c execution leaves the input untouched.
    auto* in_ptr = reinterpret_cast<fftw_complex*>(
        const_cast<std::complex<double>*>(in.data()));
    auto* out_ptr = reinterpret_cast<fftw_complex*>(out.data());
    fftw_execute_dft(plan, in_ptr, out_ptr);
}

}  // namespace

void dft_forward(std::span<const std::complex<double>> in,
                 std::span<std::complex<double>> out) {
    execute(in, out, FFTW_FORWARD);
}

void dft_inverse_unnormalized(std::span<const std::complex<double>> in,
                              std::span<std::complex<double>> out) {
    execute(in, out, FFTW_BACKWARD);
}

}  // namespace sidelobe::detail
