#include "udg/kernels.hpp"

#include "kernels_impl.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace udg::kernels {

namespace {

constexpr KernelTable kScalar{Isa::scalar, "scalar", &detail::pairwise_sq_dist_scalar,
                              &detail::edge_objective_scalar};

#if defined(UDG_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2{Isa::avx2, "avx2", &detail::pairwise_sq_dist_avx2, &detail::edge_objective_avx2};
#endif

bool cpu_has_avx2() {
#if defined(UDG_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable& select() {
    if (const char* forced = std::getenv("UDG_KERNELS"); forced != nullptr && std::string(forced) == "scalar") {
        return kScalar;
    }
    if (available(Isa::avx2)) {
        return *avx2_table();
    }
    return kScalar;
}

}  // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(UDG_HAVE_AVX2_KERNELS)
    return &kAvx2;
#else
    return nullptr;
#endif
}

bool available(Isa isa) {
    switch (isa) {
    case Isa::scalar:
        return true;
    case Isa::avx2:
        return avx2_table() != nullptr && cpu_has_avx2();
    }
    return false;
}

const KernelTable& active() {
    static const KernelTable& chosen = select();
    return chosen;
}

const KernelTable& table(Isa isa) {
    if (!available(isa)) {
        throw std::runtime_error("kernel variant not available on this machine");
    }
    return isa == Isa::scalar ? kScalar : *avx2_table();
}

std::vector<double> to_soa(std::span<const Point> points) {
    if (points.empty()) {
        return {};
    }
    const auto n = points.size();
    const auto dim = static_cast<std::size_t>(points.front().size());
    std::vector<double> soa(n * dim);
    for (std::size_t i = 0; i < n; ++i) {
        if (static_cast<std::size_t>(points[i].size()) != dim) {
            throw std::invalid_argument("points have mismatched dimensions");
        }
        for (std::size_t c = 0; c < dim; ++c) {
            soa[c * n + i] = points[i](static_cast<Eigen::Index>(c));
        }
    }
    return soa;
}

std::vector<double> pairwise_distances(std::span<const Point> points) {
    const auto n = points.size();
    if (n == 0) {
        return {};
    }
    const auto dim = static_cast<std::size_t>(points.front().size());
    const auto soa = to_soa(points);
    std::vector<double> out(n * n);
    active().pairwise_sq_dist(soa.data(), n, dim, out.data());
    for (auto& v : out) {
        v = std::sqrt(v);
    }
    return out;
}

}  // namespace udg::kernels
