#include "emn/surfaces.hpp"

#include <stdexcept>

namespace emn {

Surface Surface::orientable(int g) {
    if (g < 0) throw std::invalid_argument("orientable genus must be >= 0");
    return Surface{SurfaceKind::Orientable, g};
}

Surface Surface::non_orientable(int g) {
    if (g < 1) throw std::invalid_argument("non-orientable genus must be >= 1");
    return Surface{SurfaceKind::NonOrientable, g};
}

int chi(Surface s) {
    return s.kind == SurfaceKind::Orientable ? 2 - 2 * s.genus : 2 - s.genus;
}

std::int64_t isqrt_floor(std::int64_t x) {
    if (x < 0) throw std::domain_error("isqrt of negative value");
    std::int64_t lo = 0, hi = 3037000499LL; // floor(sqrt(2^63 - 1))
    while (lo < hi) {
        std::int64_t mid = lo + (hi - lo + 1) / 2;
        if (mid * mid <= x)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

int mu(Surface s) {
    if (s.kind == SurfaceKind::Orientable && s.genus == 0) return 3;
    return static_cast<int>(2 + isqrt_floor(4 - 2 * static_cast<std::int64_t>(chi(s))));
}

Rational c_constant(Surface s) {
    int x = chi(s);
    if (x > -1) throw std::domain_error("c is defined for surfaces with chi <= -1");
    return Rational(4) - Rational(2 * static_cast<std::int64_t>(x), mu(s) + 1);
}

bool claim3_holds(Surface s) {
    return c_constant(s).floor() <= mu(s);
}

namespace {
long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}
} // namespace

long long theorem2_threshold(int k, Surface s) {
    if (k < 4) throw std::domain_error("threshold defined for k >= 4");
    long long g = s.genus;
    long long num = s.kind == SurfaceKind::Orientable ? 8 * g - 8 : 4 * g - 8;
    return floor_div(num, k - 3) + 1;
}

} // namespace emn
