#ifndef EMN_SURFACES_HPP
#define EMN_SURFACES_HPP

#include <cstdint>

#include "emn/rational.hpp"

namespace emn {

enum class SurfaceKind { Orientable, NonOrientable };

/// Closed surface: sphere with g handles, or with g crosscaps.
struct Surface {
    SurfaceKind kind = SurfaceKind::Orientable;
    int genus = 0;

    static Surface orientable(int g);     // g >= 0
    static Surface non_orientable(int g); // g >= 1

    bool operator==(const Surface&) const = default;
};

/// Euler characteristic: 2 - 2g orientable, 2 - g non-orientable.
int chi(Surface s);

/// Smallest k such that no graph embeddable on the surface is k-extendable:
/// 2 + floor(sqrt(4 - 2*chi)), except the sphere, which returns 3. The
/// formula evaluates to 2 at chi = 2, but planar 1-extendable graphs exist
/// and no planar graph is E(2,1), so 3 is the value consistent with the
/// surface-extendability bound.
int mu(Surface s);

/// The constant 4 - 2*chi/(mu+1), exact; defined for chi <= -1 and always
/// strictly greater than 4 there.
Rational c_constant(Surface s);

/// floor(c) <= mu, checked exactly; requires chi <= -1.
bool claim3_holds(Surface s);

/// Vertex-count threshold above which no graph on the surface is E(k-1,1):
/// floor((8g-8)/(k-3)) + 1 orientable, floor((4g-8)/(k-3)) + 1
/// non-orientable, with floor division toward minus infinity so negative
/// thresholds apply to every graph. Requires k >= 4.
long long theorem2_threshold(int k, Surface s);

/// Exact floor of sqrt(x) for x >= 0 (no floating point).
std::int64_t isqrt_floor(std::int64_t x);

} // namespace emn

#endif
