#ifndef HYPMIX_CONSTANTS_HPP
#define HYPMIX_CONSTANTS_HPP

// Hyperbolicity constants specialised to the Cayley tree of F_k.
//
//   delta                        0   (geodesic triangles are tripods)
//   broken-geodesic C0 floor     168 * delta = 0
//   broken-geodesic C1 floor     C1 > 12 (C0 + 12 delta) = 12 C0
//   broken-geodesic conclusion   d(x_i, [x_0, x_m]) <= 2 C0
//   basepoint change of eta      eta' = 2 delta + eta + 2 d(s,t) = eta + 2 d(s,t)
//   stability of (1, c) paths    kappa = 2c (documentation only)
//
// Orbits of finitely generated subgroups are convex relative to their core
// graph image, so eta = 0 at the basepoint 1.

namespace hypmix::constants {

inline constexpr int delta = 0;
inline constexpr int broken_geodesic_c0_factor = 168;
inline constexpr int broken_geodesic_c1_factor = 12;
inline constexpr int orbit_convexity_eta = 0;

} // namespace hypmix::constants

#endif
