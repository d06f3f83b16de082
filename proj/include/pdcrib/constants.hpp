#pragma once

namespace pdcrib {

// CODATA values, fixed here for bit-reproducible output.
inline constexpr double c0      = 299792458.0;        // m/s
inline constexpr double eps0    = 8.8541878128e-12;   // F/m
inline constexpr double mu0     = 1.25663706212e-6;   // H/m
inline constexpr double pi      = 3.14159265358979323846;

// Photon energy <-> vacuum wavelength, E[eV] = ev_um / lambda[um].
inline constexpr double ev_um   = 1.23984193;

inline double eta0() { return 376.730313668; }  // sqrt(mu0/eps0), ohm

inline double omega_from_um(double lambda_um) {
    return 2.0 * pi * c0 / (lambda_um * 1e-6);
}
inline double um_from_omega(double omega) {
    return 2.0 * pi * c0 / omega * 1e6;
}

}  // namespace pdcrib
