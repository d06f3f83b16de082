#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "pdcrib/errors.hpp"
#include "pdcrib/io.hpp"
#include "pdcrib/materials.hpp"

namespace pdcrib {

enum class Cut { Z, X };

inline std::string to_string(Cut c) { return c == Cut::Z ? "Z" : "X"; }

// Crystal axis <-> laboratory axis bookkeeping. Lab axes are
//   u: horizontal transverse, v: vertical transverse, w: propagation.
// The optic axis (crystal z) is vertical for Z-cut and horizontal in-plane
// for X-cut; propagation runs along crystal x (Z-cut) or crystal y (X-cut).
struct CutAxisMapping {
    // crystal_of_lab[a] = crystal index (0=x,1=y,2=z) seen by lab axis a (0=u,1=v,2=w)
    std::array<int, 3> crystal_of_lab;

    std::array<int, 3> lab_of_crystal() const {
        std::array<int, 3> inv{};
        for (int a = 0; a < 3; ++a) inv[crystal_of_lab[a]] = a;
        return inv;
    }
};

inline CutAxisMapping cut_axis_mapping(Cut cut) {
    if (cut == Cut::Z) return {{1, 2, 0}};  // u=crys y, v=crys z, w=crys x
    return {{2, 0, 1}};                     // u=crys z, v=crys x, w=crys y
}

// Rib cross-section parameters (Fig.-1-style geometry). All lengths in nm.
struct RibGeometry {
    double w_nm = 2000.0;        // rib top width
    double d_nm = 450.0;         // film height
    double h_nm = 300.0;         // etch depth
    double theta_deg = 45.0;     // sidewall angle
    Cut cut = Cut::Z;
    double domain_width_nm = 6000.0;
    double domain_height_nm = 4000.0;
    double grid_step_nm = 20.0;

    void validate() const {
        if (!(h_nm > 0 && h_nm <= d_nm)) throw ConfigError("RibGeometry: need 0 < h <= d");
        if (!(w_nm > 0)) throw ConfigError("RibGeometry: need w > 0");
        if (!(grid_step_nm > 0)) throw ConfigError("RibGeometry: need grid_step > 0");
        if (!(theta_deg > 0 && theta_deg <= 90)) throw ConfigError("RibGeometry: bad sidewall angle");
        if (domain_width_nm < w_nm + 2 * h_nm) throw ConfigError("RibGeometry: domain narrower than rib");
        if (domain_height_nm < d_nm) throw ConfigError("RibGeometry: domain lower than film");
    }
};

// Rasterized anisotropic permittivity map on cell centers. eps_u/eps_v/eps_w
// are the diagonal relative-permittivity components along the lab axes;
// f_ln is the LiNbO3 area fraction per cell (the chi2 integration mask).
struct PermittivityMap {
    int nx = 0, ny = 0;
    double dx_m = 0.0;                 // square cells
    double x0_m = 0.0, y0_m = 0.0;     // lower-left corner; y = 0 at the film bottom
    double wavelength_um = 0.0;
    Cut cut = Cut::Z;
    std::vector<double> eps_u, eps_v, eps_w, f_ln, f_sio2;

    double& at(std::vector<double>& a, int i, int j) { return a[size_t(i) * ny + j]; }
    double at(const std::vector<double>& a, int i, int j) const { return a[size_t(i) * ny + j]; }
    double xc(int i) const { return x0_m + (i + 0.5) * dx_m; }
    double yc(int j) const { return y0_m + (j + 0.5) * dx_m; }
    double max_eps() const {
        double m = 0;
        for (double v : eps_u) m = std::max(m, v);
        for (double v : eps_v) m = std::max(m, v);
        for (double v : eps_w) m = std::max(m, v);
        return m;
    }
};

// Builds the cross-section map at one wavelength. Mixed cells use
// area-weighted averaging of eps; the vertical component averages 1/eps
// (series rule for the field component normal to the film interfaces), which
// is what sets the TM accuracy at the horizontal boundaries.
inline PermittivityMap build_cross_section(const RibGeometry& geom, double lambda_um,
                                           const MaterialSet& mats = default_materials(),
                                           int supersample = 8) {
    geom.validate();
    MaterialSet::check_window(lambda_um);

    const double no2 = std::pow(mats.index({Material::LiNbO3, Axis::Ordinary}, lambda_um), 2);
    const double ne2 = std::pow(mats.index({Material::LiNbO3, Axis::Extraordinary}, lambda_um), 2);
    const double ns2 = std::pow(mats.index({Material::SiO2, Axis::Isotropic}, lambda_um), 2);

    // permittivity along lab (u, v, w) inside LiNbO3, optic axis = crystal z
    const auto map = cut_axis_mapping(geom.cut);
    std::array<double, 3> ln_eps{};
    for (int a = 0; a < 3; ++a) ln_eps[a] = (map.crystal_of_lab[a] == 2) ? ne2 : no2;

    PermittivityMap out;
    out.cut = geom.cut;
    out.wavelength_um = lambda_um;
    out.dx_m = geom.grid_step_nm * 1e-9;
    out.nx = int(std::round(geom.domain_width_nm / geom.grid_step_nm));
    out.ny = int(std::round(geom.domain_height_nm / geom.grid_step_nm));
    out.x0_m = -0.5 * geom.domain_width_nm * 1e-9;
    out.y0_m = (0.5 * geom.d_nm - 0.5 * geom.domain_height_nm) * 1e-9;
    const size_t n = size_t(out.nx) * out.ny;
    out.eps_u.assign(n, 0.0);
    out.eps_v.assign(n, 0.0);
    out.eps_w.assign(n, 0.0);
    out.f_ln.assign(n, 0.0);
    out.f_sio2.assign(n, 0.0);

    const double w = geom.w_nm * 1e-9, d = geom.d_nm * 1e-9, h = geom.h_nm * 1e-9;
    const double cot = 1.0 / std::tan(geom.theta_deg * pi / 180.0);
    const double dx = out.dx_m;
    const int ss = supersample;

    for (int i = 0; i < out.nx; ++i) {
        for (int j = 0; j < out.ny; ++j) {
            const double xc = out.xc(i), yc = out.yc(j);
            double f_ln = 0.0, f_si = 0.0;
            for (int a = 0; a < ss; ++a) {
                const double x = xc + ((a + 0.5) / ss - 0.5) * dx;
                for (int b = 0; b < ss; ++b) {
                    const double y = yc + ((b + 0.5) / ss - 0.5) * dx;
                    if (y < 0) { f_si += 1; continue; }
                    if (y > d) continue;
                    // slab below the etch level, trapezoid above (top width w)
                    if (y <= d - h || std::abs(x) <= 0.5 * w + (d - y) * cot) f_ln += 1;
                }
            }
            f_ln /= double(ss) * ss;
            f_si /= double(ss) * ss;
            const double f_air = 1.0 - f_ln - f_si;
            const size_t k = size_t(i) * out.ny + j;
            out.f_ln[k] = f_ln;
            out.f_sio2[k] = f_si;
            out.eps_u[k] = f_ln * ln_eps[0] + f_si * ns2 + f_air;
            out.eps_w[k] = f_ln * ln_eps[2] + f_si * ns2 + f_air;
            out.eps_v[k] = 1.0 / (f_ln / ln_eps[1] + f_si / ns2 + f_air);
        }
    }
    return out;
}

// Debug export: cell centers (nm) + the three diagonal eps values.
inline std::string permittivity_csv(const PermittivityMap& m) {
    std::string s = "x_nm,y_nm,eps_u,eps_v,eps_w\n";
    for (int i = 0; i < m.nx; ++i)
        for (int j = 0; j < m.ny; ++j)
            s += fmt9(m.xc(i) * 1e9) + "," + fmt9(m.yc(j) * 1e9) + "," +
                 fmt9(m.at(m.eps_u, i, j)) + "," + fmt9(m.at(m.eps_v, i, j)) + "," +
                 fmt9(m.at(m.eps_w, i, j)) + "\n";
    return s;
}

}  // namespace pdcrib
