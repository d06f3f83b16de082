#pragma once

#include <array>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "pdcrib/constants.hpp"
#include "pdcrib/errors.hpp"
#include "pdcrib/spline.hpp"

namespace pdcrib {

// Offset + Sellmeier + Tauc-Lorentz dielectric model, one crystal axis.
// All energies in eV.
struct DielectricModel {
    double eps_offset = 0.0;   // eps_re
    double sellmeier_amp = 0.0;// A_Sellm
    double sellmeier_e0 = 1.0; // E0_Sellm
    double tl_amp = 0.0;       // A_TL
    double tl_en = 1.0;        // En_TL
    double tl_c = 1.0;         // C_TL
    double tl_eg = 0.5;        // Eg

    void validate() const {
        if (!(sellmeier_e0 > 0 && tl_en > 0 && tl_c > 0 && tl_eg > 0))
            throw ConfigError("DielectricModel: energies must be positive");
        if (!(tl_eg < tl_en))
            throw ConfigError("DielectricModel: Eg must lie below the TL resonance En");
    }
};

// LNOI film fit parameters (ellipsometry, ordinary / extraordinary axis).
inline DielectricModel lnoi_model_extraordinary() {
    return {1.5015, 41.169, 6.4608, 282.99, 5.0543, 1.4905, 4.2919};
}
inline DielectricModel lnoi_model_ordinary() {
    return {1.3135, 32.999, 6.7798, 497.17, 4.9351, 1.0358, 4.3305};
}

enum class Material { LiNbO3, SiO2 };
enum class Axis { Ordinary, Extraordinary, Isotropic };

struct MaterialAxis {
    Material material = Material::LiNbO3;
    Axis axis = Axis::Ordinary;

    MaterialAxis(Material m, Axis a) : material(m), axis(a) {
        if (m == Material::SiO2 && a != Axis::Isotropic)
            throw ConfigError("SiO2 is isotropic");
        if (m == Material::LiNbO3 && a == Axis::Isotropic)
            throw ConfigError("LiNbO3 axis must be ordinary or extraordinary");
    }
};

// Validity window of the film dispersion data (400 - 1700 nm).
inline constexpr double kLambdaMinUm = 0.4;
inline constexpr double kLambdaMaxUm = 1.7;

// Energy cutoff for the Kramers-Kronig integral. Chosen so that doubling the
// cutoff moves the result by < 1e-6 (the ~1/E^3 tail of the TL oscillator
// still contributes a few 1e-3 at 50 eV).
inline constexpr double kKKCutoffEv = 2000.0;
inline constexpr double kKKRelTol = 1e-8;

// Guard band around the Sellmeier pole.
inline constexpr double kPoleGuardEv = 1e-3;

// Imaginary part of the Tauc-Lorentz oscillator; zero at and below the gap.
inline double tl_eps_im(const DielectricModel& m, double energy_ev) {
    const double e = std::abs(energy_ev);
    if (e <= m.tl_eg) return 0.0;
    const double num = m.tl_amp * m.tl_en * m.tl_c * (e - m.tl_eg) * (e - m.tl_eg);
    const double den = (e * e - m.tl_en * m.tl_en) * (e * e - m.tl_en * m.tl_en) +
                       m.tl_c * m.tl_c * e * e;
    return num / den / e;
}

// Real part from the Kramers-Kronig principal value
//   eps_re(E) = (2/pi) PV int_Eg^inf xi eps_im(xi) / (xi^2 - E^2) dxi,
// evaluated with singularity subtraction when E lies inside the integration
// range, then adaptive Gauss-Kronrod up to kKKCutoffEv.
inline double tl_eps_re(const DielectricModel& m, double energy_ev,
                        double cutoff_ev = kKKCutoffEv) {
    if (m.tl_amp == 0.0) return 0.0;
    const double E = std::abs(energy_ev);
    const double a = m.tl_eg, b = cutoff_ev;
    using quad = boost::math::quadrature::gauss_kronrod<double, 15>;

    double value = 0.0, err = 0.0;
    if (E <= a + kPoleGuardEv) {
        auto f = [&](double xi) {
            return xi * tl_eps_im(m, xi) / (xi * xi - E * E);
        };
        value = quad::integrate(f, a, b, 15, kKKRelTol, &err);
    } else {
        // subtract g(E)/(xi^2-E^2); the remainder is regular at xi = E
        const double gE = E * tl_eps_im(m, E);
        auto f = [&](double xi) {
            const double g = xi * tl_eps_im(m, xi);
            if (std::abs(xi - E) < 1e-12)
                return 0.0;  // removable point, value irrelevant at one node
            return (g - gE) / (xi * xi - E * E);
        };
        // split at the former singularity to keep Gauss-Kronrod nodes away from it
        double e1 = 0.0, e2 = 0.0;
        value = quad::integrate(f, a, E, 15, kKKRelTol, &e1) +
                quad::integrate(f, E, b, 15, kKKRelTol, &e2);
        err = e1 + e2;
        // PV of int 1/(xi^2-E^2) over [a,b] in closed form
        value += gE * std::log(std::abs((b - E) * (a + E) / ((b + E) * (a - E)))) / (2.0 * E);
    }
    if (!std::isfinite(value) || err > 1e-5 * (std::abs(value) + 1.0))
        throw NonConvergence("tl_eps_re: quadrature failed to converge");
    return 2.0 / pi * value;
}

// Sellmeier contribution A E0^2 / (E0^2 - E^2).
inline double sellmeier_eps(const DielectricModel& m, double energy_ev) {
    const double d = m.sellmeier_e0 * m.sellmeier_e0 - energy_ev * energy_ev;
    if (std::abs(m.sellmeier_e0 - std::abs(energy_ev)) < kPoleGuardEv)
        throw PoleProximity("sellmeier_eps: energy inside pole guard band");
    return m.sellmeier_amp * m.sellmeier_e0 * m.sellmeier_e0 / d;
}

// Dispersive part (Sellmeier + TL real part) used by the calibration.
inline double model_dispersive_eps(const DielectricModel& m, double energy_ev) {
    return sellmeier_eps(m, energy_ev) + tl_eps_re(m, energy_ev);
}

// Raw (uncalibrated) evaluation of the film model: offset + Sellmeier + TL.
inline double raw_eps(const DielectricModel& m, double energy_ev) {
    return m.eps_offset + model_dispersive_eps(m, energy_ev);
}

// The film fit parameters evaluated verbatim give eps far above the measured
// indices (bulk table values), so the shipped index model keeps the fitted
// spectral *shape* D(E) = Sellmeier + TL_re and rescales it affinely,
//   eps(E) = a + b D(E),
// with (a, b) solved so that both reference wavelengths reproduce the
// tabulated indices exactly. The raw evaluation stays available via raw_eps.
class CalibratedAxis {
public:
    CalibratedAxis() = default;

    CalibratedAxis(DielectricModel model, double lambda1_um, double n1,
                   double lambda2_um, double n2)
        : model_(model) {
        model_.validate();
        const double d1 = model_dispersive_eps(model_, ev_um / lambda1_um);
        const double d2 = model_dispersive_eps(model_, ev_um / lambda2_um);
        b_ = (n1 * n1 - n2 * n2) / (d1 - d2);
        a_ = n2 * n2 - b_ * d2;
    }

    double eps(double lambda_um) const {
        return a_ + b_ * model_dispersive_eps(model_, ev_um / lambda_um);
    }
    double index(double lambda_um) const { return std::sqrt(eps(lambda_um)); }
    const DielectricModel& model() const { return model_; }
    double scale_a() const { return a_; }
    double scale_b() const { return b_; }

private:
    DielectricModel model_;
    double a_ = 0.0, b_ = 1.0;
};

// Reference index table (bulk values at the design wavelengths):
//   lambda      SiO2      LiNbO3 n_e   LiNbO3 n_o
//   0.775 um    1.4589    2.1565       2.2242
//   1.55  um    1.4483    2.122        2.1837
struct ReferenceIndices {
    static constexpr double lambda_p = 0.775, lambda_s = 1.55;
    static constexpr double sio2_p = 1.4589, sio2_s = 1.4483;
    static constexpr double ne_p = 2.1565, ne_s = 2.122;
    static constexpr double no_p = 2.2242, no_s = 2.1837;
};

// Fused-silica reference shape (Malitson-type three-term Sellmeier in
// wavelength) used as the base curve of the SiO2 fallback interpolant.
inline double fused_silica_shape(double lambda_um) {
    const double l2 = lambda_um * lambda_um;
    const double e = 1.0 + 0.6961663 * l2 / (l2 - 0.0684043 * 0.0684043) +
                     0.4079426 * l2 / (l2 - 0.1162414 * 0.1162414) +
                     0.8974794 * l2 / (l2 - 9.896161 * 9.896161);
    return std::sqrt(e);
}

// Smooth monotone dispersion interpolant through (wavelength, index) anchors:
// least-squares affine scaling of the fused-silica shape plus a monotone
// cubic through the residuals, so every anchor is reproduced exactly.
class FallbackIndexModel {
public:
    FallbackIndexModel() = default;

    explicit FallbackIndexModel(const std::vector<std::pair<double, double>>& anchors) {
        if (anchors.size() < 2)
            throw ConfigError("FallbackIndexModel: need at least 2 anchors");
        std::vector<double> lam, n;
        for (const auto& [l, v] : anchors) {
            if (!lam.empty() && !(l > lam.back()))
                throw DegenerateAnchors("FallbackIndexModel: anchors must have strictly increasing wavelengths");
            lam.push_back(l);
            n.push_back(v);
        }
        // least squares n ~ a + b * s(lambda)
        double sw = 0, ss = 0, sn = 0, sss = 0, ssn = 0;
        std::vector<double> s(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) {
            s[i] = fused_silica_shape(lam[i]);
            sw += 1;
            ss += s[i];
            sn += n[i];
            sss += s[i] * s[i];
            ssn += s[i] * n[i];
        }
        const double det = sw * sss - ss * ss;
        b_ = (sw * ssn - ss * sn) / det;
        a_ = (sn - b_ * ss) / sw;
        std::vector<double> resid(lam.size());
        for (size_t i = 0; i < lam.size(); ++i) resid[i] = n[i] - (a_ + b_ * s[i]);
        resid_ = PchipSpline(lam, resid);
        lam_min_ = lam.front();
        lam_max_ = lam.back();
    }

    double index(double lambda_um) const {
        double r = 0.0;
        if (lambda_um >= lam_min_ && lambda_um <= lam_max_) r = resid_(lambda_um);
        else r = (lambda_um < lam_min_) ? resid_(lam_min_) : resid_(lam_max_);
        return a_ + b_ * fused_silica_shape(lambda_um) + r;
    }

private:
    double a_ = 0.0, b_ = 1.0;
    double lam_min_ = 0.0, lam_max_ = 0.0;
    PchipSpline resid_;
};

inline FallbackIndexModel calibrate_fallback_model(
    const std::vector<std::pair<double, double>>& anchors) {
    return FallbackIndexModel(anchors);
}

// Full material stack: calibrated LiNbO3 axes + SiO2 fallback.
class MaterialSet {
public:
    MaterialSet()
        : ord_(lnoi_model_ordinary(), ReferenceIndices::lambda_p, ReferenceIndices::no_p,
               ReferenceIndices::lambda_s, ReferenceIndices::no_s),
          ext_(lnoi_model_extraordinary(), ReferenceIndices::lambda_p, ReferenceIndices::ne_p,
               ReferenceIndices::lambda_s, ReferenceIndices::ne_s),
          sio2_({{ReferenceIndices::lambda_p, ReferenceIndices::sio2_p},
                 {ReferenceIndices::lambda_s, ReferenceIndices::sio2_s}}) {}

    MaterialSet(CalibratedAxis ord, CalibratedAxis ext, FallbackIndexModel sio2)
        : ord_(std::move(ord)), ext_(std::move(ext)), sio2_(std::move(sio2)) {}

    double index(const MaterialAxis& ax, double lambda_um) const {
        check_window(lambda_um);
        if (ax.material == Material::SiO2) return sio2_.index(lambda_um);
        return (ax.axis == Axis::Ordinary) ? ord_.index(lambda_um) : ext_.index(lambda_um);
    }

    const CalibratedAxis& ordinary() const { return ord_; }
    const CalibratedAxis& extraordinary() const { return ext_; }
    const FallbackIndexModel& sio2() const { return sio2_; }

    static void check_window(double lambda_um) {
        if (lambda_um < kLambdaMinUm || lambda_um > kLambdaMaxUm)
            throw OutOfRange("wavelength outside the 0.4-1.7 um validity window");
    }

private:
    CalibratedAxis ord_, ext_;
    FallbackIndexModel sio2_;
};

inline const MaterialSet& default_materials() {
    static const MaterialSet set;
    return set;
}

inline double refractive_index(const MaterialAxis& ax, double lambda_um) {
    return default_materials().index(ax, lambda_um);
}

}  // namespace pdcrib
