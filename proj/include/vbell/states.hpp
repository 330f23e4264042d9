#pragma once

#include "kinematics.hpp"
#include "linalg.hpp"

namespace vbell
{
//---------------------------------------------------------------------------//
/*!
 * A scalar boson-antiboson state in the family
 *   g_{mu nu} = eta_{mu nu} + c/(k.p) (k_mu p_nu + p_mu k_nu).
 *
 * The particle carries momentum k and the antiparticle p; both are on shell
 * with the common mass m. c = 0 is the psi state and c = -1 the xi state.
 */
class ScalarStateSpec
{
  public:
    static ScalarStateSpec general(double c, FourVector const& k,
                                   FourVector const& p, double mass);
    static ScalarStateSpec psi(FourVector const& k, FourVector const& p,
                               double mass);
    static ScalarStateSpec xi(FourVector const& k, FourVector const& p,
                              double mass);

    //! Pair in its center-of-mass frame: k from (x, n), p = parity partner.
    static ScalarStateSpec center_of_mass(double c, double x,
                                          Direction const& n,
                                          double mass = 1.0);

    double c() const { return c_; }
    FourVector const& k() const { return k_; }
    FourVector const& p() const { return p_; }
    double mass() const { return mass_; }

  private:
    ScalarStateSpec(double c, FourVector const& k, FourVector const& p,
                    double mass);

    double c_;
    FourVector k_;
    FourVector p_;
    double mass_;
};

inline constexpr double psi_c = 0.0;
inline constexpr double xi_c = -1.0;

//---------------------------------------------------------------------------//
//! Amplitudes e^mu_sigma(k) linking Lorentz components to spin labels.
struct AmplitudeMatrix
{
    Complex4x3 e;
    FourVector k;
    double mass;
};

AmplitudeMatrix amplitude(FourVector const& k, double mass);

//! g_{mu nu}(k, p), both indices lower.
Real4x4 g_tensor(ScalarStateSpec const& spec);

//! Finite normalization factor A(k, p) of the state.
double normalization(ScalarStateSpec const& spec);

//! A(k, k^pi) in the center-of-mass frame as a function of (c, x).
double normalization_center_of_mass(double c, double x);

}  // namespace vbell
