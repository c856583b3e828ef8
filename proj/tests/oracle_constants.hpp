// Reference values frozen from a 50-digit arbitrary-precision evaluation
// (mpmath: gamma, zeta, polylog). Used as independent oracles by the unit and
// acceptance suites.

#pragma once

namespace oracle {

// Gamma
inline constexpr double kGammaHalf = 1.7724538509055160273;        // sqrt(pi)
inline constexpr double kGammaMinusHalf = -3.5449077018110320546;  // -2 sqrt(pi)
inline constexpr double kGammaMinus3Half = 2.3632718012073547031;  // 4 sqrt(pi)/3

// Riemann zeta
inline constexpr double kZeta2 = 1.6449340668482264365;    // pi^2/6
inline constexpr double kZeta4 = 1.0823232337111381915;    // pi^4/90
inline constexpr double kZeta3 = 1.2020569031595942854;
inline constexpr double kZetaHalf = -1.4603545088095868129;
inline constexpr double kZetaMinusHalf = -0.20788622497735456602;
inline constexpr double kZeta3Half = 2.6123753486854883433;
inline constexpr double kZeta221 = 1.4842587362113540914;   // zeta(2.21)
inline constexpr double kZeta021 = -0.74894707448366723866; // zeta(0.21)
inline constexpr double kZetaMinus95 = -0.0066721722964666407568;  // zeta(-9.5)
inline constexpr double kZeta20 = 1.0000009539620338728;
inline constexpr double kZeta091 = -10.540487862337321604;  // zeta(0.91)

// a_alpha = 2 Gamma(-alpha) cos(pi alpha / 2)
inline constexpr double kA05 = -5.0132565492620010048;   // -2 sqrt(2 pi)
inline constexpr double kA121 = -2.997364414475314706;
inline constexpr double kA15 = -3.3421710328413340032;   // -4 sqrt(2 pi) / 3
inline constexpr double kA151 = -3.372053443139531913;
inline constexpr double kA191 = -12.094017059276818315;

// Crossover k0 = |a_alpha/zeta(alpha-1)|^(1/(2-alpha)) / dx
inline constexpr double kK0Alpha05Dx1 = 8.3469820189132150638;

// Coupling spectrum J_alpha(k) at dx = 1, exact via polylog
inline constexpr double kJ121_k03 = 2.3375944485063464386;
inline constexpr double kJ121_k01 = 2.791190884979734188;
inline constexpr double kJ05_k09 = 0.63761606906825912776;
inline constexpr double kJ05_k01 = 3.641498711561341642;
inline constexpr double kJ151_k06 = 1.6559408891266940225;
inline constexpr double kJ191_k06 = 1.6769548617392610646;
inline constexpr double kTwoZeta3Half = 5.2247506973709766867;  // J_0.5(0)
inline constexpr double kTwoZeta4 = 2.164646467422276383;       // pi^4/45

// transform / continuum symbol spot values
inline constexpr double kTransform05K1Dx1 = -4.8053703242846464388;  // a_0.5 - zeta(-0.5)
inline constexpr double kContinuum25K2 = -10.449501394741953373;     // -4 zeta(1.5)

// Misc dynamics constants
inline constexpr double kFourAtan20 = 6.0833517242918154313;
inline constexpr double kCflBound121 = 0.49939566781043034246;  // 0.5 (1000/1001)^1.21
inline constexpr double kOmega2BreatherK0 = 0.22968517472422708183;  // J1+J2+2 J0 zeta(2.21)

}  // namespace oracle
