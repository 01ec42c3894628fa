#pragma once

#include "polyalg/coherent.hpp"
#include "polyalg/ladder.hpp"
#include "polyalg/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyalg {

// Level degeneracy of H = n1 + n2 + 2 n3.
struct DegeneracyResult {
  long long N = 0;
  std::int64_t ordered_count = 0;    // (n1, n2, n3) with n1, n2 distinguishable
  std::int64_t unordered_count = 0;  // n1 <= n2
  std::int64_t closed_form_ordered = 0;
  std::int64_t closed_form_unordered = 0;
  // Sum over the finite Q-(1,1) reps with l = (N+1)/4: the k = 1/2 rep once,
  // every k > 1/2 rep twice.
  std::int64_t census_count = 0;
  bool matches() const {
    return ordered_count == closed_form_ordered && unordered_count == closed_form_unordered &&
           census_count == ordered_count;
  }
};

// Throws std::invalid_argument for N < 0.
DegeneracyResult aniso_degeneracy(long long N);

// Normalized A = Q-/sqrt(L(L+1) - K) on Q-(1,1) reps, and the 2x2 fermion case.
VerificationReport quadratic_oscillator_check(double tol = 1e-12);

struct BlockSpectrum {
  std::vector<std::string> block_labels;
  std::vector<std::vector<double>> eigenvalues;         // algebraic blocks, sorted
  std::vector<std::vector<double>> oracle_eigenvalues;  // dense oracle, sorted
  std::vector<double> offsets;                          // mean(oracle) - mean(block)
};

struct SpectrumResult {
  BlockSpectrum spectrum;
  VerificationReport report;
};

// H = w(J0 + N) + kappa(J+ a + J- a^dagger) block by block through Q-(2).
// photon_levels defaults to just enough for l_max; a smaller explicit value
// throws ShapeError.
SpectrumResult dicke_spectrum(const Rational& j, const Rational& l_max, double omega, double kappa,
                              std::optional<int> photon_levels = std::nullopt, double tol = 1e-9);

// H = wa(a^dagger a + (b^dagger b + c^dagger c)/2) + kappa a b^dagger c^dagger + h.c.
// on the sector n_a + n_b = epsilon, n_b - n_c = c_bc.
SpectrumResult trilinear_spectrum(long long epsilon, double omega_a, Complex kappa,
                                  long long c_bc = 0, double tol = 1e-9);

// Literature amplitudes for the c_bc = 0 sector against the oracle rep.
struct TrilinearAmplitudes {
  std::vector<double> printed_lower;  // n = 1..epsilon
  std::vector<double> oracle_lower;   // <n-1|Q-|n>
  std::vector<double> printed_raise;  // n = 0..epsilon-1
  std::vector<double> oracle_raise;   // <n+1|Q+|n>
  double q0_offset = 0.0;             // oracle Q0 minus the printed n - epsilon/2
  bool printed_matches = false;
};
TrilinearAmplitudes trilinear_amplitudes(long long epsilon);

// C0 = J0, C+ = (J+)^2/2 on the even ladder of a spin-j Schwinger oracle.
struct CalogeroResult {
  VerificationReport report;
  std::vector<double> oracle_raise;   // <m+2|C+|m> along the ladder
  std::vector<double> printed_raise;  // literature rep formula
  double amplitude_ratio = 0.0;       // printed / oracle, NaN if the ladder has one state
};
CalogeroResult calogero_cubic(const Rational& j, double tol = 1e-10);

// Invariants Q1 = (C+ + C-)/2 + g C0^2, Q2 = C0, Q3 = (C- - C+)/2.
struct HahnSource {
  enum class Kind { SingularOscillator, Calogero } kind = Kind::Calogero;
  Rational j = 1;                                       // Calogero
  Rational k1 = Rational(3, 4), k2 = Rational(3, 4);    // singular oscillator
  Rational k = Rational(7, 4);

  static HahnSource calogero(const Rational& j);
  static HahnSource singular_oscillator(const Rational& k1, const Rational& k2, const Rational& k);
};

struct HahnResult {
  VerificationReport report;  // asserted identities
  double g = 0.0;
  // Literature [Q3,Q1] form, reported without asserting.
  std::string printed_formula;
  double printed_residual = 0.0;
};
HahnResult hahn_invariants(const HahnSource& source, double tol = 1e-10);

// V(x) = c0 + c2 x^2 + cm2 / x^2, and the gauge A(x) = a1 x + am1 / x.
struct QesPotential {
  double c0 = 0.0;
  double c2 = 0.0;
  Rational cm2 = 0;
  double a1 = 0.0;
  Rational am1 = 0;
};
QesPotential qes_potential(const Rational& k, const Rational& k1, double w);

// su(1,1) with k = 1/4 or 3/4 on one mode: K+ = (a^dagger)^2/2, even or odd states.
VerificationReport single_mode_su11_check(const Rational& k, long long dim, double tol = 1e-10);

// Q+ = (a^dagger)^3/sqrt(3) against the literature amplitude (n+1)sqrt(n+4).
struct SingleModeCubic {
  std::vector<double> oracle_raise;   // <3n+3|Q+|3n>
  std::vector<double> printed_raise;  // (n+1) sqrt(n+4)
  Polynomial bracket;                 // [Q+,Q-] in Q0 = n/3
  bool printed_matches = false;
};
SingleModeCubic single_mode_cubic(std::size_t states);

}  // namespace polyalg
