#pragma once

#include "hyperschrod/fields.hpp"

namespace hyperschrod {

// Radial spectral pipeline (H3).  Spherical function
//   phi_lambda(r) = sin(lambda r) / (lambda sinh r),
// transform  F(lambda) = c_polar Int f(r) phi_lambda(r) delta(r) dr,
// inversion  f(r) = Int_0^inf F(lambda) phi_lambda(r) |c(lambda)|^{-2} dlambda
// (= (1/|W|) times the even integral over the line, |W| = 2).

double phi_lambda(double lambda, double r);

// Polar measure normalization making the transform a Plancherel isometry;
// stored fixture 2/pi for H3 (see calibrate_polar_constant for the numeric
// recalibration used by the tests).
double polar_constant(SpaceTag tag);
double calibrate_polar_constant(SpaceTag tag);

SpectralProfile spherical_transform(const RadialProfile& f,
                                    const SpectralGrid& out = SpectralGrid::defaults());

// weyl_order is |W| in the inversion constant 1/|W| (the integral over the
// line is written as 2 * the integral over [0, Lmax]); 2 for rank 1.
RadialProfile inverse_spherical(const SpectralProfile& F,
                                const RadialGrid& out = RadialGrid::defaults(),
                                int weyl_order = 2);

// u(t) = inverse( e^{-i (lambda^2 + |rho|^2) t} * transform(f) ).
RadialProfile propagate_radial(const RadialProfile& f, double t,
                               const SpectralGrid& spec = SpectralGrid::defaults());

// Horocyclic projection R f as the inverse flat Fourier transform of the
// spherical transform (even in lambda); output on a 1-d flat grid.
FlatField abel_transform(const RadialProfile& f, const FlatGrid& out = {1, 2048, 24.0},
                         const SpectralGrid& spec = SpectralGrid::defaults());

// Flat Fourier transform F_A g(lambda) = (2 pi)^{-1/2} Int g(s) e^{-i lambda s} ds
// on the grid of g (uniform-grid sum; spectrally accurate for g decaying at
// the boundary); used for the factorization checks.
cplx fa_transform_at(const FlatField& g, double lambda);
SpectralProfile fa_transform(const FlatField& g, const SpectralGrid& out);

// K-invariant convolution through the transform side; grids must match.
RadialProfile radial_convolve(const RadialProfile& h, const RadialProfile& k,
                              const SpectralGrid& spec = SpectralGrid::defaults());

// Physical-side norms with the polar measure c_polar * delta(r) dr.
double l2_norm_radial(const RadialProfile& f);
// Spectral-side Plancherel norm Int_0^Lmax |F|^2 |c|^{-2} dlambda.
double l2_norm_spectral(const SpectralProfile& F);

} // namespace hyperschrod
