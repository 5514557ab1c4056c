#pragma once

#include <string>

#include "hyperschrod/fields.hpp"

namespace hyperschrod {

// CSV layouts (values printed with %.17g, comma separated, one header row):
//   radial:   r,re,im,abs
//   spectral: lambda,re,im
//   flat 1d:  x,re,im,abs
//   flat 2d:  x1,x2,re,im,abs

void write_radial_csv(const std::string& path, const RadialProfile& f);
void write_spectral_csv(const std::string& path, const SpectralProfile& F);
void write_flat_csv(const std::string& path, const FlatField& f);

RadialProfile read_radial_csv(const std::string& path, SpaceTag tag);
FlatField read_flat_csv(const std::string& path);

} // namespace hyperschrod
