#pragma once

#include <complex>
#include <span>
#include <vector>

#include "nlwave/grid.hpp"

namespace nlwave::fft {

/// Unnormalized multi-dimensional DFT on the M^d cube, sum_j a_j e^{-i 2pi m.j/M}.
std::vector<std::complex<double>> forward(const GridSpec& g,
                                          std::span<const std::complex<double>> in);

/// Unnormalized inverse-sign DFT, sum_m a_m e^{+i 2pi m.j/M}.
std::vector<std::complex<double>> backward(const GridSpec& g,
                                           std::span<const std::complex<double>> in);

}  // namespace nlwave::fft
