// pincell: multi-cell pinching-antenna downlink power and placement simulation
// Copyright (C) 2026 the pincell developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef PINCELL_UNITS_HPP
#define PINCELL_UNITS_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pincell
{
    inline constexpr double kSpeedOfLight = 299792458.0; // [m/s]

    // Powers are kept in watts everywhere inside the library; dBm shows up only
    // at I/O boundaries (config files, CSV columns, chart axes).
    inline double dbm_to_watts(double dbm)
    {
        return std::pow(10.0, (dbm - 30.0) / 10.0);
    }

    inline double watts_to_dbm(double watts)
    {
        if (!(watts > 0.0))
            throw std::invalid_argument("watts_to_dbm: power must be positive");
        return 10.0 * std::log10(watts) + 30.0;
    }

    // Free-space channel gain at 1 m separation, (c / (4 pi f_c))^2.
    template <typename Scalar>
    Scalar free_space_ref_gain(Scalar carrier_freq_hz)
    {
        const Scalar wavelength = Scalar(kSpeedOfLight) / carrier_freq_hz;
        const Scalar r = wavelength / (Scalar(4) * std::numbers::pi_v<Scalar>);
        return r * r;
    }

    // SINR needed to sustain a spectral-efficiency target: 2^rate - 1.
    template <typename Scalar>
    Scalar sinr_threshold(Scalar target_rate)
    {
        return std::exp2(target_rate) - Scalar(1);
    }
}

#endif
