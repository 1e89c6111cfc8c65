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

#ifndef PINCELL_CHANNEL_HPP
#define PINCELL_CHANNEL_HPP

#include <cmath>
#include <stdexcept>

#include "pincell/types.hpp"
#include "pincell/units.hpp"

namespace pincell
{
    // Squared channel magnitude of the free-space line-of-sight link between two
    // 3-D points: eta / distance^2. Only the magnitude enters any rate in this
    // model, so phases are never computed.
    template <typename DerivedU, typename DerivedA>
    typename DerivedU::Scalar channel_gain(const Eigen::MatrixBase<DerivedU>& user_pos,
                                           const Eigen::MatrixBase<DerivedA>& antenna_pos,
                                           typename DerivedU::Scalar carrier_freq_hz)
    {
        using Scalar = typename DerivedU::Scalar;
        const Scalar dist2 = (user_pos.derived() - antenna_pos.derived()).squaredNorm();
        if (!(dist2 > Scalar(0)))
            throw std::invalid_argument("channel_gain: user and antenna positions coincide");
        return free_space_ref_gain(carrier_freq_hz) / dist2;
    }

    // Full gain matrix for one placement: entry (i, m) is the squared channel
    // magnitude from the antenna of cell i to the user of cell m. Users sit on
    // the ground plane, antennas at the given height, so distances are never zero.
    template <typename DerivedU, typename DerivedA>
    MatX<typename DerivedU::Scalar> gain_matrix(const Eigen::MatrixBase<DerivedU>& user_xy,
                                                const Eigen::MatrixBase<DerivedA>& antenna_xy,
                                                typename DerivedU::Scalar antenna_height,
                                                typename DerivedU::Scalar carrier_freq_hz)
    {
        using Scalar = typename DerivedU::Scalar;
        const Eigen::Index n = user_xy.rows();
        if (antenna_xy.rows() != n)
            throw std::invalid_argument("gain_matrix: user and antenna counts differ");

        const Scalar eta = free_space_ref_gain(carrier_freq_hz);
        const Scalar h2 = antenna_height * antenna_height;
        MatX<Scalar> g(n, n);
        for (Eigen::Index i = 0; i < n; i++)
            for (Eigen::Index m = 0; m < n; m++)
            {
                const Scalar dx = antenna_xy(i, 0) - user_xy(m, 0);
                const Scalar dy = antenna_xy(i, 1) - user_xy(m, 1);
                g(i, m) = eta / (dx * dx + dy * dy + h2);
            }
        return g;
    }

    // Downlink rate of user m under the given transmit powers:
    // log2(1 + P_m g(m,m) / (sum_{i != m} P_i g(i,m) + noise)).
    template <typename DerivedP, typename DerivedG>
    typename DerivedP::Scalar achievable_rate(Eigen::Index m,
                                              const Eigen::MatrixBase<DerivedP>& powers,
                                              const Eigen::MatrixBase<DerivedG>& gains,
                                              typename DerivedP::Scalar noise_power)
    {
        using Scalar = typename DerivedP::Scalar;
        const Scalar own = powers(m) * gains(m, m);
        const Scalar interference = powers.derived().dot(gains.derived().col(m)) - own;
        return std::log2(Scalar(1) + own / (interference + noise_power));
    }

    template <typename DerivedP, typename DerivedG>
    VecX<typename DerivedP::Scalar> achieved_rates(const Eigen::MatrixBase<DerivedP>& powers,
                                                   const Eigen::MatrixBase<DerivedG>& gains,
                                                   typename DerivedP::Scalar noise_power)
    {
        VecX<typename DerivedP::Scalar> rates(powers.size());
        for (Eigen::Index m = 0; m < powers.size(); m++)
            rates(m) = achievable_rate(m, powers, gains, noise_power);
        return rates;
    }
}

#endif
