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

#ifndef PINCELL_GEOMETRY_HPP
#define PINCELL_GEOMETRY_HPP

#include <random>
#include <stdexcept>

#include "pincell/types.hpp"

namespace pincell
{
    // One experiment scenario: a rectangular service area centered on the origin,
    // tiled by n_row x n_col equal cells. Each cell holds one user on the ground
    // plane and one transmit antenna at height antenna_height. Pinching antennas
    // slide along a waveguide that spans the full x extent of their cell at the
    // cell-center y.
    struct ScenarioConfig
    {
        double d_l = 80.0;             // service-area extent along x [m]
        double d_w = 20.0;             // service-area extent along y [m]
        int n_row = 1;                 // cell rows (y direction)
        int n_col = 2;                 // cell columns (x direction)
        double antenna_height = 3.0;   // antenna height above the user plane [m]
        double carrier_freq_hz = 28e9; // carrier frequency [Hz]
        double noise_power_w = 1e-10;  // receiver noise power [W] (-70 dBm)
        double target_rate = 1.0;      // per-user rate target [bit/s/Hz]
        double p_max_w = 100.0;        // reported power for infeasible trials [W] (50 dBm)

        int cell_count() const noexcept { return n_row * n_col; }

        void validate() const
        {
            if (!(d_l > 0.0) || !(d_w > 0.0))
                throw std::invalid_argument("ScenarioConfig: service-area sides must be positive");
            if (n_row < 1 || n_col < 1)
                throw std::invalid_argument("ScenarioConfig: grid must have at least one row and column");
            if (!(antenna_height > 0.0))
                throw std::invalid_argument("ScenarioConfig: antenna height must be positive");
            if (!(carrier_freq_hz > 0.0))
                throw std::invalid_argument("ScenarioConfig: carrier frequency must be positive");
            if (!(noise_power_w > 0.0))
                throw std::invalid_argument("ScenarioConfig: noise power must be positive");
            if (!(target_rate > 0.0))
                throw std::invalid_argument("ScenarioConfig: target rate must be positive");
            if (!(p_max_w > 0.0))
                throw std::invalid_argument("ScenarioConfig: power cap must be positive");
        }
    };

    // Per-cell geometry derived from the grid. Cells are numbered row-major,
    // m = row * n_col + col, rows increasing with y and columns with x.
    struct CellLayout
    {
        Eigen::MatrixX2d centers;    // conventional antenna (x, y) per cell
        Eigen::VectorXd waveguide_y; // y coordinate of each cell's waveguide (= center y)
        Eigen::VectorXd x_min;       // pinching placement bounds = cell x extent
        Eigen::VectorXd x_max;
        Eigen::VectorXd y_min;       // cell y extent
        Eigen::VectorXd y_max;

        Eigen::Index cell_count() const noexcept { return centers.rows(); }
    };

    inline CellLayout build_layout(const ScenarioConfig& config)
    {
        config.validate();
        const Eigen::Index m = config.cell_count();
        const double cell_w = config.d_l / config.n_col;
        const double cell_h = config.d_w / config.n_row;

        CellLayout layout;
        layout.centers.resize(m, 2);
        layout.waveguide_y.resize(m);
        layout.x_min.resize(m);
        layout.x_max.resize(m);
        layout.y_min.resize(m);
        layout.y_max.resize(m);

        for (int row = 0; row < config.n_row; row++)
            for (int col = 0; col < config.n_col; col++)
            {
                const Eigen::Index k = static_cast<Eigen::Index>(row) * config.n_col + col;
                layout.x_min(k) = -0.5 * config.d_l + col * cell_w;
                layout.x_max(k) = -0.5 * config.d_l + (col + 1) * cell_w;
                layout.y_min(k) = -0.5 * config.d_w + row * cell_h;
                layout.y_max(k) = -0.5 * config.d_w + (row + 1) * cell_h;
                layout.centers(k, 0) = -0.5 * config.d_l + (col + 0.5) * cell_w;
                layout.centers(k, 1) = -0.5 * config.d_w + (row + 0.5) * cell_h;
                layout.waveguide_y(k) = layout.centers(k, 1);
            }
        return layout;
    }

    // Ground-level user positions, one per cell; z = 0 implied.
    struct UserSet
    {
        Eigen::MatrixX2d xy;
    };

    enum class UserModel
    {
        uniform_per_cell,  // each user uniform over its own cell rectangle
        clustered_two_cell // two-cell setup with both users near the shared boundary
    };

    // Half-width of the clustered draw around the shared cell boundary at x = 0:
    // the left user is drawn from U(-2, 0), the right user from U(0, 2).
    inline constexpr double kClusterHalfSpan = 2.0;

    inline UserSet sample_users(const ScenarioConfig& config, const CellLayout& layout,
                                UserModel model, std::mt19937_64& rng)
    {
        const Eigen::Index m = layout.cell_count();
        UserSet users;
        users.xy.resize(m, 2);

        if (model == UserModel::clustered_two_cell)
        {
            if (m != 2)
                throw std::invalid_argument("sample_users: clustered model requires exactly two cells");
            const double lo0 = std::max(layout.x_min(0), -kClusterHalfSpan);
            const double hi1 = std::min(layout.x_max(1), kClusterHalfSpan);
            for (Eigen::Index k = 0; k < 2; k++)
            {
                const double lo = (k == 0) ? lo0 : 0.0;
                const double hi = (k == 0) ? 0.0 : hi1;
                users.xy(k, 0) = std::uniform_real_distribution<double>(lo, hi)(rng);
                users.xy(k, 1) = std::uniform_real_distribution<double>(layout.y_min(k), layout.y_max(k))(rng);
            }
            return users;
        }

        for (Eigen::Index k = 0; k < m; k++)
        {
            users.xy(k, 0) = std::uniform_real_distribution<double>(layout.x_min(k), layout.x_max(k))(rng);
            users.xy(k, 1) = std::uniform_real_distribution<double>(layout.y_min(k), layout.y_max(k))(rng);
        }
        (void)config;
        return users;
    }

    // Clamp one placement into the per-cell waveguide spans.
    inline Eigen::VectorXd clamp_to_spans(const Eigen::VectorXd& x, const CellLayout& layout)
    {
        return x.cwiseMax(layout.x_min).cwiseMin(layout.x_max);
    }
}

#endif
