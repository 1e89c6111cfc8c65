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

#ifndef PINCELL_TYPES_HPP
#define PINCELL_TYPES_HPP

#include <Eigen/Dense>

namespace pincell
{
    template <typename Scalar>
    using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

    template <typename Scalar>
    using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

    // Pinching-antenna x coordinate per cell [m]; the antenna for cell m sits at
    // (x[m], waveguide_y[m], antenna_height).
    using AntennaPlacement = Eigen::VectorXd;
}

#endif
