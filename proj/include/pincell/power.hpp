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

#ifndef PINCELL_POWER_HPP
#define PINCELL_POWER_HPP

#include <limits>
#include <stdexcept>

#include "pincell/channel.hpp"
#include "pincell/types.hpp"
#include "pincell/units.hpp"

namespace pincell
{
    // Systems whose reciprocal condition estimate falls below this are treated
    // as infeasible rather than solved.
    inline constexpr double kMinReciprocalCondition = 1e-12;

    // Minimum-power allocation for one placement. When no positive power vector
    // meets every rate target, feasible is false, powers is empty and total is
    // +infinity (a convenient sentinel for rank-based placement search).
    template <typename Scalar>
    struct PowerSolution
    {
        VecX<Scalar> powers;
        bool feasible = false;
        Scalar total = std::numeric_limits<Scalar>::infinity();
    };

    // The linear system behind the minimum-power allocation: at the optimum every
    // rate constraint is active, which reads (I - threshold * coupling) p = rhs.
    template <typename Scalar>
    struct InterferenceSystem
    {
        MatX<Scalar> coupling; // cross gains into each user normalized by its own gain; zero diagonal
        VecX<Scalar> rhs;      // threshold * noise / own gain, per user
        Scalar threshold;      // SINR target, 2^rate - 1
    };

    template <typename DerivedG>
    InterferenceSystem<typename DerivedG::Scalar> build_system(const Eigen::MatrixBase<DerivedG>& gains,
                                                               typename DerivedG::Scalar target_rate,
                                                               typename DerivedG::Scalar noise_power)
    {
        using Scalar = typename DerivedG::Scalar;
        const Eigen::Index n = gains.rows();
        InterferenceSystem<Scalar> sys;
        sys.threshold = sinr_threshold(target_rate);
        sys.coupling.setZero(n, n);
        sys.rhs.resize(n);
        for (Eigen::Index m = 0; m < n; m++)
        {
            const Scalar own = gains(m, m);
            for (Eigen::Index i = 0; i < n; i++)
                if (i != m)
                    sys.coupling(m, i) = gains(i, m) / own;
            sys.rhs(m) = sys.threshold * noise_power / own;
        }
        return sys;
    }

    // Direct dense solve of (I - threshold * coupling) p = rhs with partial
    // pivoting and one iterative-refinement step. Feasible only when the system
    // is well conditioned and every component comes out strictly positive; a
    // singular matrix reports infeasible instead of throwing.
    template <typename Scalar>
    PowerSolution<Scalar> solve_min_power(const InterferenceSystem<Scalar>& sys)
    {
        const Eigen::Index n = sys.coupling.rows();
        MatX<Scalar> a = MatX<Scalar>::Identity(n, n) - sys.threshold * sys.coupling;
        Eigen::PartialPivLU<MatX<Scalar>> lu(a);

        PowerSolution<Scalar> sol;
        if (!(lu.rcond() >= Scalar(kMinReciprocalCondition)))
            return sol;

        VecX<Scalar> p = lu.solve(sys.rhs);
        p += lu.solve(sys.rhs - a * p);

        if (!p.allFinite() || !(p.array() > Scalar(0)).all())
            return sol;

        sol.powers = std::move(p);
        sol.feasible = true;
        sol.total = sol.powers.sum();
        return sol;
    }

    // Closed form for the two-cell case. The system is feasible exactly when
    // g(0,0) g(1,1) - threshold^2 g(1,0) g(0,1) is strictly positive; both powers
    // are then positive automatically.
    template <typename DerivedG>
    PowerSolution<typename DerivedG::Scalar> two_cell_powers(const Eigen::MatrixBase<DerivedG>& gains,
                                                             typename DerivedG::Scalar target_rate,
                                                             typename DerivedG::Scalar noise_power)
    {
        using Scalar = typename DerivedG::Scalar;
        if (gains.rows() != 2 || gains.cols() != 2)
            throw std::invalid_argument("two_cell_powers: gain matrix must be 2x2");

        const Scalar eps = sinr_threshold(target_rate);
        const Scalar own0 = gains(0, 0), own1 = gains(1, 1);
        const Scalar cross10 = gains(1, 0); // antenna 1 -> user 0
        const Scalar cross01 = gains(0, 1); // antenna 0 -> user 1
        const Scalar den = own0 * own1 - eps * eps * cross10 * cross01;

        PowerSolution<Scalar> sol;
        if (!(den > Scalar(0)))
            return sol;

        VecX<Scalar> p(2);
        p(0) = eps * noise_power * (own1 + eps * cross10) / den;
        p(1) = eps * noise_power * (own0 + eps * cross01) / den;
        if (!p.allFinite())
            return sol;

        sol.powers = std::move(p);
        sol.feasible = true;
        sol.total = sol.powers.sum();
        return sol;
    }

    // Largest absolute gap between the achieved rates and the target; at a
    // minimum-power solution every constraint is active, so this is a residual
    // check. Throws if the solution is infeasible.
    template <typename Scalar, typename DerivedG>
    Scalar verify_rates(const PowerSolution<Scalar>& sol,
                        const Eigen::MatrixBase<DerivedG>& gains,
                        Scalar target_rate, Scalar noise_power)
    {
        if (!sol.feasible)
            throw std::invalid_argument("verify_rates: solution is infeasible");
        const VecX<Scalar> rates = achieved_rates(sol.powers, gains, noise_power);
        return (rates.array() - target_rate).abs().maxCoeff();
    }
}

#endif
