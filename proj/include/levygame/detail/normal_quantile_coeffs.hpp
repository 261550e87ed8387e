#pragma once

// Generated by scripts/fit_normal_quantile.py; do not edit by hand.
// Chebyshev coefficients for the standard normal quantile, evaluated
// with Clenshaw recurrence over the mapped variable.

namespace levygame::detail {

inline constexpr double kNqCentralSMax = 0.85;
inline constexpr double kNqCentralWLo = 0.0;
inline constexpr double kNqCentralWHi = 0.7224999999999999;
inline constexpr double kNqTailRLo = 1.6094306960679687;
inline constexpr double kNqTailRHi = 6.118001942012854;

inline constexpr double kNqCentralCoeffs[32] = {
    np.float64(1.4367367696139512),
    np.float64(0.21247618437287322),
    np.float64(0.03493158816739702),
    np.float64(0.007213559062795969),
    np.float64(0.001660050243506747),
    np.float64(0.0004069032880604119),
    np.float64(0.00010393420376895228),
    np.float64(2.7328626834099773e-05),
    np.float64(7.341936736900866e-06),
    np.float64(2.0053694892787874e-06),
    np.float64(5.549912124592278e-07),
    np.float64(1.5524488713113097e-07),
    np.float64(4.3811997285225975e-08),
    np.float64(1.2456787364240973e-08),
    np.float64(3.564363764682195e-09),
    np.float64(1.0255186530281103e-09),
    np.float64(2.9647325633739294e-10),
    np.float64(8.607123344291531e-11),
    np.float64(2.508150803809117e-11),
    np.float64(7.3333640654355e-12),
    np.float64(2.1507031080442094e-12),
    np.float64(6.324392857792682e-13),
    np.float64(1.8651474100544287e-13),
    np.float64(5.518265684762491e-14),
    np.float64(1.636707215757199e-14),
    np.float64(4.823594534907905e-15),
    np.float64(1.3725361702718718e-15),
    np.float64(3.5809283759965773e-16),
    np.float64(2.689117832592115e-16),
    np.float64(2.5036012298722885e-17),
    np.float64(-8.765384224411585e-17),
    np.float64(-7.84013552678313e-18),
};

inline constexpr double kNqTailCoeffs[40] = {
    np.float64(4.923354709495054),
    np.float64(3.4117771160089303),
    np.float64(-0.0535523796026625),
    np.float64(0.013599002090386914),
    np.float64(-0.0035714549177221994),
    np.float64(0.0009595928956418058),
    np.float64(-0.0002623484774522573),
    np.float64(7.276238733740509e-05),
    np.float64(-2.0433968701138302e-05),
    np.float64(5.802709503553617e-06),
    np.float64(-1.664425730748767e-06),
    np.float64(4.817556932852523e-07),
    np.float64(-1.4057872191282832e-07),
    np.float64(4.132071570545906e-08),
    np.float64(-1.2224282781303415e-08),
    np.float64(3.637215037857936e-09),
    np.float64(-1.0877281291683947e-09),
    np.float64(3.2676126860517123e-10),
    np.float64(-9.855738960180003e-11),
    np.float64(2.983431181195709e-11),
    np.float64(-9.063446719832133e-12),
    np.float64(2.7587385597790035e-12),
    np.float64(-8.408734272446259e-13),
    np.float64(2.553785222889854e-13),
    np.float64(-7.846704423064962e-14),
    np.float64(2.4814800389181988e-14),
    np.float64(-7.033654451319284e-15),
    np.float64(1.2489950153851407e-15),
    np.float64(9.296616559673372e-16),
    np.float64(9.397329532914175e-16),
    np.float64(3.9206271318021145e-16),
    np.float64(-1.2585984238328105e-15),
    np.float64(9.94889130985077e-16),
    np.float64(-2.6624662991243884e-15),
    np.float64(-1.5375968074977824e-16),
    np.float64(-1.34443241213428e-15),
    np.float64(-2.4043676464924157e-15),
    np.float64(-4.051064258760555e-15),
    np.float64(2.624669712126928e-15),
    np.float64(7.127494335150225e-16),
};

}  // namespace levygame::detail
