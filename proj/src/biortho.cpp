#include "qaw/biortho.hpp"

#include <cmath>

#include "qaw/errors.hpp"

namespace qaw {

Eigen::Matrix2cd TwoLevelHamiltonian::matrix() const {
    Eigen::Matrix2cd m;
    m << -epsilon, -w * std::exp(-g), -w * std::exp(g), epsilon;
    return m;
}

double TwoLevelHamiltonian::lambda() const { return std::hypot(epsilon, w); }

TwoLevelEigensystem right_left_eigensystem(const TwoLevelHamiltonian& h) {
    const double lam = h.lambda();
    if (lam == 0.0) throw ConfigError("right_left_eigensystem: eps = w = 0 is degenerate");

    // orthonormal eigenvectors of the Hermitian block [[-eps, -w], [-w, eps]]:
    // (w, lambda - eps) belongs to -lambda; its orthogonal complement to +lambda.
    const double eps = h.epsilon, w = h.w;
    Eigen::Matrix2d v0;
    {
        const double a = w, b = lam - eps;
        const double na = std::hypot(a, b);
        if (na > 0.0) {
            const double c0 = a / na, c1 = b / na;
            v0 << c0, -c1, c1, c0;
        } else {
            v0.setIdentity();  // w = 0: the block is already diagonal
        }
    }

    TwoLevelEigensystem sys;
    sys.energies = {-lam, +lam};
    const double eg = std::exp(-h.g / 2.0), ee = std::exp(h.g / 2.0);
    for (int n = 0; n < 2; ++n) {
        sys.right.col(n) = Eigen::Vector2cd(eg * v0(0, n), ee * v0(1, n));
        sys.left.col(n) = Eigen::Vector2cd(v0(0, n) / eg, v0(1, n) / ee);
    }
    return sys;
}

ExpectationSeries expectation_time_series(const TwoLevelHamiltonian& h,
                                          const Eigen::Vector2cd& coefficients, int t_max) {
    if (t_max < 0) throw ConfigError("expectation_time_series: t_max must be non-negative");
    const TwoLevelEigensystem sys = right_left_eigensystem(h);
    const Eigen::Matrix2cd hm = h.matrix();

    ExpectationSeries out;
    out.left_right_energy.reserve(t_max + 1);
    out.right_right_energy.reserve(t_max + 1);
    out.right_right_norm.reserve(t_max + 1);
    out.left_right_norm.reserve(t_max + 1);

    for (int t = 0; t <= t_max; ++t) {
        Eigen::Vector2cd right = Eigen::Vector2cd::Zero();
        Eigen::Vector2cd left = Eigen::Vector2cd::Zero();
        for (int n = 0; n < 2; ++n) {
            const Complex phase = std::polar(1.0, -sys.energies[n] * t);
            right += coefficients[n] * phase * sys.right.col(n);
            // <psi^L(T)| = sum c_n^* e^{+i E_n T} <psi^L_n|; as a ket the
            // phase conjugates back to e^{-i E_n T}
            left += coefficients[n] * phase * sys.left.col(n);
        }
        out.left_right_energy.push_back(left.dot(hm * right));
        out.right_right_energy.push_back(right.dot(hm * right));
        out.right_right_norm.push_back(right.dot(right));
        out.left_right_norm.push_back(left.dot(right));
    }
    return out;
}

}  // namespace qaw
