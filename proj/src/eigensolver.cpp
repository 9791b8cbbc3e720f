#include "hillpt/eigensolver.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/LU>

namespace hillpt {

namespace {

// Parlett-Reinsch diagonal scaling: powers of two only, so eigenvalues are
// preserved exactly.
void balance_in_place(Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    const double radix = 2.0, sq = radix * radix;
    bool done = false;
    while (!done) {
        done = true;
        for (Eigen::Index i = 0; i < n; ++i) {
            double c = 0.0, r = 0.0;
            for (Eigen::Index j = 0; j < n; ++j) {
                if (j == i) continue;
                c += std::abs(a(j, i));
                r += std::abs(a(i, j));
            }
            if (c == 0.0 || r == 0.0) continue;
            const double s = c + r;
            double g = r / radix, f = 1.0;
            while (c < g) {
                f *= radix;
                c *= sq;
            }
            g = r * radix;
            while (c > g) {
                f /= radix;
                c /= sq;
            }
            if ((c + r) / f < 0.95 * s) {
                done = false;
                a.row(i) *= 1.0 / f;
                a.col(i) *= f;
            }
        }
    }
}

void hessenberg_in_place(Eigen::MatrixXd& a) {
    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k + 2 < n; ++k) {
        const Eigen::Index len = n - k - 1;
        Eigen::VectorXd v = a.col(k).segment(k + 1, len);
        const double norm = v.norm();
        if (norm == 0.0) continue;
        const double alpha = v(0) >= 0.0 ? -norm : norm;
        v(0) -= alpha;
        const double v2 = v.squaredNorm();
        if (v2 == 0.0) continue;
        auto left = a.block(k + 1, k, len, n - k);
        left.noalias() -= v * ((v.transpose() * left) * (2.0 / v2)).eval();
        auto right = a.block(0, k + 1, n, len);
        right.noalias() -= ((right * v) * (2.0 / v2)).eval() * v.transpose();
        a(k + 1, k) = alpha;
        a.col(k).segment(k + 2, len - 1).setZero();
    }
}

struct QrOutcome {
    Eigen::VectorXcd values;
    int sweeps = 0;
    double max_neglected = 0.0;
};

// Francis implicit double-shift QR on an upper Hessenberg matrix, eigenvalues
// only (transforms restricted to the active block).  Follows the classic
// EISPACK hqr scheme: Wilkinson shifts from the trailing 2x2, an exceptional
// shift every ten stalled sweeps, deflation when a subdiagonal is negligible
// against its diagonal neighbours.
QrOutcome francis_qr(Eigen::MatrixXd h, int sweep_cap) {
    const Eigen::Index n = h.rows();
    const double eps = std::numeric_limits<double>::epsilon();
    QrOutcome out;
    out.values.resize(n);
    Eigen::Index got = 0;

    double anorm = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = std::max<Eigen::Index>(i - 1, 0); j < n; ++j)
            anorm += std::abs(h(i, j));

    double t = 0.0;  // accumulated exceptional diagonal shift
    Eigen::Index nn = n - 1;
    int its = 0;
    while (nn >= 0) {
        Eigen::Index l = 0;
        for (l = nn; l >= 1; --l) {
            double s = std::abs(h(l - 1, l - 1)) + std::abs(h(l, l));
            if (s == 0.0) s = anorm;
            if (std::abs(h(l, l - 1)) <= eps * s) {
                if (anorm > 0.0)
                    out.max_neglected = std::max(out.max_neglected, std::abs(h(l, l - 1)) / anorm);
                h(l, l - 1) = 0.0;
                break;
            }
        }
        double x = h(nn, nn);
        if (l == nn) {
            out.values(got++) = std::complex<double>(x + t, 0.0);
            --nn;
            its = 0;
            continue;
        }
        double y = h(nn - 1, nn - 1);
        double w = h(nn, nn - 1) * h(nn - 1, nn);
        if (l == nn - 1) {
            double p = 0.5 * (y - x);
            double q = p * p + w;
            double z = std::sqrt(std::abs(q));
            x += t;
            if (q >= 0.0) {
                z = p + std::copysign(z, p);
                const double e1 = x + z;
                const double e2 = (z != 0.0) ? x - w / z : e1;
                out.values(got++) = std::complex<double>(e1, 0.0);
                out.values(got++) = std::complex<double>(e2, 0.0);
            } else {
                out.values(got++) = std::complex<double>(x + p, z);
                out.values(got++) = std::complex<double>(x + p, -z);
            }
            nn -= 2;
            its = 0;
            continue;
        }
        if (out.sweeps >= sweep_cap)
            throw std::runtime_error("qr iteration exceeded " + std::to_string(sweep_cap) +
                                     " sweeps at block ending " + std::to_string(nn));
        if (its != 0 && its % 10 == 0) {
            t += x;
            for (Eigen::Index i = 0; i <= nn; ++i) h(i, i) -= x;
            const double s = std::abs(h(nn, nn - 1)) + std::abs(h(nn - 1, nn - 2));
            y = x = 0.75 * s;
            w = -0.4375 * s * s;
        }
        ++its;
        ++out.sweeps;

        Eigen::Index m = 0;
        double p = 0.0, q = 0.0, r = 0.0;
        for (m = nn - 2; m >= l; --m) {
            const double z = h(m, m);
            double rr = x - z;
            double ss = y - z;
            p = (rr * ss - w) / h(m + 1, m) + h(m, m + 1);
            q = h(m + 1, m + 1) - z - rr - ss;
            r = h(m + 2, m + 1);
            const double sc = std::abs(p) + std::abs(q) + std::abs(r);
            if (sc != 0.0) {
                p /= sc;
                q /= sc;
                r /= sc;
            }
            if (m == l) break;
            const double u = std::abs(h(m, m - 1)) * (std::abs(q) + std::abs(r));
            const double v = std::abs(p) * (std::abs(h(m - 1, m - 1)) + std::abs(z) +
                                            std::abs(h(m + 1, m + 1)));
            if (u <= eps * v) break;
        }
        for (Eigen::Index i = m + 2; i <= nn; ++i) {
            h(i, i - 2) = 0.0;
            if (i != m + 2) h(i, i - 3) = 0.0;
        }
        for (Eigen::Index k = m; k <= nn - 1; ++k) {
            double xs = 0.0;
            if (k != m) {
                p = h(k, k - 1);
                q = h(k + 1, k - 1);
                r = (k != nn - 1) ? h(k + 2, k - 1) : 0.0;
                xs = std::abs(p) + std::abs(q) + std::abs(r);
                if (xs != 0.0) {
                    p /= xs;
                    q /= xs;
                    r /= xs;
                }
            }
            const double s = std::copysign(std::sqrt(p * p + q * q + r * r), p);
            if (s == 0.0) continue;
            if (k == m) {
                if (l != m) h(k, k - 1) = -h(k, k - 1);
            } else {
                h(k, k - 1) = -s * xs;
            }
            p += s;
            x = p / s;
            y = q / s;
            double z = r / s;
            q /= p;
            r /= p;
            for (Eigen::Index j = k; j <= nn; ++j) {
                double pp = h(k, j) + q * h(k + 1, j);
                if (k != nn - 1) {
                    pp += r * h(k + 2, j);
                    h(k + 2, j) -= pp * z;
                }
                h(k + 1, j) -= pp * y;
                h(k, j) -= pp * x;
            }
            const Eigen::Index mmin = std::min(nn, k + 3);
            for (Eigen::Index i = l; i <= mmin; ++i) {
                double pp = x * h(i, k) + y * h(i, k + 1);
                if (k != nn - 1) {
                    pp += z * h(i, k + 2);
                    h(i, k + 2) -= pp * r;
                }
                h(i, k + 1) -= pp * q;
                h(i, k) -= pp;
            }
        }
    }
    return out;
}

void validate_square_finite(const Eigen::MatrixXd& m) {
    if (m.rows() == 0 || m.rows() != m.cols())
        throw std::invalid_argument("matrix must be square and nonempty");
    if (!m.allFinite()) throw std::invalid_argument("matrix entries must be finite");
}

}  // namespace

EigenDecomposition eigenvalues(const Eigen::MatrixXd& m) {
    validate_square_finite(m);
    Eigen::MatrixXd h = m;
    balance_in_place(h);
    hessenberg_in_place(h);
    QrOutcome qr = francis_qr(std::move(h), 30 * static_cast<int>(m.rows()));
    EigenDecomposition dec;
    dec.eigenvalues = std::move(qr.values);
    dec.convergence_iterations = qr.sweeps;
    dec.max_residual = qr.max_neglected;
    return dec;
}

Eigen::VectorXcd eigenvector_near(const Eigen::MatrixXd& m, std::complex<double> e) {
    validate_square_finite(m);
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
        throw std::invalid_argument("target energy must be finite");
    const Eigen::Index n = m.rows();
    const double scale = m.norm();

    const EigenDecomposition dec = eigenvalues(m);
    double dist = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 0; i < n; ++i) dist = std::min(dist, std::abs(dec.eigenvalues(i) - e));
    if (dist > 1e-6 * std::max(scale, 1.0))
        throw std::invalid_argument("target energy is not near the computed spectrum");

    const Eigen::MatrixXcd mc = m.cast<std::complex<double>>();
    Eigen::VectorXcd b(n);
    for (Eigen::Index j = 0; j < n; ++j)
        b(j) = std::complex<double>(std::cos(0.9 * static_cast<double>(j)) + 0.2,
                                    std::sin(1.7 * static_cast<double>(j) + 0.4));
    b /= b.norm();

    const double tau_base = 1e-11 * std::max(scale, 1.0);
    for (int attempt = 0; attempt < 4; ++attempt) {
        const std::complex<double> sigma = e + tau_base * std::pow(100.0, attempt);
        Eigen::PartialPivLU<Eigen::MatrixXcd> lu(mc - sigma * Eigen::MatrixXcd::Identity(n, n));
        Eigen::VectorXcd v = b;
        bool broke_down = false;
        for (int it = 0; it < 50; ++it) {
            Eigen::VectorXcd next = lu.solve(v);
            const double nrm = next.norm();
            if (!std::isfinite(nrm) || nrm == 0.0) {
                broke_down = true;
                break;
            }
            v = next / nrm;
            const double residual = (mc * v - e * v).norm();
            if (residual <= 1e-8 * std::max(scale, std::numeric_limits<double>::min())) {
                Eigen::Index imax = 0;
                v.cwiseAbs().maxCoeff(&imax);
                v *= std::conj(v(imax)) / std::abs(v(imax));
                return v;
            }
        }
        if (!broke_down) break;
    }
    throw std::runtime_error("inverse iteration failed to reach the residual tolerance");
}

}  // namespace hillpt
