#include "semitoric/series.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace semitoric {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Gradient of every monomial z1^i z2^j at one sample point, in the order of
// series_monomials(degree).
void monomial_gradients(double z1, double z2, const std::vector<std::pair<int, int>>& monomials,
                        int degree, std::vector<double>& g1, std::vector<double>& g2) {
    // pow1[i] = z1^i, pow2[j] = z2^j
    std::vector<double> pow1(static_cast<std::size_t>(degree) + 1, 1.0);
    std::vector<double> pow2(static_cast<std::size_t>(degree) + 1, 1.0);
    for (int i = 1; i <= degree; ++i) pow1[static_cast<std::size_t>(i)] = pow1[i - 1] * z1;
    for (int j = 1; j <= degree; ++j) pow2[static_cast<std::size_t>(j)] = pow2[j - 1] * z2;
    g1.resize(monomials.size());
    g2.resize(monomials.size());
    for (std::size_t m = 0; m < monomials.size(); ++m) {
        const auto [i, j] = monomials[m];
        g1[m] = i == 0 ? 0.0 : static_cast<double>(i) * pow1[i - 1] * pow2[j];
        g2[m] = j == 0 ? 0.0 : static_cast<double>(j) * pow1[i] * pow2[j - 1];
    }
}

double branch_angle(double z1, double z2, AngleWindow window) {
    double theta = std::atan2(z2, z1);  // (-pi, pi]
    switch (window) {
        case AngleWindow::zero_to_two_pi:
            if (theta < 0.0) theta += kTwoPi;
            break;
        case AngleWindow::pi_to_three_pi:
            if (theta < std::numbers::pi) theta += kTwoPi;
            break;
    }
    return theta;
}

void regularize_one(const PeriodSample& s, AngleWindow window, double& sigma1, double& sigma2) {
    const double r2 = s.z1 * s.z1 + s.z2 * s.z2;
    sigma1 = s.tau1 + 0.5 * std::log(r2);
    sigma2 = s.tau2 - branch_angle(s.z1, s.z2, window);
}

void check_no_origin(const std::vector<PeriodSample>& samples) {
    for (const PeriodSample& s : samples) {
        if (s.z1 == 0.0 && s.z2 == 0.0)
            throw std::domain_error("period sample at the origin is not allowed");
    }
}

// Clusters sorted coordinate values and checks they sit on a uniform step.
std::vector<double> cluster_axis(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const double span = values.back() - values.front();
    const double tol = span > 0.0 ? span * 1e-9 : 0.0;
    std::vector<double> unique;
    for (double v : values) {
        if (unique.empty() || v - unique.back() > tol) unique.push_back(v);
    }
    return unique;
}

double axis_step(const std::vector<double>& unique) {
    double h = 0.0;
    for (std::size_t i = 1; i < unique.size(); ++i) {
        const double gap = unique[i] - unique[i - 1];
        if (h == 0.0 || gap < h) h = gap;
    }
    for (std::size_t i = 1; i < unique.size(); ++i) {
        const double gap = unique[i] - unique[i - 1];
        const double m = std::round(gap / h);
        if (m < 1.0 || std::abs(gap - m * h) > 1e-6 * h)
            throw std::domain_error("field samples do not form a regular grid");
    }
    return h;
}

}  // namespace

FormalSeries2::FormalSeries2(int truncation_degree, std::map<Key, double> coefficients)
    : degree_(truncation_degree) {
    if (degree_ < 1) throw std::invalid_argument("series truncation degree must be at least 1");
    for (const auto& [key, value] : coefficients) {
        const auto [i, j] = key;
        if (i < 0 || j < 0) throw std::invalid_argument("series exponents must be non-negative");
        if (i == 0 && j == 0)
            throw std::invalid_argument("series constant term must be absent (S(0) = 0)");
        if (i + j > degree_)
            throw std::invalid_argument("series coefficient exceeds the truncation degree");
        if (value != 0.0) coeffs_.emplace(key, value);
    }
    const double c01 = coeff(0, 1);
    if (!(c01 >= 0.0 && c01 < kTwoPi))
        throw std::invalid_argument("the z2 coefficient must lie in [0, 2*pi)");
}

FormalSeries2 FormalSeries2::zero(int truncation_degree) {
    return FormalSeries2(truncation_degree, {});
}

double FormalSeries2::coeff(int i, int j) const {
    const auto it = coeffs_.find({i, j});
    return it == coeffs_.end() ? 0.0 : it->second;
}

bool series_equal(const FormalSeries2& a, const FormalSeries2& b, int degree, double tolerance) {
    if (degree < 1) throw std::domain_error("comparison degree must be at least 1");
    if (degree > a.degree() || degree > b.degree())
        throw std::domain_error("comparison degree exceeds a series truncation degree");
    for (const auto& [i, j] : series_monomials(degree)) {
        if (std::abs(a.coeff(i, j) - b.coeff(i, j)) > tolerance) return false;
    }
    return true;
}

std::vector<std::pair<int, int>> series_monomials(int degree) {
    std::vector<std::pair<int, int>> out;
    for (int total = 1; total <= degree; ++total) {
        for (int i = total; i >= 0; --i) out.emplace_back(i, total - i);
    }
    return out;
}

SigmaField::SigmaField(std::vector<double> z1, std::vector<double> z2, std::vector<double> sigma1,
                       std::vector<double> sigma2)
    : z1_(std::move(z1)), z2_(std::move(z2)), sigma1_(std::move(sigma1)),
      sigma2_(std::move(sigma2)) {
    if (z1_.size() != z2_.size() || z1_.size() != sigma1_.size() || z1_.size() != sigma2_.size())
        throw std::invalid_argument("field component lengths differ");
}

LatticeIndex build_lattice(const SigmaField& field) {
    if (field.size() == 0) throw std::domain_error("empty field");
    const std::vector<double> ux = cluster_axis(field.z1());
    const std::vector<double> uy = cluster_axis(field.z2());
    if (ux.size() < 2 || uy.size() < 2)
        throw std::domain_error("grid too small for central differences (need at least 3x3)");

    LatticeIndex lat;
    lat.x0 = ux.front();
    lat.y0 = uy.front();
    lat.hx = axis_step(ux);
    lat.hy = axis_step(uy);
    lat.nx = static_cast<std::size_t>(std::round((ux.back() - ux.front()) / lat.hx)) + 1;
    lat.ny = static_cast<std::size_t>(std::round((uy.back() - uy.front()) / lat.hy)) + 1;
    if (lat.nx > 100000 || lat.ny > 100000 || lat.nx * lat.ny > 50000000)
        throw std::domain_error("field samples do not form a regular grid");

    lat.cell.assign(lat.nx * lat.ny, -1);
    for (std::size_t s = 0; s < field.size(); ++s) {
        const double fx = (field.z1()[s] - lat.x0) / lat.hx;
        const double fy = (field.z2()[s] - lat.y0) / lat.hy;
        const auto ix = static_cast<std::size_t>(std::llround(fx));
        const auto iy = static_cast<std::size_t>(std::llround(fy));
        if (ix >= lat.nx || iy >= lat.ny || std::abs(fx - static_cast<double>(ix)) > 1e-6 ||
            std::abs(fy - static_cast<double>(iy)) > 1e-6)
            throw std::domain_error("field samples do not form a regular grid");
        std::int32_t& slot = lat.cell[iy * lat.nx + ix];
        if (slot != -1) throw std::domain_error("duplicate sample position in field");
        slot = static_cast<std::int32_t>(s);
    }
    return lat;
}

namespace serial_ref {

SigmaField regularize(const std::vector<PeriodSample>& samples, AngleWindow window) {
    check_no_origin(samples);
    const std::size_t n = samples.size();
    std::vector<double> z1(n), z2(n), s1(n), s2(n);
    for (std::size_t i = 0; i < n; ++i) {
        z1[i] = samples[i].z1;
        z2[i] = samples[i].z2;
        regularize_one(samples[i], window, s1[i], s2[i]);
    }
    return SigmaField(std::move(z1), std::move(z2), std::move(s1), std::move(s2));
}

double max_curl_residual(const SigmaField& field, const LatticeIndex& lat,
                         std::size_t* stencils) {
    double worst = 0.0;
    std::size_t count = 0;
    for (std::size_t iy = 1; iy + 1 < lat.ny; ++iy) {
        for (std::size_t ix = 1; ix + 1 < lat.nx; ++ix) {
            const std::int32_t c = lat.at(ix, iy);
            const std::int32_t xm = lat.at(ix - 1, iy), xp = lat.at(ix + 1, iy);
            const std::int32_t ym = lat.at(ix, iy - 1), yp = lat.at(ix, iy + 1);
            if (c < 0 || xm < 0 || xp < 0 || ym < 0 || yp < 0) continue;
            const double d1_dy = (field.sigma1()[yp] - field.sigma1()[ym]) / (2.0 * lat.hy);
            const double d2_dx = (field.sigma2()[xp] - field.sigma2()[xm]) / (2.0 * lat.hx);
            const double r = std::abs(d1_dy - d2_dx);
            if (r > worst) worst = r;
            ++count;
        }
    }
    if (stencils) *stencils = count;
    return worst;
}

void normal_system(const SigmaField& field, int degree, std::vector<double>& ata,
                   std::vector<double>& atb) {
    const auto monomials = series_monomials(degree);
    const std::size_t m = monomials.size();
    ata.assign(m * m, 0.0);
    atb.assign(m, 0.0);
    std::vector<double> g1, g2;
    for (std::size_t s = 0; s < field.size(); ++s) {
        monomial_gradients(field.z1()[s], field.z2()[s], monomials, degree, g1, g2);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t c = 0; c < m; ++c) ata[r * m + c] += g1[r] * g1[c] + g2[r] * g2[c];
            atb[r] += g1[r] * field.sigma1()[s] + g2[r] * field.sigma2()[s];
        }
    }
}

}  // namespace serial_ref

namespace kernels {

SigmaField regularize(const std::vector<PeriodSample>& samples, AngleWindow window) {
    check_no_origin(samples);
    const std::size_t n = samples.size();
    std::vector<double> z1(n), z2(n), s1(n), s2(n);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
        z1[i] = samples[i].z1;
        z2[i] = samples[i].z2;
        regularize_one(samples[i], window, s1[i], s2[i]);
    }
    return SigmaField(std::move(z1), std::move(z2), std::move(s1), std::move(s2));
}

double max_curl_residual(const SigmaField& field, const LatticeIndex& lat,
                         std::size_t* stencils) {
    double worst = 0.0;
    std::size_t count = 0;
    const std::ptrdiff_t ny = static_cast<std::ptrdiff_t>(lat.ny);
#pragma omp parallel for schedule(static) reduction(max : worst) reduction(+ : count)
    for (std::ptrdiff_t iy = 1; iy < ny - 1; ++iy) {
        for (std::size_t ix = 1; ix + 1 < lat.nx; ++ix) {
            const std::int32_t c = lat.at(ix, static_cast<std::size_t>(iy));
            const std::int32_t xm = lat.at(ix - 1, static_cast<std::size_t>(iy));
            const std::int32_t xp = lat.at(ix + 1, static_cast<std::size_t>(iy));
            const std::int32_t ym = lat.at(ix, static_cast<std::size_t>(iy) - 1);
            const std::int32_t yp = lat.at(ix, static_cast<std::size_t>(iy) + 1);
            if (c < 0 || xm < 0 || xp < 0 || ym < 0 || yp < 0) continue;
            const double d1_dy = (field.sigma1()[yp] - field.sigma1()[ym]) / (2.0 * lat.hy);
            const double d2_dx = (field.sigma2()[xp] - field.sigma2()[xm]) / (2.0 * lat.hx);
            const double r = std::abs(d1_dy - d2_dx);
            if (r > worst) worst = r;
            ++count;
        }
    }
    if (stencils) *stencils = count;
    return worst;
}

void normal_system(const SigmaField& field, int degree, std::vector<double>& ata,
                   std::vector<double>& atb) {
    const auto monomials = series_monomials(degree);
    const std::size_t m = monomials.size();
    ata.assign(m * m, 0.0);
    atb.assign(m, 0.0);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::vector<std::vector<double>> ata_part(threads, std::vector<double>(m * m, 0.0));
    std::vector<std::vector<double>> atb_part(threads, std::vector<double>(m, 0.0));

#pragma omp parallel
    {
        int t = 0;
#ifdef _OPENMP
        t = omp_get_thread_num();
#endif
        std::vector<double>& la = ata_part[static_cast<std::size_t>(t)];
        std::vector<double>& lb = atb_part[static_cast<std::size_t>(t)];
        std::vector<double> g1, g2;
#pragma omp for schedule(static)
        for (std::ptrdiff_t s = 0; s < static_cast<std::ptrdiff_t>(field.size()); ++s) {
            monomial_gradients(field.z1()[s], field.z2()[s], monomials, degree, g1, g2);
            for (std::size_t r = 0; r < m; ++r) {
                for (std::size_t c = 0; c < m; ++c)
                    la[r * m + c] += g1[r] * g1[c] + g2[r] * g2[c];
                lb[r] += g1[r] * field.sigma1()[s] + g2[r] * field.sigma2()[s];
            }
        }
    }

    // Combine in thread order so the result is reproducible for a fixed
    // thread count.
    for (int t = 0; t < threads; ++t) {
        for (std::size_t k = 0; k < m * m; ++k) ata[k] += ata_part[static_cast<std::size_t>(t)][k];
        for (std::size_t k = 0; k < m; ++k) atb[k] += atb_part[static_cast<std::size_t>(t)][k];
    }
}

}  // namespace kernels

SigmaField regularize(const std::vector<PeriodSample>& samples, AngleWindow window) {
    return kernels::regularize(samples, window);
}

ClosednessReport check_closed(const SigmaField& field, double tolerance) {
    const LatticeIndex lat = build_lattice(field);
    if (lat.nx < 3 || lat.ny < 3)
        throw std::domain_error("grid too small for central differences (need at least 3x3)");
    std::size_t stencils = 0;
    const double worst = kernels::max_curl_residual(field, lat, &stencils);
    if (stencils == 0)
        throw std::domain_error("no interior grid point has a full difference stencil");
    ClosednessReport report;
    report.max_residual = worst;
    report.tolerance = tolerance;
    report.pass = worst <= tolerance;
    report.stencils = stencils;
    report.step_x = lat.hx;
    report.step_y = lat.hy;
    return report;
}

SeriesFit recover_series(const SigmaField& field, int degree) {
    if (degree < 1) throw std::domain_error("recovery degree must be at least 1");
    const auto monomials = series_monomials(degree);
    const std::size_t m = monomials.size();

    std::vector<double> ata, atb;
    kernels::normal_system(field, degree, ata, atb);

    Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> A(
        ata.data(), static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    Eigen::Map<const Eigen::VectorXd> b(atb.data(), static_cast<Eigen::Index>(m));

    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() < static_cast<Eigen::Index>(m))
        throw ConditioningError("normal system of the gradient fit is rank deficient");
    const Eigen::VectorXd c = lu.solve(b);

    // Residual of the stacked gradient equations.
    double sq = 0.0;
    std::vector<double> g1, g2;
    for (std::size_t s = 0; s < field.size(); ++s) {
        monomial_gradients(field.z1()[s], field.z2()[s], monomials, degree, g1, g2);
        double r1 = -field.sigma1()[s], r2 = -field.sigma2()[s];
        for (std::size_t k = 0; k < m; ++k) {
            r1 += c[static_cast<Eigen::Index>(k)] * g1[k];
            r2 += c[static_cast<Eigen::Index>(k)] * g2[k];
        }
        sq += r1 * r1 + r2 * r2;
    }

    std::map<FormalSeries2::Key, double> coeffs;
    std::int64_t multiple = 0;
    for (std::size_t k = 0; k < m; ++k) {
        double value = c[static_cast<Eigen::Index>(k)];
        if (monomials[k] == std::pair<int, int>{0, 1}) {
            multiple = static_cast<std::int64_t>(std::floor(value / kTwoPi));
            value -= static_cast<double>(multiple) * kTwoPi;
            while (value >= kTwoPi) {
                value -= kTwoPi;
                ++multiple;
            }
            while (value < 0.0) {
                value += kTwoPi;
                --multiple;
            }
        }
        coeffs[monomials[k]] = value;
    }

    SeriesFit fit{FormalSeries2(degree, std::move(coeffs)),
                  std::sqrt(sq / (2.0 * static_cast<double>(field.size()))), multiple};
    return fit;
}

}  // namespace semitoric
