#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semitoric {

/// Truncated bivariate power series with zero constant term: the formal
/// invariant attached to one focus-focus value. The coefficient of z2 is
/// normalized into [0, 2*pi).
class FormalSeries2 {
public:
    using Key = std::pair<int, int>;  // exponents (i, j) of z1^i z2^j

    FormalSeries2(int truncation_degree, std::map<Key, double> coefficients);

    static FormalSeries2 zero(int truncation_degree);

    int degree() const { return degree_; }
    double coeff(int i, int j) const;
    const std::map<Key, double>& coefficients() const { return coeffs_; }

private:
    int degree_;
    std::map<Key, double> coeffs_;
};

/// Coefficient-wise |a - b| <= tolerance over all exponents with
/// 1 <= i + j <= degree. degree must not exceed either truncation degree.
bool series_equal(const FormalSeries2& a, const FormalSeries2& b, int degree, double tolerance);

/// All exponent pairs with 1 <= i + j <= degree, ordered by total degree
/// then decreasing i. This is the column order of the recovery fit.
std::vector<std::pair<int, int>> series_monomials(int degree);

/// One sampled point of the period data: position z != 0 and the two travel
/// times. tau1 carries the logarithmic blowup near 0; tau2 must already be
/// lifted continuously from the circle to the reals.
struct PeriodSample {
    double z1 = 0.0;
    double z2 = 0.0;
    double tau1 = 0.0;
    double tau2 = 0.0;
};

/// Branch of the complex logarithm used during regularization, fixed by the
/// angular window measured from the positive real axis.
enum class AngleWindow {
    zero_to_two_pi,  // angles in [0, 2*pi), the default convention
    pi_to_three_pi,  // angles in [pi, 3*pi), for downward cut directions
};

/// The regularized 1-form samples: sigma1 = tau1 + Re ln z and
/// sigma2 = tau2 - Im ln z, finite through the puncture.
class SigmaField {
public:
    SigmaField(std::vector<double> z1, std::vector<double> z2, std::vector<double> sigma1,
               std::vector<double> sigma2);

    std::size_t size() const { return z1_.size(); }
    const std::vector<double>& z1() const { return z1_; }
    const std::vector<double>& z2() const { return z2_; }
    const std::vector<double>& sigma1() const { return sigma1_; }
    const std::vector<double>& sigma2() const { return sigma2_; }

private:
    std::vector<double> z1_, z2_, sigma1_, sigma2_;
};

/// Index of field samples on a regular axis-aligned lattice (holes allowed,
/// e.g. the puncture and the outside of an annulus). cell holds the sample
/// index at (ix, iy) or -1.
struct LatticeIndex {
    std::size_t nx = 0, ny = 0;
    double x0 = 0.0, y0 = 0.0;
    double hx = 0.0, hy = 0.0;
    std::vector<std::int32_t> cell;

    std::int32_t at(std::size_t ix, std::size_t iy) const { return cell[iy * nx + ix]; }
};

/// Reconstructs the lattice structure of a field's sample positions.
/// Throws std::domain_error when the positions do not form a regular grid
/// or the grid is smaller than 3x3.
LatticeIndex build_lattice(const SigmaField& field);

struct ClosednessReport {
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::size_t stencils = 0;
    double step_x = 0.0;
    double step_y = 0.0;
};

struct SeriesFit {
    FormalSeries2 series;
    double residual_rms = 0.0;
    std::int64_t two_pi_multiple = 0;  // subtracted from the z2 coefficient
};

/// Raised when the recovery fit's normal system is rank deficient.
struct ConditioningError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pointwise regularization of period samples. Throws std::domain_error on
/// a sample at the origin.
SigmaField regularize(const std::vector<PeriodSample>& samples,
                      AngleWindow window = AngleWindow::zero_to_two_pi);

/// Max central-difference curl residual |d(sigma1)/dz2 - d(sigma2)/dz1|
/// over all interior lattice points with full stencils.
ClosednessReport check_closed(const SigmaField& field, double tolerance);

/// Least-squares primitive of the field: polynomial S with S(0) = 0 and
/// total degree <= degree whose gradient best matches (sigma1, sigma2),
/// solved through the normal equations. The z2 coefficient is normalized
/// into [0, 2*pi), recording the subtracted multiple of 2*pi.
SeriesFit recover_series(const SigmaField& field, int degree);

/// Plain-loop reference implementations of the parallel kernels, kept for
/// cross-checking and benchmarking.
namespace serial_ref {

SigmaField regularize(const std::vector<PeriodSample>& samples,
                      AngleWindow window = AngleWindow::zero_to_two_pi);

double max_curl_residual(const SigmaField& field, const LatticeIndex& lattice,
                         std::size_t* stencils = nullptr);

/// Normal system of the gradient fit: ata is row-major M x M, atb length M,
/// M = number of monomials of series_monomials(degree).
void normal_system(const SigmaField& field, int degree, std::vector<double>& ata,
                   std::vector<double>& atb);

}  // namespace serial_ref

/// OpenMP implementations backing the public operations; same contracts as
/// serial_ref.
namespace kernels {

SigmaField regularize(const std::vector<PeriodSample>& samples,
                      AngleWindow window = AngleWindow::zero_to_two_pi);

double max_curl_residual(const SigmaField& field, const LatticeIndex& lattice,
                         std::size_t* stencils = nullptr);

void normal_system(const SigmaField& field, int degree, std::vector<double>& ata,
                   std::vector<double>& atb);

}  // namespace kernels

}  // namespace semitoric
