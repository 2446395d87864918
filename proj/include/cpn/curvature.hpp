#ifndef CPN_CURVATURE_HPP
#define CPN_CURVATURE_HPP

// Algebraic curvature tensors of Kähler type at a point, in a unitary frame
// (g_{i jbar} = delta_{ij}). R(i, j, k, l) stores R_{i jbar k lbar}.
//
// Kähler symmetries:
//   R_{i jbar k lbar} = R_{k jbar i lbar} = R_{i lbar k jbar}
//   conj(R_{i jbar k lbar}) = R_{j ibar l kbar}

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpn {

using Complex = std::complex<double>;

// Square complex matrix, row-major.
class ComplexMatrix {
public:
    explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(std::size_t n, double scale = 1.0)
    {
        ComplexMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = scale;
        return m;
    }

    std::size_t dim() const noexcept { return n_; }
    Complex &operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Complex &operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    Complex trace() const
    {
        Complex t = 0;
        for (std::size_t i = 0; i < n_; ++i)
            t += (*this)(i, i);
        return t;
    }

    // max |a_ij - b_ij|
    friend double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b)
    {
        double m = 0;
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            m = std::max(m, std::abs(a.data_[k] - b.data_[k]));
        return m;
    }

    double hermitian_defect() const
    {
        double m = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
        return m;
    }

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

class KahlerCurvature {
public:
    explicit KahlerCurvature(std::size_t n) : n_(n), data_(n * n * n * n) {}

    std::size_t dim() const noexcept { return n_; }

    Complex &operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l)
    {
        return data_[((i * n_ + j) * n_ + k) * n_ + l];
    }
    const Complex &operator()(std::size_t i, std::size_t j, std::size_t k, std::size_t l) const
    {
        return data_[((i * n_ + j) * n_ + k) * n_ + l];
    }

    const std::vector<Complex> &data() const noexcept { return data_; }

    KahlerCurvature &operator+=(const KahlerCurvature &o)
    {
        require_same_dim(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += o.data_[k];
        return *this;
    }
    KahlerCurvature &operator-=(const KahlerCurvature &o)
    {
        require_same_dim(o);
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] -= o.data_[k];
        return *this;
    }
    KahlerCurvature &operator*=(double c)
    {
        for (auto &x : data_)
            x *= c;
        return *this;
    }

    friend KahlerCurvature operator+(KahlerCurvature a, const KahlerCurvature &b) { return a += b; }
    friend KahlerCurvature operator-(KahlerCurvature a, const KahlerCurvature &b) { return a -= b; }
    friend KahlerCurvature operator*(KahlerCurvature a, double c) { return a *= c; }
    friend KahlerCurvature operator*(double c, KahlerCurvature a) { return a *= c; }

    // Largest violation of the pair and Hermitian symmetries.
    double symmetry_defect() const
    {
        double m = 0;
        const auto &R = *this;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    for (std::size_t l = 0; l < n_; ++l) {
                        const Complex r = R(i, j, k, l);
                        m = std::max(m, std::abs(r - R(k, j, i, l)));
                        m = std::max(m, std::abs(r - R(i, l, k, j)));
                        m = std::max(m, std::abs(std::conj(r) - R(j, i, l, k)));
                    }
        return m;
    }

    void require_same_dim(const KahlerCurvature &o) const
    {
        if (n_ != o.n_)
            throw std::invalid_argument("curvature tensors of different dimensions");
    }

private:
    std::size_t n_;
    std::vector<Complex> data_;
};

inline double max_abs_diff(const KahlerCurvature &a, const KahlerCurvature &b)
{
    a.require_same_dim(b);
    double m = 0;
    for (std::size_t k = 0; k < a.data().size(); ++k)
        m = std::max(m, std::abs(a.data()[k] - b.data()[k]));
    return m;
}

// c (delta_{ij} delta_{kl} + delta_{il} delta_{kj}): constant holomorphic
// sectional curvature 2c, Einstein with lambda = c (n+1).
inline KahlerCurvature model_tensor(std::size_t n, double c)
{
    KahlerCurvature R(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            R(i, i, k, k) += c;
            R(i, k, k, i) += c;
        }
    return R;
}

// Projection onto Kähler-symmetric tensors: average over the i<->k and
// j<->l swaps, then over the Hermitian conjugate index pattern.
inline KahlerCurvature symmetrize(const KahlerCurvature &T)
{
    const std::size_t n = T.dim();
    KahlerCurvature S(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    S(i, j, k, l) = 0.25 * (T(i, j, k, l) + T(k, j, i, l) + T(i, l, k, j) + T(k, l, i, j));
    KahlerCurvature H(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    H(i, j, k, l) = 0.5 * (S(i, j, k, l) + std::conj(S(j, i, l, k)));
    return H;
}

// Unsymmetrized tensor with independent standard complex Gaussian entries.
inline KahlerCurvature random_raw_tensor(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    KahlerCurvature T(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const double re = normal(rng);
                    const double im = normal(rng);
                    T(i, j, k, l) = Complex(re, im);
                }
    return T;
}

inline KahlerCurvature random_kahler_curvature(std::size_t n, std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("curvature tensors need complex dimension n >= 2");
    return symmetrize(random_raw_tensor(n, seed));
}

// R_{i jbar} = sum_k R_{i jbar k kbar}
inline ComplexMatrix ricci(const KahlerCurvature &R)
{
    const std::size_t n = R.dim();
    ComplexMatrix ric(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Complex acc = 0;
            for (std::size_t k = 0; k < n; ++k)
                acc += R(i, j, k, k);
            ric(i, j) = acc;
        }
    return ric;
}

inline double scalar_curvature(const KahlerCurvature &R) { return ricci(R).trace().real(); }

// |Rm|^2
inline double norm_sq_rm(const KahlerCurvature &R)
{
    double s = 0;
    for (const auto &x : R.data())
        s += std::norm(x);
    return s;
}

// |Ric|^2
inline double norm_sq_ric(const KahlerCurvature &R)
{
    const ComplexMatrix ric = ricci(R);
    double s = 0;
    for (std::size_t i = 0; i < R.dim(); ++i)
        for (std::size_t j = 0; j < R.dim(); ++j)
            s += std::norm(ric(i, j));
    return s;
}

// S(B)_{i jbar k lbar} = B_{ij} d_{kl} + d_{ij} B_{kl} + B_{il} d_{kj} + d_{il} B_{kj}.
// For Hermitian B it is Kähler-symmetric with ricci(S(B)) = (n+2) B + tr(B) Id.
inline KahlerCurvature symmetric_product(const ComplexMatrix &B)
{
    const std::size_t n = B.dim();
    KahlerCurvature S(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    Complex v = 0;
                    if (k == l)
                        v += B(i, j);
                    if (i == j)
                        v += B(k, l);
                    if (k == j)
                        v += B(i, l);
                    if (i == l)
                        v += B(k, j);
                    S(i, j, k, l) = v;
                }
    return S;
}

inline double einstein_deviation(const KahlerCurvature &R, double lambda)
{
    return max_abs_diff(ricci(R), ComplexMatrix::identity(R.dim(), lambda));
}

inline constexpr double einstein_projection_tolerance = 1e-10;

// Adds the Ricci-deficit correction S(D0)/(n+2) + tr(D)/(2n(n+1)) S(Id),
// D = lambda Id - ricci(R), D0 its traceless part, so that the result is
// Einstein with constant lambda.
inline KahlerCurvature make_einstein(const KahlerCurvature &R, double lambda)
{
    const std::size_t n = R.dim();
    const auto nd = static_cast<double>(n);
    const ComplexMatrix ric = ricci(R);
    ComplexMatrix deficit(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            deficit(i, j) = (i == j ? Complex(lambda) : Complex(0)) - ric(i, j);
    const Complex tr = deficit.trace();
    ComplexMatrix traceless = deficit;
    for (std::size_t i = 0; i < n; ++i)
        traceless(i, i) -= tr / nd;

    KahlerCurvature out = R;
    out += symmetric_product(traceless) * (1.0 / (nd + 2.0));
    out += symmetric_product(ComplexMatrix::identity(n)) * (tr.real() / (2.0 * nd * (nd + 1.0)));

    const double dev = einstein_deviation(out, lambda);
    if (!(dev <= einstein_projection_tolerance))
        throw std::logic_error("Einstein projection missed its target: max |Ric - lambda Id| = " + std::to_string(dev));
    return out;
}

// R0 = R - lambda/(n+1) (g g + g g); vanishes iff the holomorphic sectional
// curvature is constant.
inline KahlerCurvature rm0(const KahlerCurvature &R, double lambda)
{
    const auto n = static_cast<double>(R.dim());
    return R - model_tensor(R.dim(), lambda / (n + 1.0));
}

// Left side of
//   sum_{k,i,p,r} (R^k_{i p pbar} R^i_{k r rbar} - R^k_{i p rbar} R^i_{k r pbar}) = |Ric|^2 - |Rm|^2
// with R^k_{i p qbar} = R_{p qbar i kbar} (index raised by the unit metric).
inline Complex contraction_lhs(const KahlerCurvature &R)
{
    const std::size_t n = R.dim();
    auto up = [&R](std::size_t k, std::size_t i, std::size_t p, std::size_t q) { return R(p, q, i, k); };
    Complex acc = 0;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t r = 0; r < n; ++r)
                    acc += up(k, i, p, p) * up(i, k, r, r) - up(k, i, p, r) * up(i, k, r, p);
    return acc;
}

inline double contraction_identity_residual(const KahlerCurvature &R)
{
    return std::abs(contraction_lhs(R) - Complex(norm_sq_ric(R) - norm_sq_rm(R)));
}

inline constexpr double einstein_input_tolerance = 1e-8;

// Pointwise density |R0|^2 / (n(n-1) 4 pi^2) of the Chern number gap
// (2 c_2 - n/(n+1) c_1^2) . [omega]^{n-2}.
inline double chern_gap(const KahlerCurvature &R, double lambda)
{
    const double dev = einstein_deviation(R, lambda);
    if (!(dev <= einstein_input_tolerance))
        throw std::invalid_argument("chern_gap needs an Einstein tensor; max |Ric - lambda Id| = " +
                                    std::to_string(dev));
    const auto n = static_cast<double>(R.dim());
    return norm_sq_rm(rm0(R, lambda)) / (n * (n - 1.0) * 4.0 * std::numbers::pi * std::numbers::pi);
}

// R(v, vbar, v, vbar) / |v|^4
inline double holomorphic_sectional_curvature(const KahlerCurvature &R, const std::vector<Complex> &v)
{
    const std::size_t n = R.dim();
    if (v.size() != n)
        throw std::invalid_argument("vector dimension does not match the tensor");
    double norm_sq = 0;
    for (const auto &x : v)
        norm_sq += std::norm(x);
    if (norm_sq == 0)
        throw std::invalid_argument("holomorphic sectional curvature of the zero vector");
    Complex acc = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc += R(i, j, k, l) * v[i] * std::conj(v[j]) * v[k] * std::conj(v[l]);
    return acc.real() / (norm_sq * norm_sq);
}

} // namespace cpn

#endif // CPN_CURVATURE_HPP
