#include "lab5/forms.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace lab5 {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;
using Eigen::VectorXd;

constexpr double kDegeneracyTol = 1e-9;

std::complex<double> root_of_unity(std::int64_t r, std::int64_t num) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(num % r) / static_cast<double>(r);
    return {std::cos(angle), std::sin(angle)};
}

void require_same_ring(const GroupRingElement& x, const GroupRingElement& y) {
    if (x.modulus() != y.modulus())
        throw precondition_error("group ring moduli differ: " + std::to_string(x.modulus()) +
                                 " vs " + std::to_string(y.modulus()));
}

} // namespace

GroupRingElement::GroupRingElement(std::int64_t r) : r_(r), c_(static_cast<std::size_t>(r), 0) {
    if (r < 1) throw precondition_error("group ring modulus must be >= 1");
}

GroupRingElement::GroupRingElement(std::int64_t r, std::vector<std::int64_t> coeffs)
    : r_(r), c_(std::move(coeffs)) {
    if (r < 1) throw precondition_error("group ring modulus must be >= 1");
    if (static_cast<std::int64_t>(c_.size()) != r)
        throw precondition_error("coefficient vector must have length r = " + std::to_string(r));
}

GroupRingElement GroupRingElement::basis(std::int64_t r, std::int64_t power, std::int64_t coeff) {
    GroupRingElement x(r);
    std::int64_t g = power % r;
    if (g < 0) g += r;
    x.c_[static_cast<std::size_t>(g)] = coeff;
    return x;
}

std::int64_t GroupRingElement::coeff(std::int64_t g) const {
    std::int64_t i = g % r_;
    if (i < 0) i += r_;
    return c_[static_cast<std::size_t>(i)];
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    require_same_ring(*this, o);
    GroupRingElement out(r_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] + o.c_[i];
    return out;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const {
    require_same_ring(*this, o);
    GroupRingElement out(r_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = c_[i] - o.c_[i];
    return out;
}

GroupRingElement GroupRingElement::operator-() const {
    GroupRingElement out(r_);
    for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = -c_[i];
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    require_same_ring(*this, o);
    GroupRingElement out(r_);
    for (std::int64_t i = 0; i < r_; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (std::int64_t j = 0; j < r_; ++j)
            out.c_[static_cast<std::size_t>((i + j) % r_)] +=
                c_[static_cast<std::size_t>(i)] * o.c_[static_cast<std::size_t>(j)];
    }
    return out;
}

GroupRingElement GroupRingElement::involute() const {
    GroupRingElement out(r_);
    for (std::int64_t g = 0; g < r_; ++g)
        out.c_[static_cast<std::size_t>((r_ - g) % r_)] = c_[static_cast<std::size_t>(g)];
    return out;
}

std::int64_t GroupRingElement::augment() const {
    std::int64_t s = 0;
    for (std::int64_t v : c_) s += v;
    return s;
}

std::int64_t GroupRingElement::pc() const { return c_[0]; }

std::complex<double> GroupRingElement::character(std::int64_t j) const {
    std::complex<double> s = 0.0;
    for (std::int64_t g = 0; g < r_; ++g)
        s += static_cast<double>(c_[static_cast<std::size_t>(g)]) * root_of_unity(r_, j * g);
    return s;
}

LambdaMatrix::LambdaMatrix(std::int64_t r, int d)
    : r_(r), d_(d), e_(static_cast<std::size_t>(d) * d, GroupRingElement(r)) {
    if (d < 1) throw precondition_error("matrix rank must be >= 1");
}

GroupRingElement& LambdaMatrix::at(int i, int j) {
    return e_[static_cast<std::size_t>(i) * d_ + j];
}

const GroupRingElement& LambdaMatrix::at(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * d_ + j];
}

bool is_skew_hermitian(const LambdaMatrix& M) {
    for (int i = 0; i < M.rank(); ++i)
        for (int j = 0; j < M.rank(); ++j)
            if (M.at(j, i).involute() != -M.at(i, j)) return false;
    return true;
}

LambdaMatrix hyperbolic(int n, std::int64_t r) {
    if (n < 1) throw precondition_error("hyperbolic: n must be >= 1");
    LambdaMatrix H(r, 2 * n);
    for (int i = 0; i < n; ++i) {
        H.at(2 * i, 2 * i + 1) = GroupRingElement::basis(r, 0, 1);
        H.at(2 * i + 1, 2 * i) = GroupRingElement::basis(r, 0, -1);
    }
    return H;
}

LambdaMatrix direct_sum(const LambdaMatrix& A, const LambdaMatrix& B) {
    if (A.modulus() != B.modulus()) throw precondition_error("direct_sum: moduli differ");
    LambdaMatrix S(A.modulus(), A.rank() + B.rank());
    for (int i = 0; i < A.rank(); ++i)
        for (int j = 0; j < A.rank(); ++j) S.at(i, j) = A.at(i, j);
    for (int i = 0; i < B.rank(); ++i)
        for (int j = 0; j < B.rank(); ++j) S.at(A.rank() + i, A.rank() + j) = B.at(i, j);
    return S;
}

namespace {

MatrixXcd character_matrix(const LambdaMatrix& M, std::int64_t j) {
    MatrixXcd C(M.rank(), M.rank());
    for (int a = 0; a < M.rank(); ++a)
        for (int b = 0; b < M.rank(); ++b) C(a, b) = M.at(a, b).character(j);
    return C;
}

// signature by eigenvalue counting; doubles as the degeneracy detector
std::int64_t counted_signature(const MatrixXcd& hermitian, const std::string& where) {
    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(hermitian);
    if (solver.info() != Eigen::Success)
        throw degenerate_form_error("eigenvalue solver failed in " + where);
    const double tol = kDegeneracyTol * std::max(1.0, hermitian.norm());
    std::int64_t pos = 0, neg = 0;
    for (Eigen::Index t = 0; t < solver.eigenvalues().size(); ++t) {
        const double ev = solver.eigenvalues()(t);
        if (std::fabs(ev) <= tol)
            throw degenerate_form_error("degenerate form: eigenvalue " + std::to_string(ev) +
                                        " within tolerance in " + where);
        (ev > 0 ? pos : neg) += 1;
    }
    return pos - neg;
}

// integer matrix of the form p_c(lambda) on the rank r*d lattice with basis
// (module index i, group element g) at position i*r + g:
//   B[(i,g),(j,h)] = coefficient of (g - h) in M_ij
Eigen::MatrixXd pc_form_matrix(const LambdaMatrix& M) {
    const std::int64_t r = M.modulus();
    const Eigen::Index dim = static_cast<Eigen::Index>(r) * M.rank();
    Eigen::MatrixXd B(dim, dim);
    for (int i = 0; i < M.rank(); ++i)
        for (std::int64_t g = 0; g < r; ++g)
            for (int j = 0; j < M.rank(); ++j)
                for (std::int64_t h = 0; h < r; ++h)
                    B(i * r + g, j * r + h) = static_cast<double>(M.at(i, j).coeff(g - h));
    return B;
}

// permutation action of the group generator power g on the lattice basis
MatrixXcd group_action(std::int64_t r, int d, std::int64_t g) {
    const Eigen::Index dim = static_cast<Eigen::Index>(r) * d;
    MatrixXcd T = MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < d; ++i)
        for (std::int64_t a = 0; a < r; ++a) T(i * r + (a + g) % r, i * r + a) = 1.0;
    return T;
}

void require_skew(const LambdaMatrix& M, const std::string& where) {
    if (!is_skew_hermitian(M)) throw precondition_error(where + ": matrix is not skew-hermitian");
}

Multisignature sigma_from_values(std::int64_t r, const std::vector<std::complex<double>>& ms) {
    Multisignature out{r, std::vector<std::int64_t>(static_cast<std::size_t>(r), 0)};
    for (std::int64_t j = 0; j < r; ++j) {
        std::complex<double> acc = 0.0;
        for (std::int64_t g = 0; g < r; ++g)
            acc += ms[static_cast<std::size_t>(g)] * root_of_unity(r, -j * g);
        const double sigma = acc.real() / static_cast<double>(r);
        const double rounded = std::round(sigma);
        if (std::fabs(sigma - rounded) > 1e-6 || std::fabs(acc.imag()) > 1e-6 * r)
            throw degenerate_form_error("multisignature character values are not integral");
        out.sigma[static_cast<std::size_t>(j)] = static_cast<std::int64_t>(rounded);
    }
    return out;
}

Multisignature eigenspace_multisignature(const LambdaMatrix& M, const MatrixXcd* raw_product) {
    require_skew(M, "multisignature");
    const std::int64_t r = M.modulus();
    const int d = M.rank();
    const Eigen::Index dim = static_cast<Eigen::Index>(r) * d;

    const Eigen::MatrixXd B = pc_form_matrix(M);

    MatrixXcd K; // hermitianized operator whose sign split gives the eigenspaces
    MatrixXcd basis_transform = MatrixXcd::Identity(dim, dim);
    MatrixXcd basis_transform_inv = MatrixXcd::Identity(dim, dim);
    if (raw_product != nullptr) {
        // average the product over the group, then change coordinates so the
        // averaged product becomes standard
        MatrixXcd P = MatrixXcd::Zero(dim, dim);
        for (std::int64_t g = 0; g < r; ++g) {
            const MatrixXcd T = group_action(r, d, g);
            P += T.adjoint() * (*raw_product) * T;
        }
        P = (P + P.adjoint()) / 2.0;
        Eigen::SelfAdjointEigenSolver<MatrixXcd> psolver(P);
        if (psolver.info() != Eigen::Success || psolver.eigenvalues().minCoeff() <= 0.0)
            throw precondition_error("multisignature: inner product must be positive definite");
        const VectorXd roots = psolver.eigenvalues().cwiseSqrt();
        basis_transform = psolver.eigenvectors() * roots.asDiagonal() *
                          psolver.eigenvectors().adjoint();
        basis_transform_inv = psolver.eigenvectors() * roots.cwiseInverse().asDiagonal() *
                              psolver.eigenvectors().adjoint();
        K = std::complex<double>(0.0, 1.0) *
            (basis_transform_inv * B.cast<std::complex<double>>() * basis_transform_inv);
    } else {
        K = std::complex<double>(0.0, 1.0) * B.cast<std::complex<double>>();
    }
    K = (K + K.adjoint()) / 2.0;

    Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(K);
    if (solver.info() != Eigen::Success)
        throw degenerate_form_error("eigenvalue solver failed in multisignature");
    const double tol = kDegeneracyTol * std::max(1.0, K.norm());
    for (Eigen::Index t = 0; t < dim; ++t)
        if (std::fabs(solver.eigenvalues()(t)) <= tol)
            throw degenerate_form_error("degenerate form: eigenvalue within tolerance");

    // character of the group action on each eigenspace half
    std::vector<std::complex<double>> ms(static_cast<std::size_t>(r), 0.0);
    for (std::int64_t g = 0; g < r; ++g) {
        const MatrixXcd T = basis_transform * group_action(r, d, g) * basis_transform_inv;
        std::complex<double> plus = 0.0, minus = 0.0;
        for (Eigen::Index t = 0; t < dim; ++t) {
            const VectorXcd v = solver.eigenvectors().col(t);
            const std::complex<double> trace_part = v.dot(T * v); // conjugates the left factor
            (solver.eigenvalues()(t) > 0 ? plus : minus) += trace_part;
        }
        ms[static_cast<std::size_t>(g)] = plus - minus;
    }
    return sigma_from_values(r, ms);
}

} // namespace

bool is_nondegenerate(const LambdaMatrix& M) {
    if (M.rank() < 1) return false;
    for (std::int64_t j = 0; j < M.modulus(); ++j) {
        const MatrixXcd C = character_matrix(M, j);
        const double bound = std::pow(std::max(1.0, C.norm()), M.rank());
        if (std::abs(C.determinant()) <= kDegeneracyTol * bound) return false;
    }
    return true;
}

Multisignature multisignature(const LambdaMatrix& M) {
    return eigenspace_multisignature(M, nullptr);
}

Multisignature multisignature_with_product(const LambdaMatrix& M,
                                           const std::vector<std::complex<double>>& product) {
    const Eigen::Index dim = static_cast<Eigen::Index>(M.modulus()) * M.rank();
    if (static_cast<Eigen::Index>(product.size()) != dim * dim)
        throw precondition_error("multisignature_with_product: product must be (r*d)^2 entries");
    MatrixXcd P(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i)
        for (Eigen::Index j = 0; j < dim; ++j) P(i, j) = product[static_cast<std::size_t>(i * dim + j)];
    return eigenspace_multisignature(M, &P);
}

Multisignature multisignature_characters(const LambdaMatrix& M) {
    require_skew(M, "multisignature_characters");
    const std::int64_t r = M.modulus();
    Multisignature out{r, std::vector<std::int64_t>(static_cast<std::size_t>(r), 0)};
    for (std::int64_t j = 0; j < r; ++j) {
        const MatrixXcd K = std::complex<double>(0.0, 1.0) * character_matrix(M, j);
        out.sigma[static_cast<std::size_t>(j)] =
            counted_signature((K + K.adjoint()) / 2.0, "character " + std::to_string(j));
    }
    return out;
}

std::complex<double> Multisignature::value_at(std::int64_t g) const {
    std::complex<double> acc = 0.0;
    for (std::int64_t j = 0; j < r; ++j)
        acc += static_cast<double>(sigma[static_cast<std::size_t>(j)]) * root_of_unity(r, j * g);
    return acc;
}

std::vector<std::complex<double>> Multisignature::values() const {
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(r));
    for (std::int64_t g = 0; g < r; ++g) out.push_back(value_at(g));
    return out;
}

Z2QuadraticForm::Z2QuadraticForm(std::vector<std::vector<int>> gram,
                                 std::vector<std::vector<int>> basis,
                                 std::vector<int> mu)
    : n_(static_cast<int>(basis.size() / 2)),
      gram_(std::move(gram)),
      basis_(std::move(basis)),
      mu_(std::move(mu)) {
    const std::size_t dim = gram_.size();
    if (dim == 0 || basis_.size() != 2 * static_cast<std::size_t>(n_) || basis_.size() % 2 != 0)
        throw precondition_error("quadratic form needs a nonempty basis of even size");
    if (mu_.size() != dim)
        throw precondition_error("refinement values must cover the ambient basis");
    for (const auto& row : gram_)
        if (row.size() != dim) throw precondition_error("gram matrix must be square");
    for (const auto& v : basis_)
        if (v.size() != dim) throw precondition_error("basis vectors must have ambient dimension");

    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) {
            if (bilinear(basis_[i], basis_[n_ + j]) != (i == j ? 1 : 0) ||
                bilinear(basis_[i], basis_[j]) != 0 ||
                bilinear(basis_[n_ + i], basis_[n_ + j]) != 0)
                throw precondition_error("basis is not symplectic");
        }
    }
}

int Z2QuadraticForm::bilinear(const std::vector<int>& x, const std::vector<int>& y) const {
    int acc = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if ((x[i] & 1) == 0) continue;
        for (std::size_t j = 0; j < gram_.size(); ++j)
            if (y[j] & 1) acc ^= gram_[i][j] & 1;
    }
    return acc;
}

int Z2QuadraticForm::q(const std::vector<int>& v) const {
    // q(sum e_i) = sum mu_i + sum_{i<j} B(e_i, e_j)
    int acc = 0;
    for (std::size_t i = 0; i < gram_.size(); ++i) {
        if ((v[i] & 1) == 0) continue;
        acc ^= mu_[i] & 1;
        for (std::size_t j = i + 1; j < gram_.size(); ++j)
            if (v[j] & 1) acc ^= gram_[i][j] & 1;
    }
    return acc;
}

int arf(const Z2QuadraticForm& form) {
    int acc = 0;
    for (int i = 0; i < form.pairs(); ++i) acc ^= form.q(form.basis_a(i)) & form.q(form.basis_b(i));
    return acc;
}

Z2QuadraticForm augment_form(const LambdaMatrix& M, const std::vector<int>& mu_values) {
    require_skew(M, "augment_form");
    const int d = M.rank();
    if (mu_values.size() != static_cast<std::size_t>(d))
        throw precondition_error("augment_form: need one refinement value per basis vector");

    std::vector<std::vector<int>> gram(d, std::vector<int>(d, 0));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gram[i][j] = static_cast<int>(((M.at(i, j).augment() % 2) + 2) % 2);

    // symplectic basis extraction over the two-element field
    std::vector<std::vector<int>> pool;
    for (int i = 0; i < d; ++i) {
        std::vector<int> e(d, 0);
        e[i] = 1;
        pool.push_back(e);
    }
    auto pair_with = [&](const std::vector<int>& x, const std::vector<int>& y) {
        int acc = 0;
        for (int i = 0; i < d; ++i)
            if (x[i])
                for (int j = 0; j < d; ++j)
                    if (y[j]) acc ^= gram[i][j];
        return acc;
    };
    std::vector<std::vector<int>> a_side, b_side;
    while (!pool.empty()) {
        std::size_t ia = 0, ib = 0;
        bool found = false;
        for (std::size_t i = 0; i < pool.size() && !found; ++i)
            for (std::size_t j = i + 1; j < pool.size() && !found; ++j)
                if (pair_with(pool[i], pool[j]) == 1) { ia = i; ib = j; found = true; }
        if (!found) {
            // leftover vectors pair trivially with everything: the radical
            for (const auto& v : pool)
                for (int i = 0; i < d; ++i)
                    if (v[i])
                        throw degenerate_form_error("augment_form: mod-2 reduction is degenerate");
            break;
        }
        std::vector<int> x = pool[ia], y = pool[ib];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ib));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ia));
        for (auto& w : pool) {
            const int cx = pair_with(w, y), cy = pair_with(w, x);
            for (int i = 0; i < d; ++i) w[i] ^= (cx & x[i]) ^ (cy & y[i]);
        }
        a_side.push_back(std::move(x));
        b_side.push_back(std::move(y));
    }
    if (a_side.empty()) throw degenerate_form_error("augment_form: mod-2 reduction is degenerate");

    std::vector<std::vector<int>> basis = a_side;
    basis.insert(basis.end(), b_side.begin(), b_side.end());
    return Z2QuadraticForm(gram, basis, mu_values);
}

} // namespace lab5
